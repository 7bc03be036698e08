#pragma once

#include <vector>

#include "shimura/lattice_points.hpp"
#include "shimura/orders.hpp"

namespace shimura {

/// O^x / Z^x: one norm-1 representative per +- pair, sign-canonical, sorted.
struct UnitGroup {
    std::vector<Quaternion> elements;
    long order = 0;
};

// Enumerates all norm-1 lattice points of O and verifies closure modulo sign.
UnitGroup unit_group(const EichlerOrderData& O);

/// Canonical coset representative of a class in O/gamma*O, as reduced order
/// coordinates with respect to the Hermite basis of the sublattice.
struct ResidueElement {
    Vec4z coords;
    bool operator==(const ResidueElement& o) const { return coords == o.coords; }
    bool operator<(const ResidueElement& o) const { return compare(coords, o.coords) < 0; }
};

// The set (O/xi O)_r^x: image of (O/Nm(xi) O)^x under the natural projection
// lambda_r onto O/xi O. Sorted canonical representatives.
std::vector<ResidueElement> residue_units_r(const EichlerOrderData& O, const Quaternion& xi);

// True iff u -> lambda_r(u + Nm(xi) O) is a bijection from O^x (when 2 is not
// in xi*O) or O^x/Z^x (when 2 in xi*O) onto (O/xi O)_r^x.
bool right_unit_property(const EichlerOrderData& O, const Quaternion& xi);

// Searches candidates xi with 2 in xi*O by ascending norm (1, 2, 4) for the
// right-unit property and returns the canonical representative of the first
// passing norm level. For the built-in table rows this is the distinguished
// table element, which is asserted to be among the passers.
Quaternion choose_xi(const EichlerOrderData& O);

// Principal generator of the integral right ideal I = sum_i g_i O, using
// h(D,N)=1: computes the lattice of I, its reduced norm n(I) = sqrt([O:I]),
// enumerates the norm-n(I) vectors of I and returns the canonical one that
// generates I exactly (verified by lattice equality).
Quaternion right_ideal_generator(const EichlerOrderData& O, const std::vector<Quaternion>& gens);

// alpha == 1 mod xi*O (right ideal congruence used by the factorisation
// theorems below).
bool xi_primary_right(const Quaternion& alpha, const EichlerOrderData& O, const Quaternion& xi);

// Factorisation of a primitive xi-primary alpha with Nm(alpha) = p_1 ... p_s
// (primes coprime to D*N, taken in ascending order) into primitive
// xi-primary irreducibles with Nm(pi_i) = p_i. Factors are returned
// sign-canonical, so the product equals +-alpha.
std::vector<Quaternion> zerlegungssatz_factor(const Quaternion& alpha, const EichlerOrderData& O,
                                              const Quaternion& xi);

/// alpha = p^n * beta_1 ... beta_r * unit, unique up to sign.
struct LocalizedFactorization {
    long n = 0;
    std::vector<Quaternion> betas;  // xi-primary, Nm = p, sign-canonical
    Quaternion unit;                // in O^x, sign-canonical
};

// Decomposition of alpha in O[1/p]^x (i.e. Nm(alpha) = p^s): strips the
// p-power content, adjusts into the xi-primary class and factors the rest.
LocalizedFactorization localized_unit_factor(const Quaternion& alpha, long p,
                                             const EichlerOrderData& O, const Quaternion& xi);

}  // namespace shimura
