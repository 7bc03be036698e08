#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shimura/quaternion.hpp"

namespace shimura {

// r with r^2 == a mod p^k, for odd p not dividing a and (a/p) = 1; canonical
// branch: the lift whose residue mod p lies in [1, (p-1)/2]. Tonelli-Shanks
// mod p followed by Hensel lifting. Throws inadmissible_prime when a is not
// a quadratic residue mod p.
Int sqrt_hensel(const Int& a, long p, int k);

/// Normalised point of P^1(F_p): (x:1) with 0 <= x < p, or infinity = (1:0).
struct ProjPoint {
    long x = 0;
    bool inf = false;

    static ProjPoint finite(long v) { return ProjPoint{v, false}; }
    static ProjPoint infinity() { return ProjPoint{0, true}; }
    static ProjPoint from_index(long i, long p) {
        return i == p ? infinity() : finite(i);
    }
    long index(long p) const { return inf ? p : x; }
    std::string str() const { return inf ? "1:0" : std::to_string(x) + ":1"; }

    bool operator==(const ProjPoint& o) const { return inf == o.inf && (inf || x == o.x); }
    bool operator<(const ProjPoint& o) const {  // finite ascending, then infinity
        if (inf != o.inf) return !inf;
        return x < o.x;
    }
};

// normalise (x0 : x1) over F_p
ProjPoint normalize_point(const Int& x0, const Int& x1, long p);

/// 2x2 matrix over Z/p^k with a global power-of-p scale factored out so the
/// residue entries are integral: the represented matrix is p^scale * (e mod p^k).
struct PadicMatrix {
    long p = 0;
    int k = 1;
    Int pk;                 // p^k
    int scale = 0;
    std::array<Int, 4> e;   // row-major entries in [0, p^k)

    Int det_mod_pk() const { return mod_pos(e[0] * e[3] - e[1] * e[2], pk); }
    Int trace_mod_pk() const { return mod_pos(e[0] + e[3], pk); }
};

PadicMatrix matrix_mul(const PadicMatrix& A, const PadicMatrix& B);

// The matrix immersion
//   x0 + x1 i + x2 j + x3 k  ->  [ x0 + x1 r      x2 + x3 r ]
//                                [ b (x2 - x3 r)  x0 - x1 r ]
// with r = sqrt_hensel(a, p, k). Requires (a/p) = 1 and denominators of q
// invertible after factoring out the common power of p.
PadicMatrix phi_p(const Quaternion& q, const AlgebraData& alg, long p, int k);

// For Nm(q) = p and Tr(q) not divisible by p: the reductions in P^1(F_p) of
// the attracting / repelling fixed points of the induced Moebius map. The
// mod-p matrix M has det == 0 and M^2 == Tr(M) M, so the attracting point is
// the column space (unit-eigenvalue line) and the repelling one the kernel.
std::pair<ProjPoint, ProjPoint> fixed_point_reductions(const Quaternion& q,
                                                       const AlgebraData& alg, long p);

// Moebius action of a norm-1 unit on P^1(F_p) as a permutation of the p+1
// point indices (0..p-1 for (x:1), p for infinity).
std::vector<long> unit_permutation(const Quaternion& u, const AlgebraData& alg, long p);

}  // namespace shimura
