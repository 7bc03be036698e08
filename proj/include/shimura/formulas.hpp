#pragma once

#include <map>

#include "shimura/generators.hpp"

namespace shimura {

struct EdgeCounts {
    long c1 = 0, c2 = 0, c3 = 0;
    bool operator==(const EdgeCounts&) const = default;
};

// Closed-form oriented-edge counts of the quotient graph for a supported
// family. Evaluates the per-family Legendre-symbol formulas and asserts
// integrality and the star-formula identity sum_n c_n * (#U / n) = p + 1;
// a non-integral evaluation means the prime is inadmissible for the row.
EdgeCounts table2_counts(long D, long N, long p);

// delta_p for the families (2,1), (3,1), (3,2): sums of the fixed-point
// counts w_{2,i}, each computed by filtering the enumerated S~ with a linear
// condition on the {1,i,j,k} coordinates and halving. For (2,1) an
// independent three-squares count is computed as well and asserted equal.
Int delta_p(long D, long N, const GeneratorSet& gs);
Int delta_p(long D, long N, long p, const EichlerOrderData& O, const Quaternion& xi);

// Genus of the quotient graph by the per-family closed form (with delta_p by
// enumeration where the formula needs it). Asserts integrality.
Int table3_genus(long D, long N, long p);
Int table3_genus(long D, long N, const GeneratorSet& gs);

// p - 1 == unit_order * (2g - 2) + sum_d w_d, exactly.
bool riemann_hurwitz_check(long p, long unit_order, const Int& genus,
                           const std::map<long, Int>& w_terms);

/// Everything the closed forms say about one (D, N, p).
struct ClosedFormReport {
    EdgeCounts counts;
    Int delta = 0;                // 0 for families whose formulas need no delta
    std::map<long, Int> w_terms;  // order d -> fixed point count w_d
    Int genus_gamma_p = 0;        // genus of the quotient graph
    Int genus_plus = 0;           // c1 + c2 + c3 - 1
    bool rh_ok = false;
};

ClosedFormReport closed_form_report(long D, long N, const GeneratorSet& gs);

}  // namespace shimura
