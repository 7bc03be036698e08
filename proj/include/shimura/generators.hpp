#pragma once

#include <vector>

#include "shimura/order_arithmetic.hpp"

namespace shimura {

/// S~ = {alpha in O : Nm(alpha) = p, alpha == 1 mod O*xi}, split into impure
/// (nonzero trace) classes {+-alpha, +-conj(alpha)} and pure (trace-zero)
/// classes {+-beta}, with #S~ = 4s + 2t.
struct GeneratorSet {
    long D = 0, N = 0;
    long p = 0;
    std::vector<Quaternion> all_elements;  // full S~, sorted
    std::vector<Quaternion> impure_reps;   // canonical: positive trace, lex tie-break
    std::vector<Quaternion> pure_reps;     // canonical sign
    long s = 0, t = 0;
};

// Exhaustive exact enumeration of the coset 1 + O*xi at norm p (substituting
// alpha = 1 + omega*xi and bounding the shifted positive definite form).
// Asserts the counting theorem #S~ = 2(p+1). Requires p odd, p coprime to DN.
//
// The congruence lattice is the left ideal O*xi: on every supported order
// this reproduces the published generator tables; for scalar xi the two
// one-sided ideals coincide.
GeneratorSet represent_prime(const EichlerOrderData& O, const Quaternion& xi, long p);

// t_xi(p): number of trace-zero elements of S~ (equals 2t).
long null_trace(const EichlerOrderData& O, const Quaternion& xi, long p);

// s, asserting the rank theorem s = (p+1)/2; requires t = 0.
long schottky_rank(const GeneratorSet& gs);

}  // namespace shimura
