#pragma once

#include <string>

#include "shimura/linalg.hpp"

namespace shimura {

/// Presentation H = (a,b / Q) with i^2 = a, j^2 = b, k = ij = -ji.
/// Only definite presentations (a < 0, b < 0) are accepted.
struct AlgebraData {
    long a = 0;
    long b = 0;
    long discriminant = 0;  // product of the finite ramified primes
};

// Computes the discriminant from local Hilbert symbols at 2 and the odd
// primes dividing a*b. Rejects non-definite presentations.
AlgebraData make_algebra(long a, long b);

// Hilbert symbol (a,b)_p for a prime p (p = 2 allowed); returns +1 or -1.
int hilbert_symbol(long a, long b, long p);

/// Element of H in {1, i, j, k} coordinates, exact rationals throughout.
struct Quaternion {
    Vec4q c{};

    bool operator==(const Quaternion& o) const { return compare(c, o.c) == 0; }
    bool operator<(const Quaternion& o) const { return compare(c, o.c) < 0; }
};

inline Quaternion quat(Rat x0, Rat x1, Rat x2, Rat x3) {
    return Quaternion{{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}};
}
inline Quaternion quat(long x0, long x1 = 0, long x2 = 0, long x3 = 0) {
    return Quaternion{{Rat(x0), Rat(x1), Rat(x2), Rat(x3)}};
}
inline const Quaternion& quat_one() {
    static const Quaternion one = quat(1);
    return one;
}

Quaternion multiply(const Quaternion& q1, const Quaternion& q2, const AlgebraData& alg);
Quaternion add(const Quaternion& q1, const Quaternion& q2);
Quaternion subtract(const Quaternion& q1, const Quaternion& q2);
Quaternion negate(const Quaternion& q);
Quaternion scale(const Rat& s, const Quaternion& q);
Quaternion conjugate(const Quaternion& q);
Rat reduced_norm(const Quaternion& q, const AlgebraData& alg);
Rat reduced_trace(const Quaternion& q);
bool is_zero(const Quaternion& q);

struct QuaternionInvariants {
    Quaternion conjugate;
    Rat norm;
    Rat trace;
};
QuaternionInvariants invariants_of(const Quaternion& q, const AlgebraData& alg);

// Representative of {q, -q} whose first nonzero coordinate is positive.
Quaternion canonical_sign(const Quaternion& q);

// e.g. "-1/2 - 1/2*i - 1/2*j + 1/2*k"
std::string to_display_string(const Quaternion& q);

}  // namespace shimura
