#include "shimura/quaternion.hpp"

#include <sstream>
#include <vector>

namespace shimura {

namespace {

long odd_part(long n, long& exponent) {
    exponent = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++exponent;
    }
    return n;
}

int hilbert_symbol_odd(long a, long b, long p) {
    long alpha = 0, beta = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    while (b % p == 0) {
        b /= p;
        ++beta;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && legendre_symbol(-1L, p) == -1) s = -s;
    if (beta & 1) s *= legendre_symbol(Int(a), Int(p));
    if (alpha & 1) s *= legendre_symbol(Int(b), Int(p));
    return s;
}

int hilbert_symbol_two(long a, long b) {
    long alpha, beta;
    long u = odd_part(a, alpha);
    long v = odd_part(b, beta);
    auto eps = [](long x) { return ((x - 1) / 2) & 1; };
    auto omega = [](long x) { return ((x * x - 1) / 8) & 1; };
    long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return (e & 1) ? -1 : 1;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

int hilbert_symbol(long a, long b, long p) {
    SHIMURA_CHECK(a != 0 && b != 0, "Hilbert symbol needs nonzero arguments");
    if (p == 2) return hilbert_symbol_two(a, b);
    return hilbert_symbol_odd(a, b, p);
}

AlgebraData make_algebra(long a, long b) {
    if (a >= 0 || b >= 0)
        throw std::domain_error("make_algebra: presentation (a,b) must be definite (a<0, b<0)");
    std::vector<long> candidates{2};
    auto push_unique = [&candidates](long p) {
        for (long q : candidates)
            if (q == p) return;
        candidates.push_back(p);
    };
    for (long p : prime_factors(a)) push_unique(p);
    for (long p : prime_factors(b)) push_unique(p);
    long disc = 1;
    for (long p : candidates)
        if (hilbert_symbol(a, b, p) == -1) disc *= p;
    return AlgebraData{a, b, disc};
}

Quaternion multiply(const Quaternion& q1, const Quaternion& q2, const AlgebraData& alg) {
    const Rat a(alg.a), b(alg.b);
    const Vec4q& x = q1.c;
    const Vec4q& y = q2.c;
    Quaternion z;
    z.c[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
    z.c[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
    z.c[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
    z.c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return z;
}

Quaternion add(const Quaternion& q1, const Quaternion& q2) { return Quaternion{q1.c + q2.c}; }

Quaternion subtract(const Quaternion& q1, const Quaternion& q2) { return Quaternion{q1.c - q2.c}; }

Quaternion negate(const Quaternion& q) {
    return quat(-q.c[0], -q.c[1], -q.c[2], -q.c[3]);
}

Quaternion scale(const Rat& s, const Quaternion& q) {
    return quat(s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]);
}

Quaternion conjugate(const Quaternion& q) {
    return quat(q.c[0], -q.c[1], -q.c[2], -q.c[3]);
}

Rat reduced_norm(const Quaternion& q, const AlgebraData& alg) {
    const Rat a(alg.a), b(alg.b);
    const Vec4q& x = q.c;
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

Rat reduced_trace(const Quaternion& q) { return 2 * q.c[0]; }

bool is_zero(const Quaternion& q) {
    return q.c[0] == 0 && q.c[1] == 0 && q.c[2] == 0 && q.c[3] == 0;
}

QuaternionInvariants invariants_of(const Quaternion& q, const AlgebraData& alg) {
    return QuaternionInvariants{conjugate(q), reduced_norm(q, alg), reduced_trace(q)};
}

Quaternion canonical_sign(const Quaternion& q) {
    for (int k = 0; k < 4; ++k) {
        if (q.c[k] != 0) return q.c[k] > 0 ? q : negate(q);
    }
    return q;
}

std::string to_display_string(const Quaternion& q) {
    static const char* names[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (q.c[k] == 0) continue;
        Rat v = q.c[k];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (k == 0) {
            os << v.get_str();
        } else if (v == 1) {
            os << names[k];
        } else {
            os << v.get_str() << "*" << names[k];
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace shimura
