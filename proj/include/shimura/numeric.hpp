#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace shimura {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy. The CLI maps these onto its documented exit codes.
struct unsupported_family : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inadmissible_prime : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define SHIMURA_CHECK(cond, msg)                                                           \
    do {                                                                                   \
        if (!(cond))                                                                       \
            throw ::shimura::internal_error(std::string(msg) + " (" __FILE__ ":" +        \
                                            std::to_string(__LINE__) + ")");               \
    } while (0)

inline Rat ratq(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// representative in [0, m)
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    SHIMURA_CHECK(ok != 0, "element not invertible modulo m");
    return r;
}

inline Int pow_mod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline int legendre_symbol(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline int legendre_symbol(long a, long p) { return legendre_symbol(Int(a), Int(p)); }

}  // namespace shimura
