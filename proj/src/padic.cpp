#include "shimura/padic.hpp"

#include <sstream>

namespace shimura {

namespace {

// Tonelli-Shanks square root of a modulo an odd prime p; a must be a residue.
Int sqrt_mod_p(const Int& a0, const Int& p) {
    Int a = mod_pos(a0, p);
    if (a == 0) return 0;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // write p - 1 = q * 2^s with q odd
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m(s), c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = mod_pos(tt * tt, p);
            ++i;
            SHIMURA_CHECK(Int(i) < m, "Tonelli-Shanks order search failed");
        }
        Int b = c;
        for (unsigned long j = 0; j + 1 + i < m.get_ui(); ++j) b = mod_pos(b * b, p);
        m = Int(i);
        c = mod_pos(b * b, p);
        t = mod_pos(t * c, p);
        r = mod_pos(r * b, p);
    }
    return r;
}

}  // namespace

Int sqrt_hensel(const Int& a, long p, int k) {
    SHIMURA_CHECK(p > 2 && k >= 1, "sqrt_hensel needs an odd prime and k >= 1");
    Int pz(p);
    SHIMURA_CHECK(mod_pos(a, pz) != 0, "sqrt_hensel: p divides a");
    if (legendre_symbol(a, pz) != 1) {
        std::ostringstream os;
        os << "presentation not split at p = " << p << ": a = " << a.get_str()
           << " is not a quadratic residue";
        throw inadmissible_prime(os.str());
    }
    Int r = sqrt_mod_p(a, pz);
    Int mod = pz;
    for (int i = 1; i < k; ++i) {
        // Hensel step: r <- r - (r^2 - a) / (2r) mod p^{i+1}
        mod *= pz;
        Int num = mod_pos(r * r - a, mod);
        Int inv2r = inv_mod(mod_pos(2 * r, mod), mod);
        r = mod_pos(r - num * inv2r, mod);
    }
    // canonical branch: residue mod p in [1, (p-1)/2]
    if (mod_pos(r, pz) > (p - 1) / 2) r = mod - r;
    return r;
}

ProjPoint normalize_point(const Int& x0, const Int& x1, long p) {
    Int pz(p);
    Int a = mod_pos(x0, pz), b = mod_pos(x1, pz);
    SHIMURA_CHECK(a != 0 || b != 0, "cannot normalise the zero vector");
    if (b != 0) return ProjPoint::finite(Int(mod_pos(a * inv_mod(b, pz), pz)).get_si());
    return ProjPoint::infinity();
}

PadicMatrix matrix_mul(const PadicMatrix& A, const PadicMatrix& B) {
    SHIMURA_CHECK(A.p == B.p && A.k == B.k, "matrix precision mismatch");
    PadicMatrix C;
    C.p = A.p;
    C.k = A.k;
    C.pk = A.pk;
    C.scale = A.scale + B.scale;
    C.e[0] = mod_pos(A.e[0] * B.e[0] + A.e[1] * B.e[2], A.pk);
    C.e[1] = mod_pos(A.e[0] * B.e[1] + A.e[1] * B.e[3], A.pk);
    C.e[2] = mod_pos(A.e[2] * B.e[0] + A.e[3] * B.e[2], A.pk);
    C.e[3] = mod_pos(A.e[2] * B.e[1] + A.e[3] * B.e[3], A.pk);
    return C;
}

PadicMatrix phi_p(const Quaternion& q, const AlgebraData& alg, long p, int k) {
    Int r = sqrt_hensel(Int(alg.a), p, k);
    Int pk = pow_int(Int(p), static_cast<unsigned long>(k));

    // entries as exact rationals in the basis {1, r}
    const Vec4q& x = q.c;
    Rat b(alg.b);
    Rat rr(r);
    std::array<Rat, 4> ent = {x[0] + x[1] * rr, x[2] + x[3] * rr, b * (x[2] - x[3] * rr),
                              x[0] - x[1] * rr};

    // factor out the common power of p so the residues are integral
    auto val_p = [p](const Rat& v) {
        SHIMURA_CHECK(v != 0, "valuation of zero");
        long e = 0;
        Int n = v.get_num();
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        Int d = v.get_den();
        while (d % p == 0) {
            d /= p;
            --e;
        }
        return e;
    };
    long scale = 0;
    bool any = false;
    for (const Rat& v : ent)
        if (v != 0) {
            long e = val_p(v);
            scale = any ? std::min(scale, e) : e;
            any = true;
        }
    if (!any) scale = 0;

    PadicMatrix M;
    M.p = p;
    M.k = k;
    M.pk = pk;
    M.scale = static_cast<int>(scale);
    Rat unscale = 1;
    if (scale > 0)
        unscale = Rat(1) / Rat(pow_int(Int(p), static_cast<unsigned long>(scale)));
    else if (scale < 0)
        unscale = Rat(pow_int(Int(p), static_cast<unsigned long>(-scale)));
    for (int idx = 0; idx < 4; ++idx) {
        Rat v = ent[idx] * unscale;
        Int den = v.get_den();
        SHIMURA_CHECK(mod_pos(den, Int(p)) != 0, "denominator not invertible modulo p^k");
        M.e[idx] = mod_pos(v.get_num() * inv_mod(mod_pos(den, pk), pk), pk);
    }
    return M;
}

std::pair<ProjPoint, ProjPoint> fixed_point_reductions(const Quaternion& q,
                                                       const AlgebraData& alg, long p) {
    PadicMatrix M = phi_p(q, alg, p, 1);
    SHIMURA_CHECK(M.scale == 0, "norm-p element reduced to a scaled matrix");
    SHIMURA_CHECK(M.det_mod_pk() == 0, "reduction of a norm-p element must be singular");
    if (M.trace_mod_pk() == 0)
        throw std::domain_error("degenerate reduction: trace divisible by p");
    // attracting = column space, repelling = kernel of the rank-1 reduction
    ProjPoint att = (M.e[0] != 0 || M.e[2] != 0) ? normalize_point(M.e[0], M.e[2], p)
                                                 : normalize_point(M.e[1], M.e[3], p);
    ProjPoint rep = (M.e[1] != 0 || M.e[0] != 0) ? normalize_point(M.e[1], -M.e[0], p)
                                                 : normalize_point(M.e[3], -M.e[2], p);
    return {att, rep};
}

std::vector<long> unit_permutation(const Quaternion& u, const AlgebraData& alg, long p) {
    PadicMatrix M = phi_p(u, alg, p, 1);
    SHIMURA_CHECK(M.det_mod_pk() != 0, "unit matrix is singular mod p");
    std::vector<long> perm(p + 1);
    for (long i = 0; i <= p; ++i) {
        ProjPoint pt = ProjPoint::from_index(i, p);
        Int x0 = pt.inf ? 1 : pt.x, x1 = pt.inf ? 0 : 1;
        ProjPoint im = normalize_point(M.e[0] * x0 + M.e[1] * x1, M.e[2] * x0 + M.e[3] * x1, p);
        perm[i] = im.index(p);
    }
    return perm;
}

}  // namespace shimura
