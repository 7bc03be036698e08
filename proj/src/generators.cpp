#include "shimura/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shimura {

namespace {

Quaternion canonical_impure(const Quaternion& q) {
    Quaternion cands[4] = {q, negate(q), conjugate(q), negate(conjugate(q))};
    const Quaternion* best = nullptr;
    for (const Quaternion& c : cands) {
        if (reduced_trace(c) <= 0) continue;
        if (!best || c < *best) best = &c;
    }
    SHIMURA_CHECK(best != nullptr, "impure class without positive-trace member");
    return *best;
}

}  // namespace

GeneratorSet represent_prime(const EichlerOrderData& O, const Quaternion& xi, long p) {
    if (p == 2 || Int(O.D() * O.N()) % p == 0) {
        std::ostringstream os;
        os << "p = " << p << " divides 2*D*N";
        throw inadmissible_prime(os.str());
    }

    // alpha = 1 + w * M with M = (Hermite basis of O*xi) * (order basis);
    // Nm(alpha) = w G w^T + L.w + 1 with G = M A M^T, A = diag(1,-a,-b,ab).
    Lattice4 L = left_ideal_lattice(O, {xi});
    Mat4q M{};
    for (int i = 0; i < 4; ++i) M[i] = vec_mat(to_rat(L.rows()[i]), O.basis);
    Mat4q A{};
    A[0][0] = 1;
    A[1][1] = -Rat(O.algebra.a);
    A[2][2] = -Rat(O.algebra.b);
    A[3][3] = Rat(O.algebra.a) * Rat(O.algebra.b);
    Mat4q G = mat_mul(mat_mul(M, A), mat_transpose(M));
    Vec4q e0{Rat(1), Rat(0), Rat(0), Rat(0)};
    Vec4q lin = vec_mat(e0, mat_mul(A, mat_transpose(M)));  // (1/2) of the linear form
    // complete the square: shift h = G^{-1} lin, target p - 1 + h G h^T
    Vec4q h = vec_mat(lin, mat_transpose(mat_inverse(G)));
    Rat target = Rat(p) - 1 + dot(vec_mat(h, G), h);

    GeneratorSet gs;
    gs.D = O.D();
    gs.N = O.N();
    gs.p = p;
    for (const Vec4z& w : enumerate_quadric(G, h, target)) {
        Quaternion alpha = add(quat_one(), Quaternion{vec_mat(to_rat(w), M)});
        SHIMURA_CHECK(reduced_norm(alpha, O.algebra) == Rat(p), "enumerated element of wrong norm");
        gs.all_elements.push_back(alpha);
    }
    std::sort(gs.all_elements.begin(), gs.all_elements.end());

    if (gs.all_elements.size() != static_cast<size_t>(2 * (p + 1))) {
        std::ostringstream os;
        os << "#S~ = " << gs.all_elements.size() << " != 2(p+1) = " << 2 * (p + 1)
           << " for (D,N,p)=(" << O.D() << "," << O.N() << "," << p << ")";
        throw internal_error(os.str());
    }

    std::set<Quaternion> impure, pure;
    for (const Quaternion& q : gs.all_elements) {
        if (reduced_trace(q) == 0)
            pure.insert(canonical_sign(q));
        else
            impure.insert(canonical_impure(q));
    }
    gs.impure_reps.assign(impure.begin(), impure.end());
    gs.pure_reps.assign(pure.begin(), pure.end());
    gs.s = static_cast<long>(gs.impure_reps.size());
    gs.t = static_cast<long>(gs.pure_reps.size());
    SHIMURA_CHECK(4 * gs.s + 2 * gs.t == 2 * (p + 1), "4s + 2t != #S~");
    return gs;
}

long null_trace(const EichlerOrderData& O, const Quaternion& xi, long p) {
    return 2 * represent_prime(O, xi, p).t;
}

long schottky_rank(const GeneratorSet& gs) {
    if (gs.t != 0)
        throw std::domain_error("not Schottky: pure (trace-zero) generators present");
    SHIMURA_CHECK(gs.s == (gs.p + 1) / 2, "rank theorem violated: s != (p+1)/2");
    return gs.s;
}

}  // namespace shimura
