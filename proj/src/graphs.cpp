#include "shimura/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace shimura {

std::map<long, long> LengthGraph::oriented_counts_by_length() const {
    std::map<long, long> c;
    for (const Edge& e : edges) ++c[e.length];
    return c;
}

long LengthGraph::count_with_length(long n) const {
    long c = 0;
    for (const Edge& e : edges)
        if (e.length == n) ++c;
    return c;
}

long LengthGraph::aller_retour_count() const {
    long c = 0;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].reverse == i) ++c;
    return c;
}

long LengthGraph::betti() const {
    long honest_oriented = 0;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].reverse != i) ++honest_oriented;
    return honest_oriented / 2 - static_cast<long>(vertices.size()) + 1;
}

bool LengthGraph::star_formula_ok() const {
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        long sum = 0;
        for (const Edge& e : edges) {
            if (e.origin != v) continue;
            if (vertices[v].length % e.length != 0) return false;
            sum += vertices[v].length / e.length;
        }
        if (sum != p + 1) return false;
    }
    return true;
}

PairingTable schottky_pairing(const GeneratorSet& gs, const AlgebraData& alg) {
    if (gs.t != 0)
        throw std::domain_error("pairing undefined: pure generators present (t > 0)");
    PairingTable pt;
    pt.p = gs.p;
    pt.involution.assign(gs.p + 1, -1);
    std::set<long> seen;
    for (int i = 0; i < static_cast<int>(gs.impure_reps.size()); ++i) {
        auto [att, rep] = fixed_point_reductions(gs.impure_reps[i], alg, gs.p);
        SHIMURA_CHECK(!(att == rep), "pairing involution has a fixed point");
        SHIMURA_CHECK(seen.insert(att.index(gs.p)).second &&
                          seen.insert(rep.index(gs.p)).second,
                      "fixed-point reductions are not pairwise distinct");
        PairingTable::Pair pr;
        pr.a = std::min(att, rep);
        pr.b = std::max(att, rep);
        pr.generator = i;
        pt.pairs.push_back(pr);
        pt.involution[att.index(gs.p)] = rep.index(gs.p);
        pt.involution[rep.index(gs.p)] = att.index(gs.p);
    }
    SHIMURA_CHECK(static_cast<long>(seen.size()) == gs.p + 1,
                  "pairing does not cover P^1(F_p)");
    std::sort(pt.pairs.begin(), pt.pairs.end(),
              [](const PairingTable::Pair& x, const PairingTable::Pair& y) {
                  return x.a < y.a;
              });
    return pt;
}

LengthGraph mumford_graph(const PairingTable& pt) {
    LengthGraph g;
    g.p = pt.p;
    g.vertices.push_back({1});
    // one mutually-reverse pair of oriented edges per pairing pair
    for (const PairingTable::Pair& pr : pt.pairs) {
        int i = static_cast<int>(g.edges.size());
        LengthGraph::Edge e1{i + 1, 0, 0, 1, {pr.a}, LengthGraph::EdgeKind::loop};
        LengthGraph::Edge e2{i, 0, 0, 1, {pr.b}, LengthGraph::EdgeKind::loop};
        g.edges.push_back(e1);
        g.edges.push_back(e2);
    }
    SHIMURA_CHECK(g.betti() == (pt.p + 1) / 2, "rose graph has wrong Betti number");
    SHIMURA_CHECK(g.star_formula_ok(), "star formula fails on the rose graph");
    return g;
}

LengthGraph quotient_by_units(const PairingTable& pt, const UnitGroup& U,
                              const AlgebraData& alg) {
    const long p = pt.p;
    std::vector<std::vector<long>> perms;
    for (const Quaternion& u : U.elements) perms.push_back(unit_permutation(u, alg, p));

    // orbits of P^1(F_p) under the unit group
    std::vector<long> orbit_of(p + 1, -1);
    std::vector<std::vector<long>> orbits;
    for (long x = 0; x <= p; ++x) {
        if (orbit_of[x] >= 0) continue;
        std::vector<long> stack{x};
        std::set<long> members{x};
        while (!stack.empty()) {
            long y = stack.back();
            stack.pop_back();
            for (const std::vector<long>& perm : perms)
                if (members.insert(perm[y]).second) stack.push_back(perm[y]);
        }
        long id = static_cast<long>(orbits.size());
        for (long m : members) orbit_of[m] = id;
        orbits.emplace_back(members.begin(), members.end());
    }

    LengthGraph g;
    g.p = p;
    g.vertices.push_back({U.order});
    for (const std::vector<long>& orb : orbits) {
        SHIMURA_CHECK(U.order % static_cast<long>(orb.size()) == 0,
                      "orbit size does not divide the unit group order");
        LengthGraph::Edge e;
        e.origin = e.target = 0;
        e.length = U.order / static_cast<long>(orb.size());
        for (long m : orb) e.points.push_back(ProjPoint::from_index(m, p));
        std::sort(e.points.begin(), e.points.end());
        g.edges.push_back(e);
    }
    // The pairing involution descends to the orbits: every norm-p element is a
    // unit times a generator, and left unit multiplication moves the attracting
    // point within its orbit while fixing the repelling one. The descended map
    // must be single-valued; pointwise pair preservation may fail (the
    // congruence ideal need not be stable under unit conjugation).
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        long rev_orbit = orbit_of[pt.involution[orbits[i][0]]];
        for (long member : orbits[i])
            SHIMURA_CHECK(orbit_of[pt.involution[member]] == rev_orbit,
                          "pairing involution does not descend to the unit orbits");
        g.edges[i].reverse = static_cast<int>(rev_orbit);
        g.edges[i].kind = (rev_orbit == i) ? LengthGraph::EdgeKind::aller_retour
                                           : LengthGraph::EdgeKind::loop;
    }
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        SHIMURA_CHECK(g.edges[g.edges[i].reverse].reverse == i,
                      "edge reversal is not an involution");
    SHIMURA_CHECK(g.star_formula_ok(), "star formula fails on the quotient graph");
    return g;
}

LengthGraph plus_cover(const LengthGraph& quotient) {
    SHIMURA_CHECK(quotient.vertices.size() == 1, "plus cover expects a one-vertex quotient");
    LengthGraph g;
    g.p = quotient.p;
    g.vertices.push_back({quotient.vertices[0].length});
    g.vertices.push_back({quotient.vertices[0].length});
    // each oriented edge class lifts to one unoriented edge joining the two
    // vertices (a mutually-reverse pair of oriented edges)
    for (const LengthGraph::Edge& qe : quotient.edges) {
        int i = static_cast<int>(g.edges.size());
        LengthGraph::Edge down{i + 1, 0, 1, qe.length, qe.points, LengthGraph::EdgeKind::link};
        LengthGraph::Edge up{i, 1, 0, qe.length, qe.points, LengthGraph::EdgeKind::link};
        g.edges.push_back(down);
        g.edges.push_back(up);
    }
    SHIMURA_CHECK(g.betti() == static_cast<long>(quotient.edges.size()) - 1,
                  "plus cover Betti number != c1+c2+c3-1");
    SHIMURA_CHECK(g.star_formula_ok(), "star formula fails on the plus cover");
    return g;
}

}  // namespace shimura
