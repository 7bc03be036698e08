#pragma once

#include <map>
#include <vector>

#include "shimura/generators.hpp"
#include "shimura/padic.hpp"

namespace shimura {

/// Fixed-point-free involution on P^1(F_p) pairing the boundary balls of the
/// good fundamental domain (radius |p|^{1/2}), with generator provenance.
struct PairingTable {
    struct Pair {
        ProjPoint a, b;     // a < b
        int generator = 0;  // index into GeneratorSet::impure_reps
    };
    long p = 0;
    std::vector<Pair> pairs;       // sorted by first point
    std::vector<long> involution;  // size p+1, index-based
    // boundary balls have radius 1/sqrt(p) = |p|^(num/den)
    int radius_exponent_num = 1;
    int radius_exponent_den = 2;
};

// For each impure representative gamma, pairs the reduction of its attracting
// fixed point with that of gamma^{-1} (= its repelling point). Asserts the
// pairs are disjoint and cover all p+1 points. Requires t = 0.
PairingTable schottky_pairing(const GeneratorSet& gs, const AlgebraData& alg);

/// Graph with lengths: oriented edges with an explicit reversal map. An edge
/// equal to its own reversal is an aller-retour edge; a mutually-reverse pair
/// at a single vertex is a loop; at two distinct vertices, a link.
struct LengthGraph {
    enum class EdgeKind { loop, aller_retour, link };
    struct Vertex {
        long length = 1;
    };
    struct Edge {
        int reverse = 0;  // index of the reversed edge (== own index: aller-retour)
        int origin = 0, target = 0;
        long length = 1;
        std::vector<ProjPoint> points;  // label: member points, sorted
        EdgeKind kind = EdgeKind::loop;
    };
    long p = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;  // oriented

    std::map<long, long> oriented_counts_by_length() const;
    long count_with_length(long n) const;
    long aller_retour_count() const;
    // first Betti number of the underlying space (aller-retour edges are
    // folded segments and do not contribute)
    long betti() const;
    // sum over Star(v) of l(v)/l(e) for each vertex; true iff every vertex
    // star sums to p+1
    bool star_formula_ok() const;
};

// Stable reduction-graph of the Mumford curve: one vertex, (p+1)/2 loops of
// length 1 (a rose with (p+1)/2 petals).
LengthGraph mumford_graph(const PairingTable& pt);

// Quotient by the unit action: one vertex of length #U; oriented edges are
// the unit orbits on P^1(F_p) with length #U / orbit size; reversal is the
// descent of the pairing involution to the orbits (single-valuedness
// asserted). Star formula asserted.
LengthGraph quotient_by_units(const PairingTable& pt, const UnitGroup& U,
                              const AlgebraData& alg);

// Degree-2 cover: two vertices; every oriented edge class of the quotient
// lifts to one unoriented edge joining them, so per-length oriented counts
// double and the genus is c1+c2+c3-1.
LengthGraph plus_cover(const LengthGraph& quotient);

}  // namespace shimura
