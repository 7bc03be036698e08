#include "shimura/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace shimura {

namespace {

bool admissible_prime(const EichlerOrderData& O, long p) {
    if (p <= 2 || Int(O.D() * O.N()) % p == 0) return false;
    Int pz(p);
    if (mod_pos(Int(O.algebra.a), pz) == 0) return false;
    return legendre_symbol(Int(O.algebra.a), pz) == 1;
}

std::vector<ProjPoint> sorted_points(std::vector<ProjPoint> pts) {
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

RunReport run(const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r;
    r.inputs = opts;
    const EichlerOrderData& O = order_lookup(opts.D, opts.N);
    r.order = &O;

    if (opts.p <= 2 || Int(O.D() * O.N()) % opts.p == 0) {
        std::ostringstream os;
        os << "p = " << opts.p << " must be an odd prime not dividing 2*D*N";
        throw inadmissible_prime(os.str());
    }

    if (opts.xi_override) {
        const Quaternion& cand = *opts.xi_override;
        if (!in_order(cand, O)) throw std::domain_error("--xi override is not in the order");
        if (!right_unit_property(O, cand))
            throw std::domain_error("--xi override fails the right-unit property");
        Lattice4 candO = right_ideal_lattice(O, {cand});
        if (!candO.contains(integer_coords(quat(2), O)))
            throw std::domain_error("--xi override does not satisfy 2 in xi*O");
        r.xi = cand;
    } else {
        r.xi = choose_xi(O);
    }

    // the embedding requires a split presentation at p
    r.sqrt_a_mod_pk = sqrt_hensel(Int(O.algebra.a), opts.p, opts.precision);
    r.sqrt_a_mod_p = mod_pos(r.sqrt_a_mod_pk, Int(opts.p));

    r.gens = represent_prime(O, r.xi, opts.p);
    r.t_xi = 2 * r.gens.t;
    r.schottky = (r.gens.t == 0);

    for (const Quaternion& g : r.gens.impure_reps)
        r.generator_matrices.push_back(phi_p(g, O.algebra, opts.p, opts.precision));

    if (!r.schottky) {
        for (const Quaternion& g : r.gens.pure_reps)
            r.generator_matrices.push_back(phi_p(g, O.algebra, opts.p, opts.precision));
        auto t1 = std::chrono::steady_clock::now();
        r.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    }

    long rank = schottky_rank(r.gens);
    SHIMURA_CHECK(rank == (opts.p + 1) / 2, "Schottky rank != (p+1)/2");

    for (const Quaternion& g : r.gens.impure_reps)
        r.fixed_points.push_back(fixed_point_reductions(g, O.algebra, opts.p));

    r.pairing = schottky_pairing(r.gens, O.algebra);
    r.mumford = mumford_graph(*r.pairing);
    SHIMURA_CHECK(r.mumford->betti() == rank, "Mumford graph genus != Schottky rank");

    UnitGroup U = unit_group(O);
    SHIMURA_CHECK(U.order == O.unit_group_order, "unit group order does not match the table");
    r.quotient = quotient_by_units(*r.pairing, U, O.algebra);
    for (const LengthGraph::Edge& e : r.quotient->edges) r.unit_classes.push_back(e.points);
    std::sort(r.unit_classes.begin(), r.unit_classes.end(),
              [](const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
                  return a.front() < b.front();
              });
    r.plus = plus_cover(*r.quotient);

    r.closed_form = closed_form_report(opts.D, opts.N, r.gens);
    // cross-module identities
    const ClosedFormReport& cf = *r.closed_form;
    EdgeCounts measured{r.quotient->count_with_length(1), r.quotient->count_with_length(2),
                        r.quotient->count_with_length(3)};
    SHIMURA_CHECK(measured == cf.counts, "measured (c1,c2,c3) differ from the closed forms");
    SHIMURA_CHECK(r.quotient->betti() == cf.genus_gamma_p,
                  "quotient graph Betti number differs from the genus formula");
    SHIMURA_CHECK(r.plus->betti() == cf.genus_plus, "plus cover Betti number != c1+c2+c3-1");
    SHIMURA_CHECK(cf.rh_ok, "Riemann-Hurwitz identity fails");

    auto t1 = std::chrono::steady_clock::now();
    r.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_str(const Rat& r) { return r.get_str(); }

ordered_json coords_json(const Quaternion& q) {
    ordered_json a = ordered_json::array();
    for (int k = 0; k < 4; ++k) a.push_back(rat_str(q.c[k]));
    return a;
}

ordered_json points_json(const std::vector<ProjPoint>& pts) {
    ordered_json a = ordered_json::array();
    for (const ProjPoint& pt : pts) a.push_back(pt.str());
    return a;
}

ordered_json matrix_json(const PadicMatrix& M) {
    ordered_json row1 = ordered_json::array({M.e[0].get_str(), M.e[1].get_str()});
    ordered_json row2 = ordered_json::array({M.e[2].get_str(), M.e[3].get_str()});
    ordered_json m;
    m["entries"] = ordered_json::array({row1, row2});
    m["scale_exponent"] = M.scale;
    m["modulus"] = M.pk.get_str();
    return m;
}

const char* kind_name(LengthGraph::EdgeKind k) {
    switch (k) {
        case LengthGraph::EdgeKind::aller_retour: return "aller_retour";
        case LengthGraph::EdgeKind::link: return "link";
        default: return "loop";
    }
}

ordered_json graph_json(const LengthGraph& g) {
    ordered_json jg;
    ordered_json vs = ordered_json::array();
    for (const LengthGraph::Vertex& v : g.vertices) vs.push_back({{"length", v.length}});
    jg["vertices"] = vs;
    // one entry per unoriented edge: aller-retour edges stand alone, loop and
    // link pairs are merged (points of both orientations combined, sorted)
    ordered_json es = ordered_json::array();
    std::vector<bool> done(g.edges.size(), false);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (done[i]) continue;
        const LengthGraph::Edge& e = g.edges[i];
        done[i] = true;
        std::vector<ProjPoint> label = e.points;
        if (e.reverse != i) {
            done[e.reverse] = true;
            const LengthGraph::Edge& re = g.edges[e.reverse];
            label.insert(label.end(), re.points.begin(), re.points.end());
        }
        std::sort(label.begin(), label.end());
        label.erase(std::unique(label.begin(), label.end()), label.end());
        ordered_json je;
        je["points"] = points_json(label);
        je["length"] = e.length;
        je["kind"] = kind_name(e.kind);
        es.push_back(je);
    }
    jg["edges"] = es;
    auto counts = g.oriented_counts_by_length();
    ordered_json jc;
    for (long n = 1; n <= 3; ++n) {
        auto it = counts.find(n);
        jc["c" + std::to_string(n)] = (it == counts.end()) ? 0 : it->second;
    }
    jg["oriented_edge_counts"] = jc;
    jg["aller_retour_edges"] = g.aller_retour_count();
    jg["genus"] = g.betti();
    return jg;
}

}  // namespace

std::string emit_json(const RunReport& r) {
    const EichlerOrderData& O = *r.order;
    ordered_json j;
    j["inputs"] = {{"D", r.inputs.D},
                   {"N", r.inputs.N},
                   {"p", r.inputs.p},
                   {"precision", r.inputs.precision}};
    j["algebra"] = {{"a", O.algebra.a},
                    {"b", O.algebra.b},
                    {"discriminant", O.algebra.discriminant}};
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < 4; ++i) basis.push_back(coords_json(Quaternion{O.basis[i]}));
    j["order"] = {{"basis", basis},
                  {"unit_group_order", O.unit_group_order},
                  {"class_number", O.class_number}};
    j["xi"] = {{"coords", coords_json(r.xi)},
               {"display", to_display_string(r.xi)},
               {"norm", rat_str(reduced_norm(r.xi, O.algebra))}};
    j["sqrt_a"] = {{"mod_p", r.sqrt_a_mod_p.get_str()},
                   {"mod_p_to_k", r.sqrt_a_mod_pk.get_str()}};
    j["counts"] = {{"s_tilde", static_cast<long>(r.gens.all_elements.size())},
                   {"s", r.gens.s},
                   {"t", r.gens.t},
                   {"null_trace", r.t_xi},
                   {"schottky", r.schottky}};

    ordered_json gens = ordered_json::array();
    for (size_t i = 0; i < r.gens.impure_reps.size(); ++i) {
        const Quaternion& g = r.gens.impure_reps[i];
        ordered_json jg;
        jg["coords"] = coords_json(g);
        jg["display"] = to_display_string(g);
        jg["trace"] = rat_str(reduced_trace(g));
        jg["matrix"] = matrix_json(r.generator_matrices[i]);
        if (r.schottky) {
            jg["attracting"] = r.fixed_points[i].first.str();
            jg["repelling"] = r.fixed_points[i].second.str();
        }
        gens.push_back(jg);
    }
    j["generators"] = gens;
    if (!r.gens.pure_reps.empty()) {
        ordered_json pure = ordered_json::array();
        for (size_t i = 0; i < r.gens.pure_reps.size(); ++i) {
            const Quaternion& g = r.gens.pure_reps[i];
            ordered_json jg;
            jg["coords"] = coords_json(g);
            jg["display"] = to_display_string(g);
            pure.push_back(jg);
        }
        j["pure_generators"] = pure;
    }

    if (r.schottky) {
        ordered_json pairing = ordered_json::array();
        for (const PairingTable::Pair& pr : r.pairing->pairs) {
            ordered_json jp;
            jp["points"] = points_json({pr.a, pr.b});
            jp["generator"] = pr.generator;
            pairing.push_back(jp);
        }
        j["pairing"] = pairing;
        j["ball_radius"] = "p^(-1/2)";

        ordered_json classes = ordered_json::array();
        for (const std::vector<ProjPoint>& cls : r.unit_classes) classes.push_back(points_json(cls));
        j["unit_classes"] = classes;

        j["graphs"] = {{"mumford", graph_json(*r.mumford)},
                       {"gamma_p", graph_json(*r.quotient)},
                       {"gamma_p_plus", graph_json(*r.plus)}};

        const ClosedFormReport& cf = *r.closed_form;
        ordered_json w = ordered_json::object();
        for (const auto& [d, v] : cf.w_terms) w["w" + std::to_string(d)] = v.get_str();
        j["closed_form"] = {{"c1", cf.counts.c1},
                            {"c2", cf.counts.c2},
                            {"c3", cf.counts.c3},
                            {"delta", cf.delta.get_str()},
                            {"w_terms", w},
                            {"genus_gamma_p", cf.genus_gamma_p.get_str()},
                            {"genus_gamma_p_plus", cf.genus_plus.get_str()},
                            {"riemann_hurwitz_ok", cf.rh_ok}};
    }
    return j.dump(2) + "\n";
}

namespace {

std::string dot_points(const std::vector<ProjPoint>& pts) {
    std::string s;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += "|";
        s += pts[i].str();
    }
    return s;
}

void emit_dot_graph(std::ostringstream& os, const std::string& name, const LengthGraph& g) {
    os << "digraph " << name << " {\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"v" << v << " (len " << g.vertices[v].length << ")\"];\n";
    std::vector<bool> done(g.edges.size(), false);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (done[i]) continue;
        const LengthGraph::Edge& e = g.edges[i];
        done[i] = true;
        std::vector<ProjPoint> label = e.points;
        if (e.reverse != i) {
            done[e.reverse] = true;
            label.insert(label.end(), g.edges[e.reverse].points.begin(),
                         g.edges[e.reverse].points.end());
        }
        std::sort(label.begin(), label.end());
        label.erase(std::unique(label.begin(), label.end()), label.end());
        os << "  v" << e.origin << " -> v" << e.target << " [len=" << e.length << ", kind=\""
           << kind_name(e.kind) << "\", label=\"" << dot_points(label) << "\"";
        if (e.kind == LengthGraph::EdgeKind::aller_retour) os << ", dir=both";
        os << "];\n";
    }
    os << "}\n";
}

}  // namespace

std::string emit_dot(const RunReport& r) {
    SHIMURA_CHECK(r.schottky, "DOT output requires a Schottky run (t = 0)");
    std::ostringstream os;
    emit_dot_graph(os, "mumford", *r.mumford);
    emit_dot_graph(os, "gamma_p", *r.quotient);
    emit_dot_graph(os, "gamma_p_plus", *r.plus);
    return os.str();
}

std::vector<std::string> sweep(const SweepOptions& opts) {
    struct Task {
        long D, N, p;
    };
    std::vector<Task> tasks;
    for (auto [D, N] : supported_families()) {
        const EichlerOrderData& O = order_lookup(D, N);
        for (long p = 3; p <= opts.pmax; p += 2) {
            bool prime = true;
            for (long q = 3; q * q <= p; q += 2)
                if (p % q == 0) {
                    prime = false;
                    break;
                }
            if (!prime || !admissible_prime(O, p)) continue;
            tasks.push_back({D, N, p});
        }
    }
    unsigned nthreads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::string> lines(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            std::ostringstream os;
            try {
                RunReport rep = run({t.D, t.N, t.p, std::nullopt, 1});
                os << "(D,N,p)=(" << t.D << "," << t.N << "," << t.p << ")"
                   << " #S~=" << rep.gens.all_elements.size() << " s=" << rep.gens.s
                   << " t_xi=" << rep.t_xi;
                if (rep.schottky) {
                    const ClosedFormReport& cf = *rep.closed_form;
                    os << " c=(" << cf.counts.c1 << "," << cf.counts.c2 << "," << cf.counts.c3
                       << ")"
                       << " g=" << cf.genus_gamma_p.get_str() << " g+=" << cf.genus_plus.get_str()
                       << " ok";
                } else {
                    os << " skipped(null-trace)";
                }
            } catch (const std::exception& ex) {
                os << "(D,N,p)=(" << t.D << "," << t.N << "," << t.p << ") FAILED: " << ex.what();
            }
            lines[i] = os.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    return lines;
}

}  // namespace shimura
