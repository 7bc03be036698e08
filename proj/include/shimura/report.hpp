#pragma once

#include <optional>
#include <string>

#include "shimura/formulas.hpp"
#include "shimura/graphs.hpp"

namespace shimura {

struct RunOptions {
    long D = 0, N = 0, p = 0;
    std::optional<Quaternion> xi_override;
    int precision = 6;  // k for the displayed matrices
};

/// Everything one (D, N, p) run produces. When the null-trace condition
/// fails (t > 0) only the generator data is populated and schottky == false.
struct RunReport {
    RunOptions inputs;
    const EichlerOrderData* order = nullptr;
    Quaternion xi;
    Int sqrt_a_mod_p;   // canonical residue used by the embedding (k = 1)
    Int sqrt_a_mod_pk;  // at the display precision
    GeneratorSet gens;
    long t_xi = 0;  // t_xi(p), the null-trace count (= 2t)
    bool schottky = false;
    std::vector<PadicMatrix> generator_matrices;     // at display precision
    std::vector<std::pair<ProjPoint, ProjPoint>> fixed_points;  // per generator
    std::optional<PairingTable> pairing;
    std::vector<std::vector<ProjPoint>> unit_classes;
    std::optional<LengthGraph> mumford;
    std::optional<LengthGraph> quotient;
    std::optional<LengthGraph> plus;
    std::optional<ClosedFormReport> closed_form;
    double timing_ms = 0.0;
};

// Pipeline: order_lookup -> choose_xi (or override) -> represent_prime ->
// null-trace gate -> pairing -> graphs -> closed forms, with every
// cross-module identity re-asserted before returning.
RunReport run(const RunOptions& opts);

// Deterministic serialisations (timing is deliberately not emitted).
std::string emit_json(const RunReport& report);
std::string emit_dot(const RunReport& report);

struct SweepOptions {
    long pmax = 200;
    int threads = 0;  // 0 = hardware concurrency
};

// Batch validation over every supported family and admissible prime <= pmax;
// returns one deterministic summary line per run.
std::vector<std::string> sweep(const SweepOptions& opts);

}  // namespace shimura
