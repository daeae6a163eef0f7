// The heavy and light minimization drivers.
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bamin/automaton.hh"
#include "bamin/reduce.hh"

namespace bamin {

enum class Method { heavy, light };

std::string_view to_string(Method m);

struct MinimizeConfig {
    unsigned k = 12;
    Method method = Method::heavy;
    std::set<PruneKind> prunings{PruneKind::id_di, PruneKind::bw_id, PruneKind::bwsim_di, PruneKind::bw_disim,
                                 PruneKind::transient_fair};
    unsigned max_iterations = 50;
};

struct StepRecord {
    std::string technique;
    std::size_t states = 0;
    std::size_t transitions = 0;
    std::size_t relation_size = 0;
    double time_ms = 0;
};

struct PassRecord {
    std::vector<StepRecord> steps;
};

struct MinimizeStats {
    Method method = Method::heavy;
    unsigned k = 0;
    std::size_t input_states = 0, input_transitions = 0;
    std::size_t output_states = 0, output_transitions = 0;
    std::vector<PassRecord> passes;
    bool hit_iteration_cap = false;
    double time_ms = 0;

    /// Schema-versioned JSON document.
    std::string to_json() const;
};

/// One round of the heavy pipeline:
///   remove dead states, quotient by ⊑bw, prune P(≺bw, ⪯k-di), quotient by ⪯k-de,
///   prune P(id, ≺k-di), prune the transient rule with ≺k-f, quotient by ⪯k-bw,
///   prune P(≺k-bw, id), prune P(⪯k-bw, ≺di), remove dead states.
/// Prunings run one after the other; relations are recomputed after every change.
Automaton heavy_pass(const Automaton& a, const MinimizeConfig& cfg, PassRecord* record = nullptr);

/// Repeats heavy_pass until nothing changes or max_iterations is reached.
Automaton heavy(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats = nullptr);

/// Removes dead states and quotients once by ⪯k-de.
Automaton light(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats = nullptr);

/// Dispatches on cfg.method.
Automaton minimize(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats = nullptr);

}  // namespace bamin
