// Language inclusion L(A) ⊆ L(B) for Büchi automata.
#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bamin/automaton.hh"
#include "bamin/lasso.hh"
#include "bamin/relation.hh"

namespace bamin {

class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Outcome { included, not_included, unknown };

enum class Stage {
    none,
    gfi_minimized,   // "1a": fair lookahead simulation after minimizing both sides
    gfi_pruned,      // "1b": the same after pruning A against B
    jumping,         // "2": jumping fair simulation
    counterexample,  // "3": bounded lasso search
};

std::string_view to_string(Outcome o);
std::string_view to_string(Stage s);

struct InclusionConfig {
    unsigned k = 12;            // lookahead, 1..15
    std::size_t max_u = 0;      // 0: 2·|Q_A'| capped at 12
    std::size_t max_v = 0;      // 0: same as max_u default
    std::chrono::milliseconds counterexample_budget{10000};
    unsigned max_rounds = 50;   // minimize/prune rounds in the first stage
    bool jumping = true;

    void validate() const;
};

struct InclusionVerdict {
    Outcome outcome = Outcome::unknown;
    Stage stage = Stage::none;
    /// Set for not_included: u·v^ω accepted by A and rejected by B.
    std::optional<Lasso> witness;
    /// For included: every initial state of the reduced A paired with an
    /// initial state of the reduced B that simulates it (by name).
    std::vector<std::pair<std::string, std::string>> matching;
    double stage1_ms = 0, stage2_ms = 0, stage3_ms = 0;
    std::size_t size_a = 0, size_b = 0, size_a_reduced = 0, size_b_reduced = 0;

    /// Records a counterexample after checking it against both automata;
    /// throws std::logic_error if it is not one.
    void set_counterexample(const Automaton& a, const Automaton& b, Lasso w);

    /// Schema-versioned JSON; symbol labels are taken from `alphabet_of`.
    std::string to_json(const Automaton& alphabet_of) const;
};

InclusionVerdict check_inclusion(const Automaton& a, const Automaton& b, const InclusionConfig& cfg = {});

/// Drops A-transitions dominated by a same-symbol B-transition under
/// P(⪯k-bw-, ⪯k-f) computed on the disjoint union. Preserves inclusion.
Automaton prune_a_wrt_b(const Automaton& a, const Automaton& b, unsigned k);

/// Keeps only the B-states that occur in a product state reachable from
/// I_A × I_B. Preserves inclusion.
Automaton restrict_b_to_product(const Automaton& a, const Automaton& b);

/// ∀ p ∈ I_A ∃ q ∈ I_B with rel(p, |Q_A| + q), for a relation on the union.
bool initial_states_covered(const Automaton& a, const Automaton& b, const Relation& on_union,
                            std::vector<std::pair<std::string, std::string>>* matching = nullptr);

/// First lasso in canonical order within the bounds that A accepts and B
/// rejects; nullopt if none or the deadline passes. Alphabets must agree.
std::optional<Lasso> find_counterexample(const Automaton& a, const Automaton& b, std::size_t max_u,
                                         std::size_t max_v,
                                         std::chrono::steady_clock::time_point deadline =
                                             std::chrono::steady_clock::time_point::max());

}  // namespace bamin
