// Simulation preorders: ordinary, k-lookahead and jumping variants, plus
// brute-force trace inclusion for small automata.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "bamin/automaton.hh"
#include "bamin/relation.hh"

namespace bamin {

enum class Direction { forward, backward };

enum class Condition {
    direct,          // di: accepting positions are matched at once
    delayed,         // de: every accepting Spoiler position is matched eventually
    fair,            // f: a fair Spoiler trace forces a fair Duplicator trace
    backward,        // bw: accepting and initial positions matched at once
    backward_minus,  // bw-: only initial positions matter
    backward_count,  // bw-c: initial positions matched, and per round Duplicator
                     //       visits at least as many accepting states
};

/// A simulation flavour; the direction is implied by the condition.
struct SimVariant {
    Direction direction;
    Condition condition;

    constexpr SimVariant(Direction d, Condition c) : direction(d), condition(c) {
        bool fwd = c == Condition::direct || c == Condition::delayed || c == Condition::fair;
        if (fwd != (d == Direction::forward)) throw std::invalid_argument("condition does not match direction");
    }

    static constexpr SimVariant di() { return {Direction::forward, Condition::direct}; }
    static constexpr SimVariant de() { return {Direction::forward, Condition::delayed}; }
    static constexpr SimVariant f() { return {Direction::forward, Condition::fair}; }
    static constexpr SimVariant bw() { return {Direction::backward, Condition::backward}; }
    static constexpr SimVariant bw_minus() { return {Direction::backward, Condition::backward_minus}; }
    static constexpr SimVariant bw_count() { return {Direction::backward, Condition::backward_count}; }

    std::string_view name() const;

    friend constexpr bool operator==(SimVariant, SimVariant) = default;
};

struct SimStats {
    std::size_t sweeps = 0;       // passes over the pair space
    std::size_t evaluations = 0;  // single-pair predecessor checks
};

/// Ordinary (one-step) simulation for di, de, f or bw. Always a preorder.
///
/// For di and bw a pair whose first position already violates the condition
/// is unrelated even if Spoiler cannot move. Otherwise a player who cannot
/// move loses.
Relation ordinary_sim(const Automaton& a, SimVariant v);

/// k-lookahead simulation (k ≥ 1), as computed by the game; reflexive but
/// not necessarily transitive when k ≥ 2.
///
/// Spoiler reveals k moves, or fewer if she reaches a state with no moves;
/// Duplicator answers with 1 ≤ m ≤ (moves revealed) and the game continues
/// from the pair reached after m steps.
Relation lookahead_sim(const Automaton& a, SimVariant v, unsigned k, SimStats* stats = nullptr);

/// Transitive closure of lookahead_sim: the preorder used for quotienting.
Relation lookahead_preorder(const Automaton& a, SimVariant v, unsigned k, SimStats* stats = nullptr);

/// k-lookahead fair simulation where, before every step, Duplicator may jump
/// from q to any q' with jump(q, q'). A step counts as accepting if some
/// accepting state lies between q and q' in the jump preorder.
Relation jumping_fair_sim(const Automaton& a, unsigned k, const Relation& jump, SimStats* stats = nullptr);

/// Greatest M ⊆ ⊑di ∘ (⊑bw)⁻¹ with M ∘ ⊑di ⊆ M.
Relation mediated_preorder(const Automaton& a);

enum class TraceKind { direct, backward };

/// Exact direct (or backward) trace inclusion by exploring Duplicator's
/// subset of viable partners. Exponential; refuses automata with more than
/// `max_states` states.
Relation trace_inclusion_oracle(const Automaton& a, TraceKind kind, std::size_t max_states = 10);

}  // namespace bamin
