// Slow, independent reference implementations used only by tests.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bamin/automaton.hh"
#include "bamin/lasso.hh"
#include "bamin/relation.hh"

namespace bamin::oracle {

/// u·v^ω ∈ L(a), decided on the product of a with the positions of v.
bool member(const Automaton& a, const Lasso& w);

/// Every (u, v) with |u| ≤ max_u and 1 ≤ |v| ≤ max_v over `num_symbols` letters.
class LassoUniverse {
public:
    LassoUniverse(std::size_t num_symbols, std::size_t max_u, std::size_t max_v);

    std::size_t size() const { return lassos_.size(); }
    const Lasso& operator[](std::size_t i) const { return lassos_[i]; }
    const std::vector<Lasso>& all() const { return lassos_; }

    /// Membership bit per lasso, in universe order.
    std::vector<bool> accepted(const Automaton& a) const;

private:
    std::vector<Lasso> lassos_;
};

/// First lasso accepted by exactly one of the two automata, if any.
std::optional<Lasso> language_difference(const LassoUniverse& u, const Automaton& x, const Automaton& y);

enum class Game { direct, delayed, fair, backward, backward_minus };

/// k-lookahead simulation by building the whole game graph (one Duplicator
/// node per Spoiler attack) and solving it with a three-priority fixpoint.
/// Exponential in k; meant for a handful of states.
Relation lookahead_game(const Automaton& a, Game g, unsigned k);

/// Transitive closure by repeated squaring.
Relation closure_by_squaring(const Relation& r);

/// Number of t-subsets of the n×n grid that meet every row, by enumeration.
std::uint64_t covering_placements(std::size_t n, std::size_t t);
std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace bamin::oracle
