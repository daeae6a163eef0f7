// Ultimately periodic words u·v^ω and exact membership.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "bamin/automaton.hh"

namespace bamin {

struct Lasso {
    std::vector<Symbol> stem;   // u
    std::vector<Symbol> cycle;  // v, non-empty

    auto operator<=>(const Lasso&) const = default;
};

/// Canonical enumeration order: |u|, then u, then |v|, then v.
bool canonical_less(const Lasso& x, const Lasso& y);

/// Exact test of u·v^ω ∈ L(a).
bool member_lasso(const Automaton& a, const Lasso& w);

/// Visits every lasso with |u| ≤ max_u and 1 ≤ |v| ≤ max_v whose word is
/// accepted, in canonical order. The visitor returns false to stop early.
void for_each_accepting_lasso(const Automaton& a, std::size_t max_u, std::size_t max_v,
                              const std::function<bool(const Lasso&)>& visit);

std::vector<Lasso> enumerate_accepting_lassos(const Automaton& a, std::size_t max_u, std::size_t max_v);

/// All words over `num_symbols` letters with length in [min_len, max_len], in
/// length-then-lexicographic order.
std::vector<std::vector<Symbol>> words_up_to(std::size_t num_symbols, std::size_t min_len, std::size_t max_len);

/// Precomputed membership for every lasso within fixed bounds.
///
/// For each cycle word v it stores the set of states from which v^ω has an
/// accepting run, and for each stem u the set of states reached by u. A lasso
/// is accepted iff the two sets meet.
class LassoTable {
public:
    LassoTable(const Automaton& a, std::size_t max_u, std::size_t max_v);

    std::size_t num_stems() const { return stems_.size(); }
    std::size_t num_cycles() const { return cycles_.size(); }
    const std::vector<Symbol>& stem(std::size_t i) const { return stems_[i]; }
    const std::vector<Symbol>& cycle(std::size_t j) const { return cycles_[j]; }

    bool stem_alive(std::size_t i) const;
    bool accepts(std::size_t i, std::size_t j) const;

private:
    std::size_t words_;
    std::vector<std::vector<Symbol>> stems_;
    std::vector<std::vector<Symbol>> cycles_;
    std::vector<std::uint64_t> reach_;  // per stem, bitset of states
    std::vector<std::uint64_t> good_;   // per cycle, bitset of states
};

}  // namespace bamin
