// Symbol-blind graph helpers over an automaton's transition structure.
#pragma once

#include <cstdint>
#include <vector>

#include "bamin/automaton.hh"

namespace bamin::detail {

/// Strongly connected components of the transition graph (labels ignored).
struct Sccs {
    std::vector<std::uint32_t> id;  // per state
    std::uint32_t count = 0;
    /// Component contains at least one edge (size > 1 or a self-loop).
    std::vector<bool> nontrivial;
};

Sccs strongly_connected_components(const Automaton& a);

/// States reachable from `seeds` following transitions forward (or backward).
std::vector<bool> reachable(const Automaton& a, const std::vector<State>& seeds, bool forward);

}  // namespace bamin::detail
