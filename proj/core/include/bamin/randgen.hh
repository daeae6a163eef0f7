// Tabakov-Vardi random automata.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bamin/automaton.hh"

namespace bamin {

struct RandomSpec {
    std::size_t states = 1;
    std::size_t symbols = 1;
    double transition_density = 1.0;  // transitions per symbol, relative to the state count
    double acceptance_density = 1.0;  // fraction of accepting states
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless n ≥ 1, s ≥ 1, 0 ≤ td ≤ n, 0 < ad ≤ 1.
    void validate() const;
    std::size_t transitions_per_symbol() const;  // round(n·td), ties up
    std::size_t accepting_count() const;         // round(n·ad), at least 1
};

/// Random automaton with exactly transitions_per_symbol() distinct
/// transitions for every symbol and accepting_count() accepting states,
/// each sampled uniformly without replacement. State 0 is the only initial
/// state; states are named "0".."n-1" and symbols "a", "b", ….
///
/// Each symbol, and the accepting set, draw from their own std::mt19937_64
/// seeded by SplitMix64 over (seed, stream index), so the result is fixed by
/// the spec on every platform.
Automaton tabakov_vardi(const RandomSpec& spec);

/// Label of the i-th generated symbol: a..z, then a26, a27, ….
std::string generated_symbol_label(std::size_t i);

}  // namespace bamin
