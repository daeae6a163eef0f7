// Probability that a random automaton has a transition for every state and symbol.
#pragma once

#include <cstddef>
#include <string>

namespace bamin {

struct ExactFraction {
    std::string numerator;    // decimal, reduced
    std::string denominator;  // decimal, positive
    double value = 0;

    std::string str() const { return numerator + "/" + denominator; }
};

/// Exact probability that, with T = round(n·td) transitions per symbol drawn
/// uniformly from the n×n grid for each of `symbols` letters, every state has
/// an outgoing transition for every letter. Zero when T < n.
ExactFraction saturation_probability(std::size_t n, std::size_t symbols, double td);

/// Same with the per-symbol transition count given directly.
ExactFraction saturation_probability_count(std::size_t n, std::size_t symbols, std::size_t transitions);

}  // namespace bamin
