#include "bamin/randgen.hh"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace bamin {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    while (true) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

/// First `count` entries of a uniformly shuffled [0, universe).
std::vector<std::uint64_t> sample_without_replacement(std::mt19937_64& rng, std::uint64_t universe,
                                                      std::size_t count) {
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    auto at = [&](std::uint64_t i) {
        auto it = moved.find(i);
        return it == moved.end() ? i : it->second;
    };
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t j = i + below(rng, universe - i);
        std::uint64_t vi = at(i), vj = at(j);
        moved[j] = vi;
        out.push_back(vj);
    }
    return out;
}

std::size_t round_half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

}  // namespace

void RandomSpec::validate() const {
    if (states < 1) throw std::invalid_argument("need at least one state");
    if (symbols < 1) throw std::invalid_argument("need at least one symbol");
    if (!(transition_density >= 0) || transition_density > double(states))
        throw std::invalid_argument("transition density must lie in [0, number of states]");
    if (!(acceptance_density > 0) || acceptance_density > 1)
        throw std::invalid_argument("acceptance density must lie in (0, 1]");
}

std::size_t RandomSpec::transitions_per_symbol() const {
    return std::min(round_half_up(double(states) * transition_density), states * states);
}

std::size_t RandomSpec::accepting_count() const {
    return std::clamp<std::size_t>(round_half_up(double(states) * acceptance_density), 1, states);
}

std::string generated_symbol_label(std::size_t i) {
    if (i < 26) return std::string(1, char('a' + i));
    return "a" + std::to_string(i);
}

Automaton tabakov_vardi(const RandomSpec& spec) {
    spec.validate();
    const std::size_t n = spec.states;
    AutomatonBuilder b;
    for (std::size_t s = 0; s < spec.symbols; ++s) b.add_symbol(generated_symbol_label(s));
    for (std::size_t q = 0; q < n; ++q) b.add_state(std::to_string(q));
    b.set_initial(0);

    const std::size_t per_symbol = spec.transitions_per_symbol();
    for (std::size_t s = 0; s < spec.symbols; ++s) {
        std::mt19937_64 rng = stream(spec.seed, s);
        for (std::uint64_t cell : sample_without_replacement(rng, std::uint64_t(n) * n, per_symbol))
            b.add_transition(static_cast<State>(cell / n), static_cast<Symbol>(s), static_cast<State>(cell % n));
    }
    std::mt19937_64 rng = stream(spec.seed, spec.symbols);
    for (std::uint64_t q : sample_without_replacement(rng, n, spec.accepting_count()))
        b.set_accepting(static_cast<State>(q));
    return b.build();
}

}  // namespace bamin
