// Small hand-built automata and random corpora shared by the tests.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bamin/automaton.hh"
#include "bamin/lasso.hh"

namespace bamin::fixture {

/// Pruning by strict backward and strict direct trace inclusion together
/// drops p0 -a-> q0 and r1 -a-> s1 and loses a^5 e^ω. 14 states.
Automaton bw_trace_di_trace();
/// Union of two little-brother prunings drops p -a-> r and q -a-> s and loses a a c^ω.
Automaton union_of_prunings();
/// q is strictly delayed-simulated by p; dropping p -a-> q empties the language.
Automaton delayed_little_brother();
/// Both a-transitions p->q and q->r are transient; dropping q -a-> r loses a^ω.
Automaton transient_chain();
/// p0, q0, r0 with p0 ⊑ q0 ⊑ r0 at lookahead 2 but p0 not below r0 at any lookahead.
Automaton non_transitive();

/// Lasso from letter strings, one character per symbol ("aaaaa", "e").
Lasso lasso(const Automaton& a, const std::string& stem, const std::string& cycle);

State state(const Automaton& a, const std::string& name);

/// Tabakov-Vardi automaton over {a, b}.
Automaton random_tv(std::uint64_t seed, std::size_t n, double td, double ad = 0.5);

/// Random automaton over {a, b} with every state initial with probability
/// 1/4 (at least one) and accepting with probability 1/2; each possible
/// transition is present with probability `density / n`.
Automaton random_general(std::uint64_t seed, std::size_t n, double density);

/// A mixed corpus of small automata: Tabakov-Vardi with td in {1.5, 2.0, 2.5}
/// and general random ones, sizes in [min_n, max_n].
std::vector<Automaton> small_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

}  // namespace bamin::fixture
