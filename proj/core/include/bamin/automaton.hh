// Nondeterministic Büchi automata over string-labelled alphabets.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bamin {

using State = std::uint32_t;
using Symbol = std::uint32_t;

struct TransitionRef {
    State src;
    Symbol sym;
    State dst;

    auto operator<=>(const TransitionRef&) const = default;
};

/// Raised when a structural invariant of an automaton does not hold.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AutomatonBuilder;

/// Immutable automaton with dense state indices.
///
/// Successor and predecessor lists are kept sorted and mirror each other.
/// Incomplete automata are fine; nothing is ever completed with a sink.
class Automaton {
public:
    Automaton() = default;

    std::size_t num_states() const { return names_.size(); }
    std::size_t num_symbols() const { return alphabet_.size(); }
    std::size_t num_transitions() const { return num_transitions_; }

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::string& symbol_label(Symbol s) const { return alphabet_.at(s); }
    std::optional<Symbol> find_symbol(std::string_view label) const;

    const std::string& state_name(State q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<State> find_state(std::string_view name) const;

    /// Sorted, duplicate-free.
    const std::vector<State>& initial() const { return initial_; }
    const std::vector<State>& accepting() const { return accepting_; }
    bool is_initial(State q) const { return flags_[q] & kInitial; }
    bool is_accepting(State q) const { return flags_[q] & kAccepting; }

    std::span<const State> succ(State p, Symbol s) const { return fwd_[p * alphabet_.size() + s]; }
    std::span<const State> pred(State q, Symbol s) const { return bwd_[q * alphabet_.size() + s]; }
    bool has_successor(State p) const;
    bool has_predecessor(State q) const;
    bool has_transition(State p, Symbol s, State q) const;

    /// All transitions, sorted by (symbol, source, target).
    std::vector<TransitionRef> transitions() const;

    /// Checks the fwd/bwd mirror, sortedness and index ranges.
    void audit() const;

    /// Equal indices, names, alphabet order, initial/accepting sets and adjacency.
    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    friend class AutomatonBuilder;

    static constexpr std::uint8_t kInitial = 1;
    static constexpr std::uint8_t kAccepting = 2;

    std::vector<std::string> alphabet_;
    std::vector<std::string> names_;
    std::vector<std::uint8_t> flags_;
    std::vector<State> initial_;
    std::vector<State> accepting_;
    std::vector<std::vector<State>> fwd_;
    std::vector<std::vector<State>> bwd_;
    std::size_t num_transitions_ = 0;
};

/// Incremental construction; `build()` sorts and mirrors the adjacency.
class AutomatonBuilder {
public:
    AutomatonBuilder() = default;
    explicit AutomatonBuilder(std::vector<std::string> alphabet);

    /// Starts from a copy of `a` with the same states, flags and alphabet but no transitions.
    static AutomatonBuilder states_of(const Automaton& a);

    Symbol add_symbol(std::string_view label);
    std::optional<Symbol> find_symbol(std::string_view label) const;

    State add_state(std::string name);
    /// Looks a state up by name, creating it on first use.
    State state(std::string_view name);

    void set_initial(State q, bool on = true);
    void set_accepting(State q, bool on = true);
    void add_transition(State src, Symbol sym, State dst);
    void add_transition(std::string_view src, std::string_view label, std::string_view dst);

    std::size_t num_states() const { return names_.size(); }

    Automaton build() const;

private:
    std::vector<std::string> alphabet_;
    std::unordered_map<std::string, Symbol> symbol_index_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, State> state_index_;
    std::vector<std::uint8_t> flags_;
    std::vector<TransitionRef> transitions_;
};

/// States of `b` are shifted by |Q_a|; symbols are matched by label and the
/// alphabet is a's labels followed by b's labels not already present.
Automaton disjoint_union(const Automaton& a, const Automaton& b);

/// Relabels symbol indices of `a` so that its alphabet is exactly `alphabet`
/// (a permutation of a's labels, possibly with extra unused labels).
Automaton with_alphabet(const Automaton& a, const std::vector<std::string>& alphabet);

/// True iff there is no path from the target back to the source.
bool is_transient(const Automaton& a, const TransitionRef& t);

/// Keeps the states that are reachable from an initial state and can reach a
/// cycle through an accepting state. Relative state order is preserved.
Automaton remove_dead(const Automaton& a);

/// Copy of `a` keeping only the transitions for which `keep` returns true.
template <class Pred>
Automaton filter_transitions(const Automaton& a, Pred keep) {
    AutomatonBuilder b = AutomatonBuilder::states_of(a);
    for (const TransitionRef& t : a.transitions())
        if (keep(t)) b.add_transition(t.src, t.sym, t.dst);
    return b.build();
}

/// Same automaton restricted to the states with `keep[q]`, renumbered in order.
Automaton restrict_states(const Automaton& a, const std::vector<bool>& keep);

/// Structural equality modulo state numbering and symbol order. States are
/// matched by name, symbols by label.
bool equal_up_to_renaming(const Automaton& a, const Automaton& b);

}  // namespace bamin
