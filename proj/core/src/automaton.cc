#include "bamin/automaton.hh"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "graph.hh"

namespace bamin {

std::optional<Symbol> Automaton::find_symbol(std::string_view label) const {
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        if (alphabet_[s] == label) return s;
    return std::nullopt;
}

std::optional<State> Automaton::find_state(std::string_view name) const {
    for (State q = 0; q < names_.size(); ++q)
        if (names_[q] == name) return q;
    return std::nullopt;
}

bool Automaton::has_successor(State p) const {
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        if (!succ(p, s).empty()) return true;
    return false;
}

bool Automaton::has_predecessor(State q) const {
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        if (!pred(q, s).empty()) return true;
    return false;
}

bool Automaton::has_transition(State p, Symbol s, State q) const {
    auto out = succ(p, s);
    return std::binary_search(out.begin(), out.end(), q);
}

std::vector<TransitionRef> Automaton::transitions() const {
    std::vector<TransitionRef> out;
    out.reserve(num_transitions_);
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        for (State p = 0; p < names_.size(); ++p)
            for (State q : succ(p, s)) out.push_back({p, s, q});
    std::sort(out.begin(), out.end(), [](const TransitionRef& x, const TransitionRef& y) {
        return std::tie(x.sym, x.src, x.dst) < std::tie(y.sym, y.src, y.dst);
    });
    return out;
}

void Automaton::audit() const {
    const std::size_t n = names_.size();
    const std::size_t ns = alphabet_.size();
    if (flags_.size() != n || fwd_.size() != n * ns || bwd_.size() != n * ns)
        throw InvariantError("adjacency tables have the wrong shape");
    std::size_t fwd_count = 0, bwd_count = 0;
    for (State p = 0; p < n; ++p)
        for (Symbol s = 0; s < ns; ++s) {
            auto out = succ(p, s);
            if (!std::is_sorted(out.begin(), out.end()) ||
                std::adjacent_find(out.begin(), out.end()) != out.end())
                throw InvariantError("successor list not sorted or has duplicates");
            for (State q : out) {
                if (q >= n) throw InvariantError("successor index out of range");
                auto back = pred(q, s);
                if (!std::binary_search(back.begin(), back.end(), p))
                    throw InvariantError("forward edge without backward mirror");
            }
            fwd_count += out.size();
            auto in = pred(p, s);
            if (!std::is_sorted(in.begin(), in.end()) ||
                std::adjacent_find(in.begin(), in.end()) != in.end())
                throw InvariantError("predecessor list not sorted or has duplicates");
            bwd_count += in.size();
        }
    if (fwd_count != bwd_count || fwd_count != num_transitions_)
        throw InvariantError("forward and backward edge counts differ");
    for (State q = 0; q < n; ++q) {
        bool in_i = std::binary_search(initial_.begin(), initial_.end(), q);
        bool in_f = std::binary_search(accepting_.begin(), accepting_.end(), q);
        if (in_i != is_initial(q) || in_f != is_accepting(q))
            throw InvariantError("initial/accepting lists disagree with state flags");
    }
}

AutomatonBuilder::AutomatonBuilder(std::vector<std::string> alphabet) {
    for (auto& label : alphabet) add_symbol(label);
}

AutomatonBuilder AutomatonBuilder::states_of(const Automaton& a) {
    AutomatonBuilder b(a.alphabet());
    for (State q = 0; q < a.num_states(); ++q) {
        b.add_state(a.state_name(q));
        b.set_initial(q, a.is_initial(q));
        b.set_accepting(q, a.is_accepting(q));
    }
    return b;
}

Symbol AutomatonBuilder::add_symbol(std::string_view label) {
    std::string key(label);
    if (auto it = symbol_index_.find(key); it != symbol_index_.end()) return it->second;
    Symbol s = static_cast<Symbol>(alphabet_.size());
    alphabet_.push_back(key);
    symbol_index_.emplace(std::move(key), s);
    return s;
}

std::optional<Symbol> AutomatonBuilder::find_symbol(std::string_view label) const {
    if (auto it = symbol_index_.find(std::string(label)); it != symbol_index_.end()) return it->second;
    return std::nullopt;
}

State AutomatonBuilder::add_state(std::string name) {
    State q = static_cast<State>(names_.size());
    state_index_.try_emplace(name, q);
    names_.push_back(std::move(name));
    flags_.push_back(0);
    return q;
}

State AutomatonBuilder::state(std::string_view name) {
    if (auto it = state_index_.find(std::string(name)); it != state_index_.end()) return it->second;
    return add_state(std::string(name));
}

void AutomatonBuilder::set_initial(State q, bool on) {
    if (on)
        flags_.at(q) |= 1;
    else
        flags_.at(q) &= ~1;
}

void AutomatonBuilder::set_accepting(State q, bool on) {
    if (on)
        flags_.at(q) |= 2;
    else
        flags_.at(q) &= ~2;
}

void AutomatonBuilder::add_transition(State src, Symbol sym, State dst) {
    if (src >= names_.size() || dst >= names_.size() || sym >= alphabet_.size())
        throw std::out_of_range("transition refers to an unknown state or symbol");
    transitions_.push_back({src, sym, dst});
}

void AutomatonBuilder::add_transition(std::string_view src, std::string_view label, std::string_view dst) {
    State p = state(src);
    State q = state(dst);
    add_transition(p, add_symbol(label), q);
}

Automaton AutomatonBuilder::build() const {
    Automaton a;
    const std::size_t n = names_.size();
    const std::size_t ns = alphabet_.size();
    a.alphabet_ = alphabet_;
    a.names_ = names_;
    a.flags_ = flags_;
    for (State q = 0; q < n; ++q) {
        if (flags_[q] & Automaton::kInitial) a.initial_.push_back(q);
        if (flags_[q] & Automaton::kAccepting) a.accepting_.push_back(q);
    }
    a.fwd_.assign(n * ns, {});
    a.bwd_.assign(n * ns, {});
    std::vector<TransitionRef> ts = transitions_;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    // Sorted by (src, sym, dst) so successor lists come out sorted; predecessors
    // are appended in src order which is also sorted.
    for (const TransitionRef& t : ts) {
        a.fwd_[t.src * ns + t.sym].push_back(t.dst);
        a.bwd_[t.dst * ns + t.sym].push_back(t.src);
    }
    a.num_transitions_ = ts.size();
    return a;
}

Automaton disjoint_union(const Automaton& a, const Automaton& b) {
    AutomatonBuilder u(a.alphabet());
    std::vector<Symbol> b_sym(b.num_symbols());
    for (Symbol s = 0; s < b.num_symbols(); ++s) b_sym[s] = u.add_symbol(b.symbol_label(s));
    for (State q = 0; q < a.num_states(); ++q) {
        State x = u.add_state(a.state_name(q));
        u.set_initial(x, a.is_initial(q));
        u.set_accepting(x, a.is_accepting(q));
    }
    const State shift = static_cast<State>(a.num_states());
    for (State q = 0; q < b.num_states(); ++q) {
        State x = u.add_state(b.state_name(q));
        u.set_initial(x, b.is_initial(q));
        u.set_accepting(x, b.is_accepting(q));
    }
    for (const TransitionRef& t : a.transitions()) u.add_transition(t.src, t.sym, t.dst);
    for (const TransitionRef& t : b.transitions()) u.add_transition(t.src + shift, b_sym[t.sym], t.dst + shift);
    return u.build();
}

Automaton with_alphabet(const Automaton& a, const std::vector<std::string>& alphabet) {
    if (alphabet.size() != std::set<std::string>(alphabet.begin(), alphabet.end()).size())
        throw std::invalid_argument("alphabet has duplicate labels");
    AutomatonBuilder b(alphabet);
    std::vector<Symbol> remap(a.num_symbols());
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
        auto t = b.find_symbol(a.symbol_label(s));
        if (!t) throw std::invalid_argument("label '" + a.symbol_label(s) + "' missing from target alphabet");
        remap[s] = *t;
    }
    for (State q = 0; q < a.num_states(); ++q) {
        b.add_state(a.state_name(q));
        b.set_initial(q, a.is_initial(q));
        b.set_accepting(q, a.is_accepting(q));
    }
    for (const TransitionRef& t : a.transitions()) b.add_transition(t.src, remap[t.sym], t.dst);
    return b.build();
}

bool is_transient(const Automaton& a, const TransitionRef& t) {
    if (t.src == t.dst) return false;
    return !detail::reachable(a, {t.dst}, true)[t.src];
}

Automaton restrict_states(const Automaton& a, const std::vector<bool>& keep) {
    AutomatonBuilder b(a.alphabet());
    std::vector<State> index(a.num_states(), 0);
    for (State q = 0; q < a.num_states(); ++q) {
        if (!keep[q]) continue;
        index[q] = b.add_state(a.state_name(q));
        b.set_initial(index[q], a.is_initial(q));
        b.set_accepting(index[q], a.is_accepting(q));
    }
    for (const TransitionRef& t : a.transitions())
        if (keep[t.src] && keep[t.dst]) b.add_transition(index[t.src], t.sym, index[t.dst]);
    return b.build();
}

Automaton remove_dead(const Automaton& a) {
    std::vector<bool> reach = detail::reachable(a, a.initial(), true);
    detail::Sccs scc = detail::strongly_connected_components(a);
    std::vector<bool> good_scc(scc.count, false);
    for (State q : a.accepting())
        if (scc.nontrivial[scc.id[q]]) good_scc[scc.id[q]] = true;
    std::vector<State> seeds;
    for (State q = 0; q < a.num_states(); ++q)
        if (good_scc[scc.id[q]]) seeds.push_back(q);
    std::vector<bool> coreach = detail::reachable(a, seeds, false);
    std::vector<bool> keep(a.num_states());
    bool any = false;
    for (State q = 0; q < a.num_states(); ++q) {
        keep[q] = reach[q] && coreach[q];
        any = any || keep[q];
    }
    if (!any) return AutomatonBuilder(a.alphabet()).build();
    return restrict_states(a, keep);
}

bool equal_up_to_renaming(const Automaton& a, const Automaton& b) {
    if (a.num_states() != b.num_states() || a.num_transitions() != b.num_transitions()) return false;
    if (std::set<std::string>(a.alphabet().begin(), a.alphabet().end()) !=
        std::set<std::string>(b.alphabet().begin(), b.alphabet().end()))
        return false;
    auto describe = [](const Automaton& x) {
        std::map<std::string, int> flags;
        for (State q = 0; q < x.num_states(); ++q)
            flags[x.state_name(q)] = (x.is_initial(q) ? 1 : 0) | (x.is_accepting(q) ? 2 : 0);
        std::set<std::tuple<std::string, std::string, std::string>> edges;
        for (const TransitionRef& t : x.transitions())
            edges.emplace(x.state_name(t.src), x.symbol_label(t.sym), x.state_name(t.dst));
        return std::make_pair(flags, edges);
    };
    auto da = describe(a);
    return da.first.size() == a.num_states() && da == describe(b);
}

}  // namespace bamin
