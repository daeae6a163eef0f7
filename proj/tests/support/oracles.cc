#include "oracles.hh"

#include <functional>
#include <map>
#include <tuple>

namespace bamin::oracle {

bool member(const Automaton& a, const Lasso& w) {
    std::vector<bool> cur(a.num_states(), false);
    for (State q : a.initial()) cur[q] = true;
    for (Symbol s : w.stem) {
        std::vector<bool> next(a.num_states(), false);
        for (State p = 0; p < a.num_states(); ++p)
            if (cur[p])
                for (State q : a.succ(p, s)) next[q] = true;
        cur = std::move(next);
    }
    // Nodes (state, position in v).
    const std::size_t len = w.cycle.size(), n = a.num_states() * len;
    auto node = [&](State q, std::size_t i) { return q * len + i; };
    std::vector<std::vector<std::size_t>> edges(n);
    for (State p = 0; p < a.num_states(); ++p)
        for (std::size_t i = 0; i < len; ++i)
            for (State q : a.succ(p, w.cycle[i])) edges[node(p, i)].push_back(node(q, (i + 1) % len));
    auto reach_from = [&](const std::vector<std::size_t>& seeds) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack;
        for (std::size_t s : seeds)
            for (std::size_t t : edges[s])
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t t : edges[x])
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        return seen;  // nodes reachable in at least one step
    };
    std::vector<std::size_t> start;
    for (State q = 0; q < a.num_states(); ++q)
        if (cur[q]) start.push_back(node(q, 0));
    std::vector<bool> reachable = reach_from(start);
    for (std::size_t s : start) reachable[s] = true;
    for (State f : a.accepting())
        for (std::size_t i = 0; i < len; ++i) {
            std::size_t x = node(f, i);
            if (reachable[x] && reach_from({x})[x]) return true;
        }
    return false;
}

LassoUniverse::LassoUniverse(std::size_t num_symbols, std::size_t max_u, std::size_t max_v) {
    std::function<void(std::vector<Symbol>&, std::size_t, std::vector<std::vector<Symbol>>&)> extend =
        [&](std::vector<Symbol>& w, std::size_t len, std::vector<std::vector<Symbol>>& out) {
            if (w.size() == len) {
                out.push_back(w);
                return;
            }
            for (Symbol s = 0; s < num_symbols; ++s) {
                w.push_back(s);
                extend(w, len, out);
                w.pop_back();
            }
        };
    std::vector<std::vector<Symbol>> stems, cycles;
    std::vector<Symbol> scratch;
    for (std::size_t l = 0; l <= max_u; ++l) extend(scratch, l, stems);
    for (std::size_t l = 1; l <= max_v; ++l) extend(scratch, l, cycles);
    for (auto& u : stems)
        for (auto& v : cycles) lassos_.push_back(Lasso{u, v});
}

std::vector<bool> LassoUniverse::accepted(const Automaton& a) const {
    std::vector<bool> out;
    out.reserve(lassos_.size());
    for (const Lasso& w : lassos_) out.push_back(member(a, w));
    return out;
}

std::optional<Lasso> language_difference(const LassoUniverse& u, const Automaton& x, const Automaton& y) {
    for (const Lasso& w : u.all())
        if (member(x, w) != member(y, w)) return w;
    return std::nullopt;
}

namespace {

/// Parity game with priorities 0..2 on nodes; even (Duplicator) wins a play
/// if the highest priority seen infinitely often is even, and a player with
/// no move loses.
struct Arena {
    std::vector<bool> spoiler;
    std::vector<int> priority;
    std::vector<std::vector<std::size_t>> succ;

    std::size_t add(bool spoiler_owned, int prio) {
        spoiler.push_back(spoiler_owned);
        priority.push_back(prio);
        succ.emplace_back();
        return succ.size() - 1;
    }

    bool cpre(std::size_t v, const std::vector<bool>& target) const {
        if (spoiler[v]) {
            for (std::size_t t : succ[v])
                if (!target[t]) return false;
            return true;
        }
        for (std::size_t t : succ[v])
            if (target[t]) return true;
        return false;
    }

    /// νZ.μY.νX. (P2 ∩ CPre Z) ∪ (P1 ∩ CPre Y) ∪ (P0 ∩ CPre X)
    std::vector<bool> duplicator_wins() const {
        const std::size_t n = succ.size();
        std::vector<bool> z(n, true);
        while (true) {
            std::vector<bool> y(n, false);
            while (true) {
                std::vector<bool> x(n, true);
                while (true) {
                    std::vector<bool> nx(n);
                    for (std::size_t v = 0; v < n; ++v) {
                        const std::vector<bool>& t = priority[v] == 2 ? z : priority[v] == 1 ? y : x;
                        nx[v] = cpre(v, t);
                    }
                    if (nx == x) break;
                    x = std::move(nx);
                }
                if (x == y) break;
                y = std::move(x);
            }
            if (y == z) return z;
            z = std::move(y);
        }
    }
};

}  // namespace

Relation lookahead_game(const Automaton& a, Game g, unsigned k) {
    const std::size_t n = a.num_states(), ns = a.num_symbols();
    const bool backward = g == Game::backward || g == Game::backward_minus;
    auto moves = [&](State p, Symbol s) { return backward ? a.pred(p, s) : a.succ(p, s); };
    auto stuck = [&](State p) {
        for (Symbol s = 0; s < ns; ++s)
            if (!moves(p, s).empty()) return false;
        return true;
    };
    auto compatible = [&](State p, State q) {
        switch (g) {
            case Game::direct: return !a.is_accepting(p) || a.is_accepting(q);
            case Game::backward:
                return (!a.is_accepting(p) || a.is_accepting(q)) && (!a.is_initial(p) || a.is_initial(q));
            case Game::backward_minus: return !a.is_initial(p) || a.is_initial(q);
            default: return true;
        }
    };

    Arena arena;
    std::map<std::tuple<State, State, int>, std::size_t> spoiler_node;
    std::map<std::tuple<State, State, int, int>, std::size_t> landing;
    std::vector<std::tuple<State, State, int>> todo;
    auto spoiler_at = [&](State p, State q, int b) {
        auto key = std::make_tuple(p, q, b);
        auto it = spoiler_node.find(key);
        if (it != spoiler_node.end()) return it->second;
        std::size_t v = arena.add(true, 0);
        spoiler_node.emplace(key, v);
        todo.push_back(key);
        return v;
    };
    auto landing_at = [&](State p, State q, int b, int prio) {
        auto key = std::make_tuple(p, q, b, prio);
        auto it = landing.find(key);
        if (it != landing.end()) return it->second;
        std::size_t v = arena.add(false, prio);
        landing.emplace(key, v);
        std::size_t target = spoiler_at(p, q, b);
        arena.succ[v].push_back(target);
        return v;
    };

    // Spoiler's attacks: maximal paths of length k, or shorter ones ending in a stuck state.
    auto attacks = [&](State p) {
        std::vector<std::pair<std::vector<Symbol>, std::vector<State>>> out;
        std::vector<Symbol> word;
        std::vector<State> path{p};
        std::function<void()> grow = [&]() {
            if (word.size() == k || (!word.empty() && stuck(path.back()))) {
                out.emplace_back(word, path);
                return;
            }
            for (Symbol s = 0; s < ns; ++s)
                for (State r : moves(path.back(), s)) {
                    word.push_back(s);
                    path.push_back(r);
                    grow();
                    word.pop_back();
                    path.pop_back();
                }
        };
        if (!stuck(p)) grow();
        return out;
    };

    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            int b = g == Game::delayed && a.is_accepting(p) && !a.is_accepting(q) ? 1 : 0;
            spoiler_at(p, q, b);
        }
    while (!todo.empty()) {
        auto [p, q, b] = todo.back();
        todo.pop_back();
        std::size_t sv = spoiler_node.at({p, q, b});
        for (auto& [word, path] : attacks(p)) {
            std::size_t dv = arena.add(false, 0);
            arena.succ[sv].push_back(dv);
            // Duplicator's replies: a path of length 1..|word| reading a prefix of word.
            std::vector<State> reply{q};
            std::function<void()> answer = [&]() {
                std::size_t m = reply.size() - 1;
                if (m >= 1) {
                    bool spo_f = false, dup_f = false;
                    for (std::size_t i = 1; i <= m; ++i) {
                        dup_f = dup_f || a.is_accepting(reply[i]);
                        spo_f = spo_f || a.is_accepting(path[i]);
                    }
                    // Spoiler's accepting visit at i is answered by one of Duplicator at some j ≥ i.
                    bool pending = b && !dup_f;
                    for (std::size_t i = 1; i <= m; ++i)
                        if (a.is_accepting(path[i])) {
                            bool matched = false;
                            for (std::size_t j = i; j <= m; ++j) matched = matched || a.is_accepting(reply[j]);
                            if (!matched) pending = true;
                        }
                    int prio = 2;
                    if (g == Game::fair) prio = dup_f ? 2 : spo_f ? 1 : 0;
                    if (g == Game::delayed) prio = (!pending || (b && dup_f)) ? 2 : 1;
                    int nb = g == Game::delayed && pending ? 1 : 0;
                    std::size_t target = landing_at(path[m], reply[m], nb, prio);
                    arena.succ[dv].push_back(target);
                }
                if (m == word.size()) return;
                for (State r : moves(reply.back(), word[m])) {
                    if (!compatible(path[m + 1], r)) continue;
                    reply.push_back(r);
                    answer();
                    reply.pop_back();
                }
            };
            answer();
        }
    }

    std::vector<bool> win = arena.duplicator_wins();
    Relation r(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (!compatible(p, q)) continue;
            int b = g == Game::delayed && a.is_accepting(p) && !a.is_accepting(q) ? 1 : 0;
            if (win[spoiler_node.at({p, q, b})]) r.set(p, q);
        }
    return r;
}

Relation closure_by_squaring(const Relation& r) {
    Relation cur = r;
    while (true) {
        Relation next = cur | cur.compose(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t covering_placements(std::size_t n, std::size_t t) {
    const std::size_t cells = n * n;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != t) continue;
        bool all_rows = true;
        for (std::size_t row = 0; row < n && all_rows; ++row)
            all_rows = ((mask >> (row * n)) & ((std::uint64_t{1} << n) - 1)) != 0;
        if (all_rows) ++count;
    }
    return count;
}

}  // namespace bamin::oracle
