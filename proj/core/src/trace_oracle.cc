// Trace inclusion by subset construction: Duplicator's position is the set of
// states that can still match Spoiler's trace so far. Spoiler disproves
// inclusion by steering into a configuration where no partner is left.
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bamin/simulation.hh"
#include "graph.hh"

namespace bamin {
namespace {

using Mask = std::uint32_t;

struct Node {
    State p;
    Mask s;
};

}  // namespace

Relation trace_inclusion_oracle(const Automaton& a, TraceKind kind, std::size_t max_states) {
    const std::size_t n = a.num_states(), ns = a.num_symbols();
    if (n > max_states || n > 24) throw std::invalid_argument("automaton too large for the trace-inclusion oracle");
    const bool forward = kind == TraceKind::direct;

    Mask final_mask = 0, init_mask = 0;
    for (State q : a.accepting()) final_mask |= Mask{1} << q;
    for (State q : a.initial()) init_mask |= Mask{1} << q;

    // Spoiler's trace must be extendable to an infinite one in the forward case.
    std::vector<bool> infinite(n, true);
    if (forward) {
        detail::Sccs scc = detail::strongly_connected_components(a);
        std::vector<State> seeds;
        for (State q = 0; q < n; ++q)
            if (scc.nontrivial[scc.id[q]]) seeds.push_back(q);
        infinite = detail::reachable(a, seeds, false);
    }

    auto step_mask = [&](Mask from, Symbol sym) {
        Mask out = 0;
        for (State q = 0; q < n; ++q)
            if (from >> q & 1)
                for (State t : forward ? a.succ(q, sym) : a.pred(q, sym)) out |= Mask{1} << t;
        return out;
    };
    auto start_mask = [&](State p, State q) -> Mask {
        if (a.is_accepting(p) && !a.is_accepting(q)) return 0;
        return Mask{1} << q;
    };
    auto is_target = [&](const Node& v) {
        if (forward) return v.s == 0;
        return a.is_initial(v.p) && (v.s & init_mask) == 0;
    };

    std::unordered_map<std::uint64_t, std::uint32_t> id;
    std::vector<Node> nodes;
    std::vector<std::vector<std::uint32_t>> preds;
    auto key = [](const Node& v) { return (std::uint64_t{v.p} << 32) | v.s; };
    auto intern = [&](const Node& v) {
        auto [it, fresh] = id.try_emplace(key(v), static_cast<std::uint32_t>(nodes.size()));
        if (fresh) {
            nodes.push_back(v);
            preds.emplace_back();
        }
        return std::make_pair(it->second, fresh);
    };

    std::vector<std::uint32_t> work;
    for (State p = 0; p < n; ++p) {
        if (!infinite[p]) continue;
        for (State q = 0; q < n; ++q) {
            auto [v, fresh] = intern({p, start_mask(p, q)});
            if (fresh) work.push_back(v);
        }
    }
    while (!work.empty()) {
        std::uint32_t v = work.back();
        work.pop_back();
        Node cur = nodes[v];
        for (Symbol sym = 0; sym < ns; ++sym) {
            Mask moved = step_mask(cur.s, sym);
            for (State p2 : forward ? a.succ(cur.p, sym) : a.pred(cur.p, sym)) {
                if (!infinite[p2]) continue;
                Mask s2 = moved;
                if (a.is_accepting(p2)) s2 &= final_mask;
                auto [w, fresh] = intern({p2, s2});
                preds[w].push_back(v);
                if (fresh) work.push_back(w);
            }
        }
    }

    std::vector<bool> spoiler_wins(nodes.size(), false);
    for (std::uint32_t v = 0; v < nodes.size(); ++v)
        if (is_target(nodes[v])) {
            spoiler_wins[v] = true;
            work.push_back(v);
        }
    while (!work.empty()) {
        std::uint32_t v = work.back();
        work.pop_back();
        for (std::uint32_t u : preds[v])
            if (!spoiler_wins[u]) {
                spoiler_wins[u] = true;
                work.push_back(u);
            }
    }

    Relation r(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (!infinite[p]) {
                r.set(p, q);
                continue;
            }
            if (!spoiler_wins[id.at(key({p, start_mask(p, q)}))]) r.set(p, q);
        }
    return r;
}

}  // namespace bamin
