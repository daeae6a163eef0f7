#include "graph.hh"

#include <algorithm>
#include <limits>

namespace bamin::detail {

Sccs strongly_connected_components(const Automaton& a) {
    const std::size_t n = a.num_states();
    const std::size_t ns = a.num_symbols();
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

    Sccs out;
    out.id.assign(n, kUnvisited);
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::uint32_t next_index = 0;

    // Iterative Tarjan; a frame remembers which (symbol, position) to resume at.
    struct Frame {
        State v;
        Symbol sym;
        std::size_t pos;
    };
    std::vector<Frame> call;

    for (State root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            bool descended = false;
            while (f.sym < ns && !descended) {
                auto succ = a.succ(f.v, f.sym);
                if (f.pos >= succ.size()) {
                    ++f.sym;
                    f.pos = 0;
                    continue;
                }
                State w = succ[f.pos++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0, 0});
                    descended = true;
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            }
            if (descended) continue;
            State v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::uint32_t c = out.count++;
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.id[w] = c;
                } while (w != v);
            }
        }
    }

    out.nontrivial.assign(out.count, false);
    for (State p = 0; p < n; ++p)
        for (Symbol s = 0; s < ns; ++s)
            for (State q : a.succ(p, s))
                if (out.id[p] == out.id[q]) out.nontrivial[out.id[p]] = true;
    return out;
}

std::vector<bool> reachable(const Automaton& a, const std::vector<State>& seeds, bool forward) {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<State> work;
    for (State s : seeds)
        if (!seen[s]) {
            seen[s] = true;
            work.push_back(s);
        }
    while (!work.empty()) {
        State p = work.back();
        work.pop_back();
        for (Symbol s = 0; s < a.num_symbols(); ++s)
            for (State q : forward ? a.succ(p, s) : a.pred(p, s))
                if (!seen[q]) {
                    seen[q] = true;
                    work.push_back(q);
                }
    }
    return seen;
}

}  // namespace bamin::detail
