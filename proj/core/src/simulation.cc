#include "bamin/simulation.hh"

#include <stdexcept>
#include <vector>

#include "bits.hh"
#include "parity.hh"

namespace bamin {

std::string_view SimVariant::name() const {
    switch (condition) {
        case Condition::direct: return "di";
        case Condition::delayed: return "de";
        case Condition::fair: return "f";
        case Condition::backward: return "bw";
        case Condition::backward_minus: return "bw-";
        case Condition::backward_count: return "bw-c";
    }
    return "?";
}

namespace {

/// Greatest relation where every Spoiler step is matched by a step into the
/// relation. `forward` picks successors or predecessors.
Relation refine_step_matching(const Automaton& a, bool forward, Relation r) {
    const std::size_t n = a.num_states(), ns = a.num_symbols();
    const std::size_t nw = r.words_per_row();
    std::vector<detail::Word> next(n * ns * nw, 0);
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < ns; ++s)
            for (State t : forward ? a.succ(q, s) : a.pred(q, s)) detail::set_bit(&next[(q * ns + s) * nw], t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                if (!r.test(p, q)) continue;
                bool ok = true;
                for (Symbol s = 0; s < ns && ok; ++s) {
                    const detail::Word* dup = &next[(q * ns + s) * nw];
                    for (State p2 : forward ? a.succ(p, s) : a.pred(p, s))
                        if (!detail::intersects(dup, r.row(p2), nw)) {
                            ok = false;
                            break;
                        }
                }
                if (!ok) {
                    r.reset(p, q);
                    changed = true;
                }
            }
    }
    return r;
}

/// One-step delayed or fair simulation as an explicit parity game.
///
/// Spoiler nodes carry (p, q) and, for the delayed game, an "obligation
/// pending" bit. Duplicator nodes carry (p', symbol, q[, bit]).
Relation buchi_game_sim(const Automaton& a, bool delayed) {
    const std::size_t n = a.num_states(), ns = a.num_symbols();
    const std::size_t bits = delayed ? 2 : 1;
    auto acc = [&](State q) { return a.is_accepting(q); };

    detail::ParityGame g;
    // Sinks: 0 wins for Duplicator (even), 1 wins for Spoiler (odd).
    const std::uint32_t even_sink = g.add_node(0, 0);
    const std::uint32_t odd_sink = g.add_node(0, 1);
    g.succ[even_sink].push_back(even_sink);
    g.succ[odd_sink].push_back(odd_sink);

    const std::uint32_t spo_base = static_cast<std::uint32_t>(g.size());
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            for (std::size_t b = 0; b < bits; ++b) {
                std::uint8_t prio;
                if (delayed)
                    prio = b ? 1 : 2;
                else
                    prio = acc(q) ? 2 : (acc(p) ? 1 : 0);
                g.add_node(1, prio);
            }
    const std::uint32_t dup_base = static_cast<std::uint32_t>(g.size());
    for (std::size_t i = 0; i < n * ns * n * bits; ++i) g.add_node(0, 0);

    auto spo = [&](State p, State q, std::size_t b) {
        return spo_base + static_cast<std::uint32_t>((p * n + q) * bits + b);
    };
    auto dup = [&](State p2, Symbol s, State q, std::size_t b) {
        return dup_base + static_cast<std::uint32_t>(((p2 * ns + s) * n + q) * bits + b);
    };

    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            for (std::size_t b = 0; b < bits; ++b) {
                auto v = spo(p, q, b);
                for (Symbol s = 0; s < ns; ++s)
                    for (State p2 : a.succ(p, s)) g.succ[v].push_back(dup(p2, s, q, b));
                if (g.succ[v].empty()) g.succ[v].push_back(even_sink);
            }
    for (State p2 = 0; p2 < n; ++p2)
        for (Symbol s = 0; s < ns; ++s)
            for (State q = 0; q < n; ++q)
                for (std::size_t b = 0; b < bits; ++b) {
                    auto v = dup(p2, s, q, b);
                    for (State q2 : a.succ(q, s)) {
                        std::size_t b2 = delayed ? ((b || acc(p2)) && !acc(q2)) : 0;
                        g.succ[v].push_back(spo(p2, q2, b2));
                    }
                    if (g.succ[v].empty()) g.succ[v].push_back(odd_sink);
                }

    auto win = detail::solve_parity(g);
    Relation r(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            std::size_t b0 = delayed ? (acc(p) && !acc(q)) : 0;
            if (win[spo(p, q, b0)] == 0) r.set(p, q);
        }
    return r;
}

}  // namespace

Relation ordinary_sim(const Automaton& a, SimVariant v) {
    const std::size_t n = a.num_states();
    switch (v.condition) {
        case Condition::direct: {
            Relation r(n);
            for (State p = 0; p < n; ++p)
                for (State q = 0; q < n; ++q)
                    if (!a.is_accepting(p) || a.is_accepting(q)) r.set(p, q);
            return refine_step_matching(a, true, std::move(r));
        }
        case Condition::backward: {
            Relation r(n);
            for (State p = 0; p < n; ++p)
                for (State q = 0; q < n; ++q)
                    if ((!a.is_accepting(p) || a.is_accepting(q)) && (!a.is_initial(p) || a.is_initial(q)))
                        r.set(p, q);
            return refine_step_matching(a, false, std::move(r));
        }
        case Condition::delayed:
            return buchi_game_sim(a, true);
        case Condition::fair:
            return buchi_game_sim(a, false);
        default:
            throw std::invalid_argument("ordinary simulation is defined for di, de, f and bw only");
    }
}

Relation mediated_preorder(const Automaton& a) {
    Relation di = ordinary_sim(a, SimVariant::di());
    Relation bw = ordinary_sim(a, SimVariant::bw());
    Relation m = di.compose(bw.transpose());
    const std::size_t n = a.num_states(), nw = m.words_per_row();
    // Drop (x, y) while some y ⊑di w has (x, w) outside M.
    bool changed = true;
    while (changed) {
        changed = false;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y) {
                if (!m.test(x, y)) continue;
                const auto* need = di.row(y);
                const auto* have = m.row(x);
                for (std::size_t i = 0; i < nw; ++i)
                    if (need[i] & ~have[i]) {
                        m.reset(x, y);
                        changed = true;
                        break;
                    }
            }
    }
    return m;
}

}  // namespace bamin
