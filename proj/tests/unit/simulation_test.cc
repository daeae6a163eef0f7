#include <gtest/gtest.h>

#include "bamin/simulation.hh"
#include "fixtures.hh"
#include "oracles.hh"

namespace bamin {
namespace {

using fixture::state;

/// Greatest fixpoint of single-step refinement, for di and bw.
Relation naive_step_sim(const Automaton& a, bool backward) {
    const std::size_t n = a.num_states();
    Relation r(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            bool ok = !a.is_accepting(p) || a.is_accepting(q);
            if (backward) ok = ok && (!a.is_initial(p) || a.is_initial(q));
            if (ok) r.set(p, q);
        }
    auto moves = [&](State p, Symbol s) { return backward ? a.pred(p, s) : a.succ(p, s); };
    for (bool changed = true; changed;) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                if (!r.test(p, q)) continue;
                bool answered = true;
                for (Symbol s = 0; s < a.num_symbols() && answered; ++s)
                    for (State p2 : moves(p, s)) {
                        bool hit = false;
                        for (State q2 : moves(q, s)) hit = hit || r.test(p2, q2);
                        if (!hit) {
                            answered = false;
                            break;
                        }
                    }
                if (!answered) {
                    r.reset(p, q);
                    changed = true;
                }
            }
    }
    return r;
}

Relation naive_mediated(const Automaton& a) {
    Relation di = naive_step_sim(a, false), bw = naive_step_sim(a, true);
    Relation m = di.compose(bw.transpose());
    while (true) {
        // Drop (p, r) whenever some r ⊑di s has (p, s) outside M.
        Relation next(m.size());
        for (auto [p, r] : m.pairs()) {
            bool ok = true;
            for (State s = 0; s < m.size() && ok; ++s)
                if (di.test(r, s) && !m.test(p, s)) ok = false;
            if (ok) next.set(p, r);
        }
        if (next == m) return m;
        m = std::move(next);
    }
}

TEST(Simulation, DirectAndBackwardMatchNaiveRefinement) {
    for (const Automaton& a : fixture::small_corpus(500, 1, 20, 21)) {
        ASSERT_EQ(ordinary_sim(a, SimVariant::di()), naive_step_sim(a, false));
        ASSERT_EQ(ordinary_sim(a, SimVariant::bw()), naive_step_sim(a, true));
    }
}

TEST(Simulation, DelayedAndFairMatchExplicitGame) {
    for (const Automaton& a : fixture::small_corpus(200, 1, 9, 22)) {
        ASSERT_EQ(ordinary_sim(a, SimVariant::de()), oracle::lookahead_game(a, oracle::Game::delayed, 1));
        ASSERT_EQ(ordinary_sim(a, SimVariant::f()), oracle::lookahead_game(a, oracle::Game::fair, 1));
    }
}

TEST(Simulation, OrdinarySimulationsArePreorders) {
    for (const Automaton& a : fixture::small_corpus(100, 1, 20, 23))
        for (SimVariant v : {SimVariant::di(), SimVariant::de(), SimVariant::f(), SimVariant::bw()}) {
            Relation r = ordinary_sim(a, v);
            EXPECT_TRUE(r.is_reflexive()) << v.name();
            EXPECT_TRUE(r.is_transitive()) << v.name();
        }
}

TEST(Simulation, DelayedLittleBrother) {
    Automaton a = fixture::delayed_little_brother();
    Relation de = ordinary_sim(a, SimVariant::de()).strict();
    EXPECT_TRUE(de.test(state(a, "q"), state(a, "p")));
    EXPECT_FALSE(ordinary_sim(a, SimVariant::di()).test(state(a, "q"), state(a, "p")));
}

TEST(Simulation, TraceInclusionContainsSimulation) {
    for (const Automaton& a : fixture::small_corpus(150, 1, 8, 24)) {
        Relation di = trace_inclusion_oracle(a, TraceKind::direct);
        Relation bw = trace_inclusion_oracle(a, TraceKind::backward);
        EXPECT_TRUE(ordinary_sim(a, SimVariant::di()).subset_of(di));
        EXPECT_TRUE(ordinary_sim(a, SimVariant::bw()).subset_of(bw));
        EXPECT_TRUE(di.is_reflexive() && di.is_transitive());
        EXPECT_TRUE(bw.is_reflexive() && bw.is_transitive());
    }
}

TEST(Simulation, MediatedPreorder) {
    for (const Automaton& a : fixture::small_corpus(200, 1, 14, 25)) {
        Relation m = mediated_preorder(a);
        Relation di = ordinary_sim(a, SimVariant::di());
        Relation bw = ordinary_sim(a, SimVariant::bw());
        EXPECT_TRUE(di.subset_of(m));
        EXPECT_TRUE(m.compose(di).subset_of(m));
        EXPECT_TRUE(m.subset_of(di.compose(bw.transpose())));
        EXPECT_EQ(m, naive_mediated(a));
    }
}

TEST(Simulation, VariantDirectionIsChecked) {
    EXPECT_THROW(SimVariant(Direction::backward, Condition::fair), std::invalid_argument);
    EXPECT_THROW(SimVariant(Direction::forward, Condition::backward_count), std::invalid_argument);
}

}  // namespace
}  // namespace bamin
