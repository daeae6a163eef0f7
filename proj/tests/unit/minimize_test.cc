#include <gtest/gtest.h>

#include <json.hpp>

#include "bamin/minimize.hh"
#include "bamin/simulation.hh"
#include "fixtures.hh"
#include "oracles.hh"

namespace bamin {
namespace {

MinimizeConfig config(Method m, unsigned k) {
    MinimizeConfig c;
    c.method = m;
    c.k = k;
    return c;
}

/// No two distinct states equivalent under ⊑bw or ⊑di, and no distinct x, y
/// with x below y in both.
bool mediated_premises(const Automaton& a) {
    Relation di = ordinary_sim(a, SimVariant::di());
    Relation bw = ordinary_sim(a, SimVariant::bw());
    Relation both = di & bw;
    for (State x = 0; x < a.num_states(); ++x)
        for (State y = 0; y < a.num_states(); ++y) {
            if (x == y) continue;
            if (both.test(x, y)) return false;
            if (di.test(x, y) && di.test(y, x)) return false;
            if (bw.test(x, y) && bw.test(y, x)) return false;
        }
    return true;
}

TEST(Minimize, HeavyAndLightPreserveTheLanguage) {
    oracle::LassoUniverse u(2, 4, 4);
    for (const Automaton& a : fixture::small_corpus(150, 1, 8, 41))
        for (unsigned k : {1u, 4u, 12u})
            for (Method m : {Method::heavy, Method::light}) {
                Automaton r = minimize(a, config(m, k));
                r.audit();
                EXPECT_LE(r.num_states(), a.num_states());
                ASSERT_FALSE(oracle::language_difference(u, a, r)) << to_string(m) << " k=" << k;
            }
}

TEST(Minimize, HeavyIsAFixpoint) {
    for (const Automaton& a : fixture::small_corpus(100, 2, 14, 42))
        for (unsigned k : {1u, 3u, 12u}) {
            MinimizeStats stats;
            Automaton once = heavy(a, config(Method::heavy, k), &stats);
            EXPECT_FALSE(stats.hit_iteration_cap);
            EXPECT_EQ(heavy(once, config(Method::heavy, k)), once);
            EXPECT_EQ(heavy_pass(once, config(Method::heavy, k)), once);
        }
}

TEST(Minimize, LightIsNeverSmallerThanHeavy) {
    for (const Automaton& a : fixture::small_corpus(100, 2, 20, 43))
        for (unsigned k : {1u, 4u, 12u})
            EXPECT_GE(light(a, config(Method::light, k)).num_states(), heavy(a, config(Method::heavy, k)).num_states());
}

TEST(Minimize, LightWithLookaheadOneIsTheDelayedQuotient) {
    for (const Automaton& a : fixture::small_corpus(60, 1, 20, 44)) {
        Automaton r = remove_dead(a);
        EXPECT_EQ(light(a, config(Method::light, 1)), quotient(r, ordinary_sim(r, SimVariant::de())));
    }
}

TEST(Minimize, OneStateUniversalAutomatonIsUnchanged) {
    AutomatonBuilder b({"a", "b"});
    State q = b.state("q");
    b.set_initial(q);
    b.set_accepting(q);
    b.add_transition(q, 0, q);
    b.add_transition(q, 1, q);
    Automaton a = b.build();
    EXPECT_EQ(heavy(a, config(Method::heavy, 12)), a);
    EXPECT_EQ(light(a, config(Method::light, 12)), a);
}

TEST(Minimize, LookaheadQuotientIsNotIdempotent) {
    Automaton a = remove_dead(fixture::random_tv(108, 8, 2.5));
    Automaton once = quotient(a, lookahead_preorder(a, SimVariant::de(), 2));
    Automaton twice = quotient(once, lookahead_preorder(once, SimVariant::de(), 2));
    EXPECT_LT(once.num_states(), a.num_states());
    EXPECT_LT(twice.num_states(), once.num_states());
    oracle::LassoUniverse u(2, 4, 4);
    EXPECT_FALSE(oracle::language_difference(u, a, twice));
    // Ordinary simulation has no such effect.
    Automaton plain = quotient(a, ordinary_sim(a, SimVariant::de()));
    EXPECT_EQ(quotient(plain, ordinary_sim(plain, SimVariant::de())), plain);
}

TEST(Minimize, MediatedPreorderHasNoEffectAfterHeavy) {
    std::size_t checked = 0;
    for (const Automaton& a : fixture::small_corpus(150, 4, 30, 45)) {
        Automaton m = heavy(a, config(Method::heavy, 12));
        if (!mediated_premises(m)) continue;
        ++checked;
        EXPECT_EQ(quotient(m, mediated_preorder(m)), m);
    }
    EXPECT_GT(checked, 50u);
}

TEST(Minimize, StatsDocument) {
    Automaton a = fixture::random_tv(7, 30, 1.8);
    MinimizeStats stats;
    Automaton m = heavy(a, config(Method::heavy, 4), &stats);
    auto doc = nlohmann::json::parse(stats.to_json());
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["method"], "heavy");
    EXPECT_EQ(doc["k"], 4);
    EXPECT_EQ(doc["input"]["states"], a.num_states());
    EXPECT_EQ(doc["output"]["states"], m.num_states());
    EXPECT_EQ(doc["output"]["transitions"], m.num_transitions());
    ASSERT_FALSE(doc["passes"].empty());
    for (const auto& pass : doc["passes"])
        for (const auto& step : pass["steps"]) {
            EXPECT_TRUE(step["technique"].is_string());
            EXPECT_GE(step["time_ms"].get<double>(), 0.0);
        }
    EXPECT_LE(stats.output_states, stats.input_states);
}

TEST(Minimize, PruningsCanBeDisabled) {
    MinimizeConfig c = config(Method::heavy, 3);
    c.prunings.clear();
    oracle::LassoUniverse u(2, 4, 4);
    for (const Automaton& a : fixture::small_corpus(40, 2, 8, 46)) {
        Automaton r = heavy(a, c);
        EXPECT_FALSE(oracle::language_difference(u, a, r));
    }
}

}  // namespace
}  // namespace bamin
