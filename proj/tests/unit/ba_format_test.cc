#include <gtest/gtest.h>

#include <algorithm>

#include "bamin/ba_format.hh"
#include "fixtures.hh"

namespace bamin {
namespace {

TEST(BaFormat, MinimalFile) {
    Automaton a = parse_ba("[1]\na,[1]->[2]\n[2]\n");
    ASSERT_EQ(a.num_states(), 2u);
    EXPECT_EQ(a.initial(), std::vector<State>{0});
    EXPECT_EQ(a.accepting(), std::vector<State>{1});
    EXPECT_EQ(a.num_transitions(), 1u);
    EXPECT_TRUE(a.has_transition(0, 0, 1));
    EXPECT_EQ(a.state_name(0), "1");
}

TEST(BaFormat, Defaults) {
    Automaton a = parse_ba("a,p->q\nb,[q]->[r]\n");
    EXPECT_EQ(a.initial(), std::vector<State>{0});
    EXPECT_EQ(a.accepting().size(), 3u);

    Automaton b = parse_ba("\n[x]\n\nlong label,[x]->[y]\n\n[y]\n\n");
    EXPECT_EQ(b.alphabet(), std::vector<std::string>{"long label"});
    EXPECT_EQ(b.accepting(), std::vector<State>{1});
}

TEST(BaFormat, SmallestNonEmptyLanguageIsThreeLines) {
    AutomatonBuilder b({"a"});
    State q = b.state("q");
    b.set_initial(q);
    b.set_accepting(q);
    b.add_transition(q, 0, q);
    EXPECT_EQ(serialize_ba(b.build()), "[q]\na,[q]->[q]\n[q]\n");
}

TEST(BaFormat, NoTransitionsGivesHeaderOnly) {
    AutomatonBuilder b({"a"});
    State q = b.state("q");
    b.set_initial(q);
    std::string text = serialize_ba(b.build());
    EXPECT_EQ(text.find("->"), std::string::npos);
    EXPECT_EQ(text.substr(0, 4), "[q]\n");
}

/// The format cannot express an empty accepting set, states that occur in no
/// line, or symbols without transitions.
bool representable(const Automaton& a) {
    if (a.accepting().empty() || a.num_transitions() == 0) return false;
    std::vector<bool> seen(a.num_states(), false), used(a.num_symbols(), false);
    for (State q : a.initial()) seen[q] = true;
    for (State q : a.accepting()) seen[q] = true;
    for (const TransitionRef& t : a.transitions()) seen[t.src] = seen[t.dst] = used[t.sym] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
           std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

TEST(BaFormat, RoundTrip) {
    auto corpus = fixture::small_corpus(100, 1, 12, 3);
    corpus.push_back(fixture::bw_trace_di_trace());
    corpus.push_back(fixture::non_transitive());
    std::size_t checked = 0;
    for (const Automaton& a : corpus) {
        if (!representable(a)) continue;
        ++checked;
        Automaton once = parse_ba(serialize_ba(a));
        once.audit();
        EXPECT_TRUE(equal_up_to_renaming(once, a));
        EXPECT_EQ(once.state_names().size(), a.num_states());
        EXPECT_EQ(parse_ba(serialize_ba(once)).num_transitions(), a.num_transitions());
    }
    EXPECT_GT(checked, 50u);
}

TEST(BaFormat, RoundTripKeepsIndicesInAppearanceOrder) {
    const char* text = "[x]\na,[x]->[y]\na,[y]->[z]\nb,[z]->[x]\n[z]\n";
    Automaton a = parse_ba(text);
    EXPECT_EQ(serialize_ba(a), text);
    EXPECT_EQ(parse_ba(serialize_ba(a)), a);
}

TEST(BaFormat, LanguageSurvivesUnwritableCases) {
    AutomatonBuilder b({"a"});
    State q = b.state("q");
    b.set_initial(q);
    b.add_transition(q, 0, q);
    Automaton rejecting = b.build();
    Automaton back = parse_ba(serialize_ba(rejecting));
    EXPECT_TRUE(back.accepting().size() == 1 && back.state_name(back.accepting()[0]) == "_");
    EXPECT_FALSE(member_lasso(back, {{}, {0}}));

    Automaton empty = parse_ba(serialize_ba(Automaton{}));
    EXPECT_EQ(empty.num_transitions(), 0u);
    EXPECT_EQ(empty.num_states(), 1u);
}

TEST(BaFormat, ReportsLineOfMalformedInput) {
    try {
        parse_ba("[p]\na,[p]->[q]\nnot a transition\nb,[q]->[p]\n[q]\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_ba(""), ParseError);
    EXPECT_THROW(parse_ba("\n\n"), ParseError);
    EXPECT_THROW(parse_ba("a,[p]->\n"), ParseError);
    EXPECT_THROW(parse_ba(",[p]->[q]\n"), ParseError);
}

TEST(BaFormat, LassoText) {
    Automaton a = fixture::union_of_prunings();
    Lasso w = parse_lasso("a,a;c", a);
    EXPECT_EQ(w, fixture::lasso(a, "aa", "c"));
    EXPECT_EQ(parse_lasso(format_lasso(w, a), a), w);
    EXPECT_EQ(parse_lasso(";c", a).stem.size(), 0u);
    EXPECT_THROW(parse_lasso("a;", a), ParseError);
    EXPECT_THROW(parse_lasso("a;zz", a), ParseError);
}

}  // namespace
}  // namespace bamin
