#include "fixtures.hh"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bamin/randgen.hh"

namespace bamin::fixture {

namespace {

struct Edge {
    const char* src;
    const char* labels;  // one transition per character
    const char* dst;
};

Automaton build(std::initializer_list<const char*> states, std::initializer_list<const char*> initial,
                std::initializer_list<const char*> accepting, std::initializer_list<Edge> edges,
                const std::string& alphabet) {
    AutomatonBuilder b;
    for (char c : alphabet) b.add_symbol(std::string(1, c));
    for (const char* s : states) b.state(s);
    for (const char* s : initial) b.set_initial(b.state(s));
    for (const char* s : accepting) b.set_accepting(b.state(s));
    for (const Edge& e : edges)
        for (const char* c = e.labels; *c; ++c) b.add_transition(e.src, std::string(1, *c), e.dst);
    return b.build();
}

}  // namespace

Automaton bw_trace_di_trace() {
    return build({"i", "p0", "q0", "r0", "s0", "x0", "y0", "p1", "q1", "r1", "s1", "x1", "y1", "f"}, {"i"}, {"f"},
                 {{"i", "a", "p0"},
                  {"i", "c", "x0"},
                  {"i", "b", "r0"},
                  {"i", "ac", "p1"},
                  {"p0", "a", "q0"},
                  {"q0", "a", "r0"},
                  {"r0", "a", "s0"},
                  {"s0", "ad", "f"},
                  {"x0", "a", "y0"},
                  {"y0", "a", "r0"},
                  {"p1", "a", "q1"},
                  {"q1", "a", "x1"},
                  {"q1", "b", "f"},
                  {"q1", "a", "r1"},
                  {"r1", "a", "s1"},
                  {"s1", "a", "f"},
                  {"x1", "a", "y1"},
                  {"y1", "d", "f"},
                  {"f", "e", "f"}},
                 "abcde");
}

Automaton union_of_prunings() {
    return build({"p", "q", "r", "s"}, {"p"}, {"s"},
                 {{"p", "a", "q"}, {"q", "ab", "s"}, {"p", "ab", "r"}, {"r", "a", "s"}, {"s", "c", "s"}}, "abc");
}

Automaton delayed_little_brother() {
    return build({"p", "q"}, {"p"}, {"q"}, {{"p", "a", "q"}, {"p", "ab", "p"}, {"q", "a", "q"}}, "ab");
}

Automaton transient_chain() {
    return build({"p", "q", "r"}, {"p", "q"}, {"r"},
                 {{"p", "a", "q"}, {"q", "ab", "r"}, {"p", "ab", "p"}, {"r", "a", "r"}}, "ab");
}

Automaton non_transitive() {
    return build({"p0", "q0", "q1", "q2", "r0", "r1", "r2"}, {"p0", "q0", "r0"},
                 {"p0", "q0", "q1", "q2", "r0", "r1", "r2"},
                 {{"p0", "ab", "p0"},
                  {"q0", "ab", "q1"},
                  {"q0", "ab", "q2"},
                  {"q1", "a", "q0"},
                  {"q2", "b", "q0"},
                  {"r0", "ab", "r1"},
                  {"r0", "ab", "r2"},
                  {"r1", "a", "r1"},
                  {"r1", "a", "r2"},
                  {"r2", "b", "r2"},
                  {"r2", "b", "r1"}},
                 "ab");
}

Lasso lasso(const Automaton& a, const std::string& stem, const std::string& cycle) {
    auto word = [&](const std::string& text) {
        std::vector<Symbol> w;
        for (char c : text) {
            auto s = a.find_symbol(std::string(1, c));
            if (!s) throw std::invalid_argument(std::string("unknown letter ") + c);
            w.push_back(*s);
        }
        return w;
    };
    return Lasso{word(stem), word(cycle)};
}

State state(const Automaton& a, const std::string& name) {
    auto q = a.find_state(name);
    if (!q) throw std::invalid_argument("no state named " + name);
    return *q;
}

Automaton random_tv(std::uint64_t seed, std::size_t n, double td, double ad) {
    return tabakov_vardi(RandomSpec{n, 2, std::min(td, double(n)), ad, seed});
}

Automaton random_general(std::uint64_t seed, std::size_t n, double density) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    AutomatonBuilder b;
    b.add_symbol("a");
    b.add_symbol("b");
    for (std::size_t q = 0; q < n; ++q) b.add_state("s" + std::to_string(q));
    bool any_initial = false;
    for (State q = 0; q < n; ++q) {
        if (coin(rng) < 0.25) {
            b.set_initial(q);
            any_initial = true;
        }
        if (coin(rng) < 0.5) b.set_accepting(q);
    }
    if (!any_initial) b.set_initial(0);
    for (State p = 0; p < n; ++p)
        for (Symbol s = 0; s < 2; ++s)
            for (State q = 0; q < n; ++q)
                if (coin(rng) < density / double(n)) b.add_transition(p, s, q);
    return b.build();
}

std::vector<Automaton> small_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Automaton> out;
    const double tds[] = {1.5, 2.0, 2.5};
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = min_n + rng() % (max_n - min_n + 1);
        if (i % 4 == 3)
            out.push_back(random_general(rng(), n, tds[i % 3]));
        else
            out.push_back(random_tv(rng(), n, tds[i % 3]));
    }
    return out;
}

}  // namespace bamin::fixture
