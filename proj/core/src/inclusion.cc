#include "bamin/inclusion.hh"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "bamin/minimize.hh"
#include "bamin/simulation.hh"
#include "bits.hh"

namespace bamin {

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::included: return "included";
        case Outcome::not_included: return "not_included";
        case Outcome::unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::none: return "none";
        case Stage::gfi_minimized: return "1a";
        case Stage::gfi_pruned: return "1b";
        case Stage::jumping: return "2";
        case Stage::counterexample: return "3";
    }
    return "?";
}

void InclusionConfig::validate() const {
    if (k < 1 || k > 15) throw std::invalid_argument("lookahead must be between 1 and 15");
    if (max_u > 16 || max_v > 16) throw std::invalid_argument("lasso bounds above 16 are not supported");
}

void InclusionVerdict::set_counterexample(const Automaton& a, const Automaton& b, Lasso w) {
    if (!member_lasso(a, w) || member_lasso(b, w))
        throw std::logic_error("counterexample does not separate the two languages");
    outcome = Outcome::not_included;
    stage = Stage::counterexample;
    witness = std::move(w);
}

std::string InclusionVerdict::to_json(const Automaton& alphabet_of) const {
    using json = nlohmann::ordered_json;
    json doc = {{"schema", 1}, {"outcome", std::string(to_string(outcome))}};
    doc["stage"] = stage == Stage::none ? json(nullptr) : json(std::string(to_string(stage)));
    if (witness) {
        auto labels = [&](const std::vector<Symbol>& w) {
            json arr = json::array();
            for (Symbol s : w) arr.push_back(alphabet_of.symbol_label(s));
            return arr;
        };
        doc["witness"] = {{"u", labels(witness->stem)}, {"v", labels(witness->cycle)}};
    }
    if (!matching.empty()) {
        json m = json::array();
        for (auto& [p, q] : matching) m.push_back({p, q});
        doc["matching"] = m;
    }
    doc["times_ms"] = {{"stage1", stage1_ms}, {"stage2", stage2_ms}, {"stage3", stage3_ms}};
    doc["sizes"] = {{"A", size_a}, {"B", size_b}, {"A'", size_a_reduced}, {"B'", size_b_reduced}};
    return doc.dump(2);
}

bool initial_states_covered(const Automaton& a, const Automaton& b, const Relation& on_union,
                            std::vector<std::pair<std::string, std::string>>* matching) {
    const State shift = static_cast<State>(a.num_states());
    std::vector<std::pair<std::string, std::string>> found;
    for (State p : a.initial()) {
        auto hit = std::find_if(b.initial().begin(), b.initial().end(),
                                [&](State q) { return on_union.test(p, shift + q); });
        if (hit == b.initial().end()) return false;
        found.emplace_back(a.state_name(p), b.state_name(*hit));
    }
    if (matching) *matching = std::move(found);
    return true;
}

Automaton prune_a_wrt_b(const Automaton& a, const Automaton& b, unsigned k) {
    Automaton u = disjoint_union(a, b);
    Relation src = lookahead_preorder(u, SimVariant::bw_minus(), k);
    Relation tgt = lookahead_preorder(u, SimVariant::f(), k);
    const std::size_t na = a.num_states(), ns = u.num_symbols();
    const std::size_t nw = src.words_per_row();
    // For each (symbol, B-source) the B-targets, as bits in union indices.
    std::vector<detail::Word> b_succ(u.num_states() * ns * nw, 0);
    for (State p = static_cast<State>(na); p < u.num_states(); ++p)
        for (Symbol s = 0; s < ns; ++s)
            for (State r : u.succ(p, s)) detail::set_bit(&b_succ[(p * ns + s) * nw], r);

    return filter_transitions(a, [&](const TransitionRef& t) {
        // t's symbol index is the same in a and in the union (a's labels come first).
        bool dominated = false;
        for (State pp = static_cast<State>(na); pp < u.num_states() && !dominated; ++pp)
            if (src.test(t.src, pp) && detail::intersects(&b_succ[(pp * ns + t.sym) * nw], tgt.row(t.dst), nw))
                dominated = true;
        return !dominated;
    });
}

Automaton restrict_b_to_product(const Automaton& a, const Automaton& b) {
    const std::size_t nb = b.num_states();
    std::vector<bool> seen(a.num_states() * nb, false);
    std::vector<bool> keep(nb, false);
    std::vector<std::pair<State, State>> work;
    for (State p : a.initial())
        for (State q : b.initial()) {
            seen[p * nb + q] = true;
            work.emplace_back(p, q);
        }
    while (!work.empty()) {
        auto [p, q] = work.back();
        work.pop_back();
        keep[q] = true;
        for (Symbol s = 0; s < a.num_symbols(); ++s)
            for (State p2 : a.succ(p, s))
                for (State q2 : b.succ(q, s))
                    if (!seen[p2 * nb + q2]) {
                        seen[p2 * nb + q2] = true;
                        work.emplace_back(p2, q2);
                    }
    }
    return restrict_states(b, keep);
}

std::optional<Lasso> find_counterexample(const Automaton& a, const Automaton& b, std::size_t max_u,
                                         std::size_t max_v, std::chrono::steady_clock::time_point deadline) {
    if (a.alphabet() != b.alphabet()) throw AlphabetMismatch("automata must share the same alphabet order");
    if (a.num_states() == 0 || max_v == 0) return std::nullopt;
    LassoTable ta(a, max_u, max_v);
    if (std::chrono::steady_clock::now() > deadline) return std::nullopt;
    LassoTable tb(b, max_u, max_v);
    for (std::size_t i = 0; i < ta.num_stems(); ++i) {
        if (!ta.stem_alive(i)) continue;
        if (std::chrono::steady_clock::now() > deadline) return std::nullopt;
        for (std::size_t j = 0; j < ta.num_cycles(); ++j)
            if (ta.accepts(i, j) && !tb.accepts(i, j)) return Lasso{ta.stem(i), ta.cycle(j)};
    }
    return std::nullopt;
}

InclusionVerdict check_inclusion(const Automaton& a_in, const Automaton& b_in, const InclusionConfig& cfg) {
    cfg.validate();
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); };

    std::set<std::string> la(a_in.alphabet().begin(), a_in.alphabet().end());
    std::set<std::string> lb(b_in.alphabet().begin(), b_in.alphabet().end());
    if (la != lb) throw AlphabetMismatch("the two automata have different alphabets");
    const Automaton& a = a_in;
    const Automaton b = with_alphabet(b_in, a.alphabet());

    InclusionVerdict v;
    v.size_a = a.num_states();
    v.size_b = b.num_states();

    auto fair_cover = [&](const Automaton& x, const Automaton& y) {
        if (x.initial().empty()) {
            v.matching.clear();
            return true;
        }
        Automaton u = disjoint_union(x, y);
        return initial_states_covered(x, y, lookahead_preorder(u, SimVariant::f(), cfg.k), &v.matching);
    };

    // Stage 1: minimize both sides and prune A against B, probing for a
    // fair-simulation match of the initial states after every change.
    auto t1 = Clock::now();
    MinimizeConfig mcfg;
    mcfg.k = cfg.k;
    Automaton ra = remove_dead(a);
    Automaton rb = remove_dead(b);
    auto finish = [&](Stage s) {
        v.outcome = Outcome::included;
        v.stage = s;
        v.size_a_reduced = ra.num_states();
        v.size_b_reduced = rb.num_states();
        v.stage1_ms = ms(t1);
        return v;
    };
    if (fair_cover(ra, rb)) return finish(Stage::gfi_minimized);
    for (unsigned round = 0; round < cfg.max_rounds; ++round) {
        Automaton na = heavy_pass(ra, mcfg);
        Automaton nb = heavy_pass(rb, mcfg);
        bool changed = !(na == ra) || !(nb == rb);
        if (changed) {
            ra = std::move(na);
            rb = std::move(nb);
            if (fair_cover(ra, rb)) return finish(Stage::gfi_minimized);
        }
        Automaton pa = remove_dead(prune_a_wrt_b(ra, rb, cfg.k));
        Automaton pb = remove_dead(restrict_b_to_product(pa, rb));
        bool pruned = !(pa == ra) || !(pb == rb);
        if (pruned) {
            ra = std::move(pa);
            rb = std::move(pb);
            if (fair_cover(ra, rb)) return finish(Stage::gfi_pruned);
        }
        if (!changed && !pruned) break;
    }
    v.size_a_reduced = ra.num_states();
    v.size_b_reduced = rb.num_states();
    v.stage1_ms = ms(t1);

    // Stage 2: let Duplicator jump along backward-count lookahead simulation on B.
    if (cfg.jumping) {
        auto t2 = Clock::now();
        Automaton u = disjoint_union(ra, rb);
        Relation jump_b = lookahead_preorder(rb, SimVariant::bw_count(), cfg.k);
        Relation jump = embed_block(jump_b, ra.num_states(), u.num_states());
        Relation rel = jumping_fair_sim(u, cfg.k, jump);
        bool covered = initial_states_covered(ra, rb, rel, &v.matching);
        v.stage2_ms = ms(t2);
        if (covered) {
            v.outcome = Outcome::included;
            v.stage = Stage::jumping;
            return v;
        }
        v.matching.clear();
    }

    // Stage 3: bounded search for a separating lasso on the reduced pair,
    // re-checked against the original automata.
    auto t3 = Clock::now();
    std::size_t default_bound = std::min<std::size_t>(2 * ra.num_states(), 12);
    std::size_t max_u = cfg.max_u ? cfg.max_u : default_bound;
    std::size_t max_v = cfg.max_v ? cfg.max_v : std::max<std::size_t>(default_bound, 1);
    // Keep the precomputed tables to a manageable number of words.
    auto words = [&](std::size_t len) {
        double total = 0, level = 1;
        for (std::size_t i = 0; i <= len; ++i, level *= double(a.num_symbols())) total += level;
        return total;
    };
    while (max_u > 0 && words(max_u) > double(1 << 17)) --max_u;
    while (max_v > 1 && words(max_v) > double(1 << 17)) --max_v;
    auto w = find_counterexample(ra, rb, max_u, max_v, t3 + cfg.counterexample_budget);
    v.stage3_ms = ms(t3);
    if (w) v.set_counterexample(a, b, std::move(*w));
    return v;
}

}  // namespace bamin
