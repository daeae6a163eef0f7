#include "bamin/minimize.hh"

#include <chrono>
#include <optional>

#include <json.hpp>

#include "bamin/simulation.hh"

namespace bamin {

std::string_view to_string(Method m) { return m == Method::heavy ? "heavy" : "light"; }

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Tracks the automaton through a pass and records every step. Relations
/// that do not depend on the step order are cached until the automaton changes.
class Pass {
public:
    Pass(Automaton a, const MinimizeConfig& cfg, PassRecord* rec) : a_(std::move(a)), cfg_(cfg), rec_(rec) {}

    Automaton take() { return std::move(a_); }
    const Automaton& current() const { return a_; }
    bool enabled(PruneKind k) const { return cfg_.prunings.count(k) != 0; }

    void remove_dead_states() {
        auto t0 = Clock::now();
        update(remove_dead(a_));
        log("remove-dead", 0, t0);
    }

    /// Quotients by ⊑bw until no two distinct states are ⊑bw-equivalent.
    void quotient_bw_sim() {
        auto t0 = Clock::now();
        while (true) {
            const Relation& bw = bw_sim();
            Automaton next = quotient(a_, bw);
            if (next == a_) break;
            update(std::move(next));
        }
        log("quotient-bw", bw_sim().count(), t0);
    }

    void quotient_by(const char* name, const Relation& pre, Clock::time_point t0) {
        std::size_t size = pre.count();
        update(quotient(a_, pre));
        log(name, size, t0);
    }

    void quotient_de() {
        auto t0 = Clock::now();
        quotient_by("quotient-de", lookahead_preorder(a_, SimVariant::de(), cfg_.k), t0);
    }

    void quotient_bw() {
        auto t0 = Clock::now();
        Relation pre = bw_k();
        quotient_by("quotient-bw-k", pre, t0);
    }

    void apply(PruneKind kind) {
        if (!enabled(kind)) return;
        auto t0 = Clock::now();
        std::optional<PruneSpec> spec;
        const std::size_t n = a_.num_states();
        switch (kind) {
            case PruneKind::bwsim_di:
                spec = PruneSpec::make(SourceOrder::strict_bw_sim, bw_sim().strict(), TargetOrder::di_lookahead,
                                       di_k());
                break;
            case PruneKind::id_di:
                spec = PruneSpec::make(SourceOrder::identity, Relation::identity(n), TargetOrder::strict_di_trace,
                                       di_k().strict());
                break;
            case PruneKind::transient_fair:
                spec = PruneSpec::transient(di_sim().strict(),
                                            lookahead_preorder(a_, SimVariant::f(), cfg_.k).strict());
                break;
            case PruneKind::bw_id:
                spec = PruneSpec::make(SourceOrder::strict_bw_trace, bw_k().strict(), TargetOrder::identity,
                                       Relation::identity(n));
                break;
            case PruneKind::bw_disim:
                spec = PruneSpec::make(SourceOrder::bw_lookahead, bw_k(), TargetOrder::strict_di_sim,
                                       di_sim().strict());
                break;
        }
        std::size_t size = spec->relation_size();
        update(prune(a_, *spec));
        log(std::string("prune-") + std::string(to_string(kind)), size, t0);
    }

private:
    void update(Automaton next) {
        if (next == a_) return;
        a_ = std::move(next);
        bw_sim_.reset();
        di_sim_.reset();
        di_k_.reset();
        bw_k_.reset();
    }

    const Relation& bw_sim() {
        if (!bw_sim_) bw_sim_ = ordinary_sim(a_, SimVariant::bw());
        return *bw_sim_;
    }
    const Relation& di_sim() {
        if (!di_sim_) di_sim_ = ordinary_sim(a_, SimVariant::di());
        return *di_sim_;
    }
    const Relation& di_k() {
        if (!di_k_) di_k_ = lookahead_preorder(a_, SimVariant::di(), cfg_.k);
        return *di_k_;
    }
    const Relation& bw_k() {
        if (!bw_k_) bw_k_ = lookahead_preorder(a_, SimVariant::bw(), cfg_.k);
        return *bw_k_;
    }

    void log(std::string technique, std::size_t relation_size, Clock::time_point t0) {
        if (!rec_) return;
        rec_->steps.push_back({std::move(technique), a_.num_states(), a_.num_transitions(), relation_size,
                               ms_since(t0)});
    }

    Automaton a_;
    const MinimizeConfig& cfg_;
    PassRecord* rec_;
    std::optional<Relation> bw_sim_, di_sim_, di_k_, bw_k_;
};

void fill_sizes(MinimizeStats* stats, const MinimizeConfig& cfg, const Automaton& in, const Automaton& out,
                Clock::time_point t0) {
    if (!stats) return;
    stats->method = cfg.method;
    stats->k = cfg.k;
    stats->input_states = in.num_states();
    stats->input_transitions = in.num_transitions();
    stats->output_states = out.num_states();
    stats->output_transitions = out.num_transitions();
    stats->time_ms = ms_since(t0);
}

}  // namespace

Automaton heavy_pass(const Automaton& a, const MinimizeConfig& cfg, PassRecord* record) {
    Pass pass(a, cfg, record);
    pass.remove_dead_states();
    pass.quotient_bw_sim();
    pass.apply(PruneKind::bwsim_di);
    pass.quotient_de();
    pass.apply(PruneKind::id_di);
    pass.apply(PruneKind::transient_fair);
    pass.quotient_bw();
    pass.apply(PruneKind::bw_id);
    pass.apply(PruneKind::bw_disim);
    pass.remove_dead_states();
    return pass.take();
}

Automaton heavy(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats) {
    auto t0 = Clock::now();
    if (stats) *stats = MinimizeStats{};
    Automaton cur = a;
    bool converged = false;
    for (unsigned i = 0; i < cfg.max_iterations; ++i) {
        PassRecord rec;
        Automaton next = heavy_pass(cur, cfg, stats ? &rec : nullptr);
        if (stats) stats->passes.push_back(std::move(rec));
        if (next == cur) {
            converged = true;
            break;
        }
        cur = std::move(next);
    }
    if (stats) stats->hit_iteration_cap = !converged;
    fill_sizes(stats, cfg, a, cur, t0);
    return cur;
}

Automaton light(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats) {
    auto t0 = Clock::now();
    if (stats) *stats = MinimizeStats{};
    PassRecord rec;
    Pass pass(a, cfg, stats ? &rec : nullptr);
    pass.remove_dead_states();
    pass.quotient_de();
    Automaton out = pass.take();
    if (stats) stats->passes.push_back(std::move(rec));
    fill_sizes(stats, cfg, a, out, t0);
    return out;
}

Automaton minimize(const Automaton& a, const MinimizeConfig& cfg, MinimizeStats* stats) {
    return cfg.method == Method::heavy ? heavy(a, cfg, stats) : light(a, cfg, stats);
}

std::string MinimizeStats::to_json() const {
    using json = nlohmann::ordered_json;
    json passes_json = json::array();
    for (std::size_t i = 0; i < passes.size(); ++i) {
        json steps = json::array();
        for (const StepRecord& s : passes[i].steps)
            steps.push_back({{"technique", s.technique},
                             {"states", s.states},
                             {"transitions", s.transitions},
                             {"relation_size", s.relation_size},
                             {"time_ms", s.time_ms}});
        passes_json.push_back({{"pass", i + 1}, {"steps", steps}});
    }
    json doc = {{"schema", 1},
                {"method", std::string(to_string(method))},
                {"k", k},
                {"input", {{"states", input_states}, {"transitions", input_transitions}}},
                {"output", {{"states", output_states}, {"transitions", output_transitions}}},
                {"passes", passes_json},
                {"hit_iteration_cap", hit_iteration_cap},
                {"time_ms", time_ms}};
    return doc.dump(2);
}

}  // namespace bamin
