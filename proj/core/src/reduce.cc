#include "bamin/reduce.hh"

#include <string>

#include "bamin/simulation.hh"
#include "bits.hh"
#include "graph.hh"

namespace bamin {

std::string_view to_string(SourceOrder o) {
    switch (o) {
        case SourceOrder::identity: return "id";
        case SourceOrder::strict_bw_sim: return "strict-bw-sim";
        case SourceOrder::bw_lookahead: return "bw-lookahead";
        case SourceOrder::strict_bw_trace: return "strict-bw-trace";
    }
    return "?";
}

std::string_view to_string(TargetOrder o) {
    switch (o) {
        case TargetOrder::identity: return "id";
        case TargetOrder::strict_di_sim: return "strict-di-sim";
        case TargetOrder::di_lookahead: return "di-lookahead";
        case TargetOrder::strict_di_trace: return "strict-di-trace";
        case TargetOrder::strict_delayed: return "strict-de";
        case TargetOrder::strict_fair: return "strict-f";
    }
    return "?";
}

std::string_view to_string(PruneKind k) {
    switch (k) {
        case PruneKind::id_di: return "id-di";
        case PruneKind::bw_id: return "bw-id";
        case PruneKind::bwsim_di: return "bwsim-di";
        case PruneKind::bw_disim: return "bw-disim";
        case PruneKind::transient_fair: return "transient-fair";
    }
    return "?";
}

Automaton quotient(const Automaton& a, const Relation& pre) {
    const std::size_t n = a.num_states();
    if (pre.size() != n) throw std::invalid_argument("preorder size does not match the automaton");
    std::uint32_t count = 0;
    std::vector<std::uint32_t> cls = equivalence_classes(pre, &count);
    if (count == n) return a;

    AutomatonBuilder b(a.alphabet());
    std::vector<bool> named(count, false);
    for (State q = 0; q < n; ++q)
        if (!named[cls[q]]) {
            named[cls[q]] = true;
            b.add_state(a.state_name(q));
        }
    for (State q = 0; q < n; ++q) {
        if (a.is_initial(q)) b.set_initial(cls[q]);
        if (a.is_accepting(q)) b.set_accepting(cls[q]);
    }
    for (const TransitionRef& t : a.transitions()) b.add_transition(cls[t.src], t.sym, cls[t.dst]);
    return b.build();
}

bool PruneSpec::allowed(SourceOrder so, TargetOrder to) {
    using S = SourceOrder;
    using T = TargetOrder;
    switch (so) {
        case S::identity:
            return to == T::strict_di_sim || to == T::strict_di_trace;
        case S::strict_bw_sim:
            return to == T::identity || to == T::strict_di_sim || to == T::strict_di_trace || to == T::di_lookahead;
        case S::bw_lookahead:
            return to == T::strict_di_sim;
        case S::strict_bw_trace:
            return to == T::identity || to == T::strict_di_sim;
    }
    return false;
}

namespace {

bool is_strict_label(SourceOrder o) { return o == SourceOrder::strict_bw_sim || o == SourceOrder::strict_bw_trace; }
bool is_strict_label(TargetOrder o) {
    return o == TargetOrder::strict_di_sim || o == TargetOrder::strict_di_trace || o == TargetOrder::strict_delayed ||
           o == TargetOrder::strict_fair;
}

void check_shape(const Relation& r, bool identity, bool strict, const std::string& side) {
    if (identity) {
        if (!r.is_identity()) throw IllegalPruning(side + " relation is labelled identity but is not");
        return;
    }
    if (strict) {
        if (!r.is_irreflexive() || !r.is_transitive())
            throw IllegalPruning(side + " relation is labelled strict but is not irreflexive and transitive");
        return;
    }
    if (!r.is_reflexive() || !r.is_transitive())
        throw IllegalPruning(side + " relation is labelled a preorder but is not reflexive and transitive");
}

bool has_distinct_bw_equivalents(const Automaton& a) {
    Relation bw = ordinary_sim(a, SimVariant::bw());
    for (State p = 0; p < a.num_states(); ++p)
        for (State q = p + 1; q < a.num_states(); ++q)
            if (bw.test(p, q) && bw.test(q, p)) return true;
    return false;
}

/// Shared core: (p,σ,r) goes if some (p',σ,r') ≠ (p,σ,r) has source(p,p')
/// and target(r,r'), or the transient rule applies.
Automaton remove_dominated(const Automaton& a, const Relation& source, const Relation& target,
                           const Relation* transient_target) {
    const std::size_t n = a.num_states(), ns = a.num_symbols();
    if (source.size() != n || target.size() != n || (transient_target && transient_target->size() != n))
        throw std::invalid_argument("pruning relation size does not match the automaton");
    const std::size_t nw = detail::words_for(n);
    std::vector<detail::Word> succ_bits(n * ns * nw, 0);
    for (const TransitionRef& t : a.transitions()) detail::set_bit(&succ_bits[(t.src * ns + t.sym) * nw], t.dst);
    detail::Sccs scc;
    if (transient_target) scc = detail::strongly_connected_components(a);

    auto dominated = [&](const TransitionRef& t) {
        bool hit = false;
        detail::for_each_bit(source.row(t.src), nw, [&](std::size_t pp) {
            if (hit) return;
            const detail::Word* out = &succ_bits[(pp * ns + t.sym) * nw];
            const detail::Word* better = target.row(t.dst);
            for (std::size_t w = 0; w < nw && !hit; ++w) {
                detail::Word m = out[w] & better[w];
                // Never let a transition dominate itself.
                if (pp == t.src && w == (t.dst >> 6)) m &= ~(detail::Word{1} << (t.dst & 63));
                if (m) hit = true;
            }
        });
        if (hit || !transient_target) return hit;
        for (State r2 : a.succ(t.src, t.sym))
            if (r2 != t.dst && scc.id[r2] != scc.id[t.src] && transient_target->test(t.dst, r2)) return true;
        return false;
    };

    std::vector<bool> drop;
    std::vector<TransitionRef> ts = a.transitions();
    drop.reserve(ts.size());
    for (const TransitionRef& t : ts) drop.push_back(dominated(t));
    AutomatonBuilder b = AutomatonBuilder::states_of(a);
    bool any = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (drop[i])
            any = true;
        else
            b.add_transition(ts[i].src, ts[i].sym, ts[i].dst);
    }
    return any ? b.build() : a;
}

}  // namespace

PruneSpec PruneSpec::make(SourceOrder so, Relation source, TargetOrder to, Relation target) {
    if (!allowed(so, to))
        throw IllegalPruning("pruning with source order '" + std::string(to_string(so)) + "' and target order '" +
                             std::string(to_string(to)) + "' is not known to preserve the language");
    if (source.size() != target.size()) throw IllegalPruning("source and target relations differ in size");
    check_shape(source, so == SourceOrder::identity, is_strict_label(so), "source");
    check_shape(target, to == TargetOrder::identity, is_strict_label(to), "target");
    return PruneSpec(so, std::move(source), to, std::move(target));
}

PruneSpec PruneSpec::transient(Relation strict_di_sim, Relation strict_fair) {
    if (strict_di_sim.size() != strict_fair.size()) throw IllegalPruning("relations differ in size");
    check_shape(strict_di_sim, false, true, "target");
    check_shape(strict_fair, false, true, "transient target");
    const std::size_t n = strict_di_sim.size();
    PruneSpec spec(SourceOrder::identity, Relation::identity(n), TargetOrder::strict_di_sim, std::move(strict_di_sim));
    spec.transient_ = std::move(strict_fair);
    return spec;
}

PruneSpec PruneSpec::build(const Automaton& a, PruneKind kind, unsigned k) {
    const std::size_t n = a.num_states();
    switch (kind) {
        case PruneKind::id_di:
            return make(SourceOrder::identity, Relation::identity(n), TargetOrder::strict_di_trace,
                        lookahead_preorder(a, SimVariant::di(), k).strict());
        case PruneKind::bw_id:
            return make(SourceOrder::strict_bw_trace, lookahead_preorder(a, SimVariant::bw(), k).strict(),
                        TargetOrder::identity, Relation::identity(n));
        case PruneKind::bwsim_di:
            return make(SourceOrder::strict_bw_sim, ordinary_sim(a, SimVariant::bw()).strict(),
                        TargetOrder::di_lookahead, lookahead_preorder(a, SimVariant::di(), k));
        case PruneKind::bw_disim:
            return make(SourceOrder::bw_lookahead, lookahead_preorder(a, SimVariant::bw(), k),
                        TargetOrder::strict_di_sim, ordinary_sim(a, SimVariant::di()).strict());
        case PruneKind::transient_fair:
            return transient(ordinary_sim(a, SimVariant::di()).strict(),
                             lookahead_preorder(a, SimVariant::f(), k).strict());
    }
    throw std::logic_error("unknown pruning kind");
}

std::size_t PruneSpec::relation_size() const {
    return source_.count() + target_.count() + (transient_ ? transient_->count() : 0);
}

Automaton prune(const Automaton& a, const PruneSpec& spec) {
    if (spec.needs_bw_quotient() && has_distinct_bw_equivalents(a))
        throw IllegalPruning("this pruning needs an automaton with no two distinct backward-simulation-equivalent "
                             "states; quotient by backward simulation first");
    return remove_dominated(a, spec.source(), spec.target(),
                            spec.transient_target() ? &*spec.transient_target() : nullptr);
}

Automaton unchecked::prune(const Automaton& a, const Relation& source, const Relation& target) {
    return remove_dominated(a, source, target, nullptr);
}

}  // namespace bamin
