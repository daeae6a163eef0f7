// k-lookahead simulation games solved as (nested) fixpoints over pairs.
//
// Every fixpoint computes Spoiler's winning region W; the simulation is its
// complement. A single-pair check "is (p, q) in Pre(...)" is a depth-first
// search over Spoiler's attacks from p. Along an attack prefix Duplicator's
// candidate replies are tracked as a set of states (with a small tag), so a
// prefix is abandoned as soon as some reply of that length wins for her.
//
// When Duplicator wins a check, the replies that answered Spoiler's attacks
// are kept as a certificate. While each of them still wins, a new search
// would reach the same verdict, so it is skipped.
#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bamin/simulation.hh"
#include "bits.hh"

namespace bamin {
namespace {

struct MoveGraph {
    std::size_t n = 0, ns = 0;
    std::vector<std::uint32_t> off;
    std::vector<State> tgt;
    std::vector<std::uint8_t> can_move;

    MoveGraph(const Automaton& a, bool forward) : n(a.num_states()), ns(a.num_symbols()) {
        off.assign(n * ns + 1, 0);
        can_move.assign(n, 0);
        for (State p = 0; p < n; ++p)
            for (Symbol s = 0; s < ns; ++s) {
                auto next = forward ? a.succ(p, s) : a.pred(p, s);
                tgt.insert(tgt.end(), next.begin(), next.end());
                off[p * ns + s + 1] = static_cast<std::uint32_t>(tgt.size());
                if (!next.empty()) can_move[p] = 1;
            }
    }

    const State* begin(State p, Symbol s) const { return tgt.data() + off[p * ns + s]; }
    const State* end(State p, Symbol s) const { return tgt.data() + off[p * ns + s + 1]; }
};

struct Entry {
    State q;
    std::uint8_t tag;
};

enum class Filter { direct, backward, backward_minus, backward_count };

/// Conditions checked position by position; Spoiler wins by reaching W.
template <Filter F>
struct SafetyRules {
    static constexpr bool merge_tags = true;  // a larger surplus is never worse
    const std::uint8_t* acc;
    const std::uint8_t* init;
    const Relation* won;
    std::uint8_t cap;

    bool initial_ok(State p, State q) const {
        bool f_ok = !acc[p] || acc[q];
        bool i_ok = !init[p] || init[q];
        if constexpr (F == Filter::direct) return f_ok;
        if constexpr (F == Filter::backward_minus) return i_ok;
        return f_ok && i_ok;
    }
    std::uint8_t initial_tag(State) const { return 0; }

    bool step(State p, State q, std::uint8_t& tag) const {
        if constexpr (F == Filter::direct) return !acc[p] || acc[q];
        if constexpr (F == Filter::backward) return (!acc[p] || acc[q]) && (!init[p] || init[q]);
        if constexpr (F == Filter::backward_minus) return !init[p] || init[q];
        if constexpr (F == Filter::backward_count) {
            if (init[p] && !init[q]) return false;
            // Surplus of Duplicator's accepting visits over Spoiler's within
            // the round; it may never drop below zero.
            int surplus = int(tag) + acc[q] - acc[p];
            if (surplus < 0) return false;
            tag = static_cast<std::uint8_t>(std::min<int>(surplus, cap));
            return true;
        }
    }

    bool dup_wins(State p, State q, std::uint8_t, bool) const { return !won->test(p, q); }
};

/// The three-argument predecessor shared by the delayed and fair games.
/// Spoiler wins a reply ending in (p, q) if it lands in z, or Duplicator saw
/// no accepting state and it lands in y, or additionally Spoiler did see one
/// and it lands in x.
struct BuchiRules {
    static constexpr bool merge_tags = true;
    const std::uint8_t* acc;
    const Relation* x;
    const Relation* y;
    const Relation* z;

    bool initial_ok(State, State) const { return true; }
    std::uint8_t initial_tag(State q) const { return acc[q]; }
    bool step(State, State q, std::uint8_t& tag) const {
        tag |= acc[q];
        return true;
    }
    bool dup_wins(State p, State q, std::uint8_t dup_acc, bool spo_acc) const {
        if (z->test(p, q)) return false;
        if (dup_acc) return true;
        if (y->test(p, q)) return false;
        return !spo_acc || !x->test(p, q);
    }
};

/// Delayed game with the obligation made explicit: a position (p, q, b) has
/// b set while some accepting visit of Spoiler is still unanswered. Along a
/// reply the tag holds bit 0 = obligation pending and bit 1 = Duplicator
/// visited an accepting state this round. A round is good for Duplicator if
/// it ends with nothing pending or discharges the obligation it started with;
/// Spoiler wins a good round by landing in w, a bad one by landing in x.
struct DelayedRules {
    static constexpr bool merge_tags = false;  // the two bits are not ordered
    const std::uint8_t* acc;
    const Relation* x[2];
    const Relation* w[2];
    std::uint8_t pending = 0;

    bool initial_ok(State, State) const { return true; }
    std::uint8_t initial_tag(State) const { return pending; }
    bool step(State p, State q, std::uint8_t& tag) const {
        if (acc[p]) tag |= 1;
        if (acc[q]) tag = static_cast<std::uint8_t>((tag & ~1u) | 2u);
        return true;
    }
    bool dup_wins(State p, State q, std::uint8_t tag, bool) const {
        const unsigned next = tag & 1u;
        const bool good = next == 0 || (pending && (tag & 2u));
        return !(good ? w[next] : x[next])->test(p, q);
    }
};

/// A reply that answered some attack: where it ended and with which tag.
struct Answer {
    State p, q;
    std::uint8_t tag;
    bool spo_acc;
};

using Certificate = std::vector<Answer>;

/// Per-state list of allowed jump targets, with whether the jump passes
/// through an accepting state.
using JumpTable = std::vector<std::vector<Entry>>;

template <class Rules, bool Jumping>
class AttackSearch {
public:
    AttackSearch(const MoveGraph& g, const Rules& rules, unsigned k, const std::uint8_t* acc,
                 const JumpTable* jumps = nullptr)
        : g_(g), rules_(rules), k_(k), acc_(acc), jumps_(jumps), level_(k + 1), raw_(k), mark_(g.n * kKeys, 0),
          slot_(g.n * kKeys, 0) {}

    Rules& rules() { return rules_; }

    /// Is (p, q) in the predecessor of the current target sets? If not and
    /// `cert` is given, it receives Duplicator's answers.
    bool spoiler_wins(State p, State q, Certificate* cert = nullptr) {
        cert_ = cert;
        if (cert_) cert_->clear();
        if (!rules_.initial_ok(p, q)) return true;
        if (!g_.can_move[p]) return false;
        level_[0].clear();
        level_[0].push_back({q, rules_.initial_tag(q)});
        return attack(0, p, acc_[p] != 0);
    }

    /// Every answer in `cert` still wins for Duplicator.
    bool still_holds(const Certificate& cert) const {
        for (const Answer& a : cert)
            if (!rules_.dup_wins(a.p, a.q, a.tag, a.spo_acc)) return false;
        return true;
    }

private:
    bool attack(unsigned j, State pj, bool spo_acc) {
        for (Symbol s = 0; s < g_.ns; ++s) {
            const State* first = g_.begin(pj, s);
            const State* last = g_.end(pj, s);
            if (first == last) continue;
            gather(j, s);
            const std::vector<Entry>& raw = raw_[j];
            for (const State* it = first; it != last; ++it) {
                const State p2 = *it;
                const bool spo2 = spo_acc || acc_[p2];
                std::vector<Entry>& next = level_[j + 1];
                next.clear();
                bool answered = false;
                for (const Entry& e : raw) {
                    std::uint8_t tag = e.tag;
                    if (!rules_.step(p2, e.q, tag)) continue;
                    if (rules_.dup_wins(p2, e.q, tag, spo2)) {
                        if (cert_) cert_->push_back({p2, e.q, tag, spo2});
                        answered = true;
                        break;
                    }
                    next.push_back({e.q, tag});
                }
                // A winning reply of length j+1 answers every extension too.
                if (answered) continue;
                if (next.empty()) return true;
                if (j + 1 == k_ || !g_.can_move[p2]) return true;
                if (attack(j + 1, p2, spo2)) return true;
            }
        }
        return false;
    }

    void gather(unsigned j, Symbol s) {
        std::vector<Entry>& out = raw_[j];
        out.clear();
        if (++epoch_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            epoch_ = 1;
        }
        auto add = [&](State from, std::uint8_t tag) {
            for (const State* it = g_.begin(from, s), *e = g_.end(from, s); it != e; ++it) {
                State q2 = *it;
                const std::size_t key = Rules::merge_tags ? q2 : q2 * kKeys + tag;
                if (mark_[key] != epoch_) {
                    mark_[key] = epoch_;
                    slot_[key] = static_cast<std::uint32_t>(out.size());
                    out.push_back({q2, tag});
                } else if (out[slot_[key]].tag < tag) {
                    out[slot_[key]].tag = tag;
                }
            }
        };
        for (const Entry& e : level_[j]) {
            if constexpr (Jumping) {
                for (const Entry& jump : (*jumps_)[e.q]) add(jump.q, static_cast<std::uint8_t>(e.tag | jump.tag));
            } else {
                add(e.q, e.tag);
            }
        }
    }

    static constexpr std::size_t kKeys = Rules::merge_tags ? 1 : 4;

    const MoveGraph& g_;
    Rules rules_;
    unsigned k_;
    const std::uint8_t* acc_;
    const JumpTable* jumps_;
    std::vector<std::vector<Entry>> level_;
    std::vector<std::vector<Entry>> raw_;
    std::vector<std::uint32_t> mark_;
    std::vector<std::uint32_t> slot_;
    std::uint32_t epoch_ = 0;
    Certificate* cert_ = nullptr;
};

/// Last Duplicator certificate per pair; empty `known` means none.
struct CertificateStore {
    std::size_t n;
    std::vector<Certificate> cert;
    std::vector<std::uint8_t> known;

    explicit CertificateStore(std::size_t states) : n(states), cert(states * states), known(states * states, 0) {}

    template <class Search>
    bool holds(const Search& search, State p, State q) const {
        const std::size_t i = p * n + q;
        return known[i] && search.still_holds(cert[i]);
    }

    /// Full check that records a certificate when Duplicator wins.
    template <class Search>
    bool spoiler_wins(Search& search, State p, State q) {
        const std::size_t i = p * n + q;
        const bool won = search.spoiler_wins(p, q, &cert[i]);
        known[i] = !won;
        if (won) Certificate().swap(cert[i]);
        return won;
    }
};

/// Adds to `target` every candidate pair Spoiler now wins; chaotic
/// iteration, so later pairs already see earlier additions.
template <class Search>
bool sweep_add(Relation& target, Search& search, const Relation* candidates, CertificateStore& certs,
               SimStats& stats) {
    bool changed = false;
    const std::size_t n = target.size();
    ++stats.sweeps;
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (target.test(p, q) || (candidates && !candidates->test(p, q))) continue;
            if (certs.holds(search, p, q)) continue;
            ++stats.evaluations;
            if (certs.spoiler_wins(search, p, q)) {
                target.set(p, q);
                changed = true;
            }
        }
    return changed;
}

/// Removes from `target` every pair Spoiler can no longer win, appending it
/// to `removed`. Pairs in `settled` are known to stay and are not evaluated.
template <class Search>
bool sweep_remove(Relation& target, Search& search, const Relation& settled, CertificateStore& certs,
                  std::vector<State>& removed, SimStats& stats) {
    bool changed = false;
    const std::size_t n = target.size();
    ++stats.sweeps;
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (!target.test(p, q) || settled.test(p, q)) continue;
            if (!certs.holds(search, p, q)) {
                ++stats.evaluations;
                if (certs.spoiler_wins(search, p, q)) continue;
            }
            target.reset(p, q);
            removed.push_back(State(p * n + q));
            changed = true;
        }
    return changed;
}

struct Flags {
    std::vector<std::uint8_t> acc, init;
    explicit Flags(const Automaton& a) : acc(a.num_states(), 0), init(a.num_states(), 0) {
        for (State q : a.accepting()) acc[q] = 1;
        for (State q : a.initial()) init[q] = 1;
    }
};

template <Filter F>
Relation solve_safety(const Automaton& a, bool forward, unsigned k, SimStats& stats) {
    MoveGraph g(a, forward);
    Flags fl(a);
    Relation won(a.num_states());
    SafetyRules<F> rules{fl.acc.data(), fl.init.data(), &won, static_cast<std::uint8_t>(std::min(k, 255u))};
    AttackSearch<SafetyRules<F>, false> search(g, rules, k, fl.acc.data());
    CertificateStore certs(a.num_states());
    while (sweep_add(won, search, nullptr, certs, stats)) {
    }
    return won;
}

template <bool Jumping>
Relation solve_fair(const Automaton& a, unsigned k, const Relation& bound, const JumpTable* jumps, SimStats& stats);

/// Spoiler's delayed region on the layered positions:
/// W = μW. νX. Pre(X, W), returned for the layer b = (p ∈ F ∧ q ∉ F).
///
/// The iteration starts from `start`, which must be a set of pairs Spoiler
/// wins on both layers and from which she can keep the play inside it;
/// her fair region is one.
Relation solve_delayed(const Automaton& a, unsigned k, const Relation& start, SimStats& stats) {
    const std::size_t n = a.num_states();
    MoveGraph g(a, true);
    Flags fl(a);
    Relation w[2] = {start, start};
    CertificateStore certs[2] = {CertificateStore(n), CertificateStore(n)};
    // Pairs Duplicator won in the last outer round, per layer, in the order
    // they were removed; later ones may rely on earlier ones.
    std::vector<State> order[2];
    while (true) {
        Relation x[2] = {Relation::full(n), Relation::full(n)};
        DelayedRules rules{fl.acc.data(), {&x[0], &x[1]}, {&w[0], &w[1]}};
        AttackSearch<DelayedRules, false> search(g, rules, k, fl.acc.data());
        std::vector<State> removed[2];
        // Replay last round's proofs while they still hold.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint8_t b : {0, 1}) {
                search.rules().pending = b;
                for (State id : order[b]) {
                    const State p = State(id / n), q = State(id % n);
                    if (!x[b].test(p, q) || !certs[b].holds(search, p, q)) continue;
                    x[b].reset(p, q);
                    removed[b].push_back(id);
                    changed = true;
                }
            }
        }
        changed = true;
        while (changed) {
            changed = false;
            for (std::uint8_t b : {0, 1}) {
                search.rules().pending = b;
                // The inner fixpoint only grows from one outer round to the
                // next, so last round's winners are still winners.
                changed |= sweep_remove(x[b], search, w[b], certs[b], removed[b], stats);
            }
        }
        if (x[0] == w[0] && x[1] == w[1]) break;
        w[0] = std::move(x[0]);
        w[1] = std::move(x[1]);
        order[0] = std::move(removed[0]);
        order[1] = std::move(removed[1]);
    }
    Relation won(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (w[fl.acc[p] && !fl.acc[q]].test(p, q)) won.set(p, q);
    return won;
}

/// W^f = μZ. νX. μY. Pre(X, Y, Z), all iterates bounded by Spoiler's direct region.
template <bool Jumping>
Relation solve_fair(const Automaton& a, unsigned k, const Relation& bound, const JumpTable* jumps, SimStats& stats) {
    const std::size_t n = a.num_states();
    MoveGraph g(a, true);
    Flags fl(a);
    Relation z(n);
    CertificateStore certs(n);
    while (true) {
        Relation x = bound;
        // Shrinking x only shrinks the innermost fixpoint, so each one bounds the next.
        Relation reach = bound;
        while (true) {
            Relation y = z;
            AttackSearch<BuchiRules, Jumping> search(g, BuchiRules{fl.acc.data(), &x, &y, &z}, k, fl.acc.data(),
                                                     jumps);
            while (sweep_add(y, search, &reach, certs, stats)) {
            }
            reach = y;
            Relation narrowed = x & y;
            if (narrowed == x) break;
            x = std::move(narrowed);
        }
        if (x == z) return z;
        z = std::move(x);
    }
}

Relation spoiler_region(const Automaton& a, SimVariant v, unsigned k, SimStats& stats) {
    switch (v.condition) {
        case Condition::direct:
            return solve_safety<Filter::direct>(a, true, k, stats);
        case Condition::backward:
            return solve_safety<Filter::backward>(a, false, k, stats);
        case Condition::backward_minus:
            return solve_safety<Filter::backward_minus>(a, false, k, stats);
        case Condition::backward_count:
            return solve_safety<Filter::backward_count>(a, false, k, stats);
        case Condition::delayed: {
            Relation di = solve_safety<Filter::direct>(a, true, k, stats);
            return solve_delayed(a, k, solve_fair<false>(a, k, di, nullptr, stats), stats);
        }
        case Condition::fair: {
            Relation di = solve_safety<Filter::direct>(a, true, k, stats);
            return solve_fair<false>(a, k, di, nullptr, stats);
        }
    }
    throw std::logic_error("unknown simulation condition");
}

}  // namespace

Relation lookahead_sim(const Automaton& a, SimVariant v, unsigned k, SimStats* stats) {
    if (k == 0) throw std::invalid_argument("lookahead must be at least 1");
    SimStats local;
    Relation won = spoiler_region(a, v, k, stats ? *stats : local);
    return won.complement();
}

Relation lookahead_preorder(const Automaton& a, SimVariant v, unsigned k, SimStats* stats) {
    return lookahead_sim(a, v, k, stats).closure();
}

Relation jumping_fair_sim(const Automaton& a, unsigned k, const Relation& jump, SimStats* stats) {
    if (k == 0) throw std::invalid_argument("lookahead must be at least 1");
    const std::size_t n = a.num_states();
    if (jump.size() != n) throw std::invalid_argument("jump relation has the wrong size");
    Relation refl = jump | Relation::identity(n);

    // jump_acc(q, q') iff some accepting r has q ≤ r ≤ q'.
    Relation via_final(n);
    for (State r : a.accepting())
        for (State q = 0; q < n; ++q)
            if (refl.test(q, r)) via_final.set(q, r);
    Relation jump_acc = via_final.compose(refl) & refl;

    JumpTable table(n);
    for (State q = 0; q < n; ++q)
        for (State t = 0; t < n; ++t)
            if (refl.test(q, t)) table[q].push_back({t, static_cast<std::uint8_t>(jump_acc.test(q, t))});

    SimStats local;
    SimStats& st = stats ? *stats : local;
    Relation di = solve_safety<Filter::direct>(a, true, k, st);
    return solve_fair<true>(a, k, di, &table, st).complement();
}

}  // namespace bamin
