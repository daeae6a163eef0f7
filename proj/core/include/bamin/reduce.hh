// Language-preserving reductions: quotienting by a preorder and pruning
// transitions dominated by "better" ones.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bamin/automaton.hh"
#include "bamin/relation.hh"

namespace bamin {

/// Raised when a pruning combination is not known to preserve the language,
/// or when a pruning's precondition fails on the given automaton.
class IllegalPruning : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Merges the classes of pre ∩ pre⁻¹. A class is initial (accepting) if any
/// member is; it keeps the name of its lowest member and classes are ordered
/// by lowest member, so a trivial preorder returns `a` unchanged.
Automaton quotient(const Automaton& a, const Relation& pre);

/// What the source-side relation of a pruning was computed as.
enum class SourceOrder {
    identity,
    strict_bw_sim,    // strict part of ordinary backward simulation
    bw_lookahead,     // closure of k-lookahead backward simulation (a preorder)
    strict_bw_trace,  // strict part of a backward trace-inclusion approximation
};

/// What the target-side relation of a pruning was computed as.
enum class TargetOrder {
    identity,
    strict_di_sim,    // strict part of ordinary direct simulation
    di_lookahead,     // closure of k-lookahead direct simulation (a preorder)
    strict_di_trace,  // strict part of a direct trace-inclusion approximation
    strict_delayed,
    strict_fair,
};

std::string_view to_string(SourceOrder o);
std::string_view to_string(TargetOrder o);

/// The five prunings used by the heavy minimizer.
enum class PruneKind {
    id_di,           // P(id, ≺k-di)
    bw_id,           // P(≺k-bw, id)
    bwsim_di,        // P(≺bw, ⪯k-di), needs A = A/⊑bw
    bw_disim,        // P(⪯k-bw, ≺di)
    transient_fair,  // P(id, ≺di) plus transient transitions under ≺k-f
};

std::string_view to_string(PruneKind k);

/// A validated pruning relation on transitions:
///   (p,σ,r) is dominated by (p',σ,r') iff source(p,p') and target(r,r'),
/// plus, for the transient rule, (p,σ,r') transient and transient_target(r,r').
class PruneSpec {
public:
    /// Builds a pruning only for combinations known to preserve the language.
    /// Throws IllegalPruning otherwise, or if a relation lacks the shape its
    /// label promises (strict parts irreflexive and transitive, preorders
    /// reflexive and transitive).
    static PruneSpec make(SourceOrder so, Relation source, TargetOrder to, Relation target);

    /// The transient rule: ordinary strict direct simulation on targets, and
    /// strict fair lookahead simulation for targets of transient transitions.
    static PruneSpec transient(Relation strict_di_sim, Relation strict_fair);

    /// The heavy minimizer's relation for `kind`, computed on `a` with lookahead k.
    static PruneSpec build(const Automaton& a, PruneKind kind, unsigned k);

    /// Whether the combination is one the library will construct.
    static bool allowed(SourceOrder so, TargetOrder to);

    SourceOrder source_order() const { return so_; }
    TargetOrder target_order() const { return to_; }
    const Relation& source() const { return source_; }
    const Relation& target() const { return target_; }
    const std::optional<Relation>& transient_target() const { return transient_; }

    /// True if the automaton must have no two distinct ⊑bw-equivalent states.
    bool needs_bw_quotient() const {
        return so_ == SourceOrder::strict_bw_sim &&
               (to_ == TargetOrder::di_lookahead || to_ == TargetOrder::strict_di_trace);
    }

    /// Pairs in the state relations (both sides), as reported in statistics.
    std::size_t relation_size() const;

private:
    PruneSpec(SourceOrder so, Relation s, TargetOrder to, Relation t)
        : so_(so), to_(to), source_(std::move(s)), target_(std::move(t)) {}

    SourceOrder so_;
    TargetOrder to_;
    Relation source_;
    Relation target_;
    std::optional<Relation> transient_;
};

/// Removes, all at once, every transition dominated by another transition of
/// `a` under `spec`. Throws IllegalPruning if a precondition fails.
Automaton prune(const Automaton& a, const PruneSpec& spec);

namespace unchecked {

/// P(source, target) with no validation at all. For demonstrating why some
/// combinations are refused; never used by the minimizers.
Automaton prune(const Automaton& a, const Relation& source, const Relation& target);

}  // namespace unchecked

}  // namespace bamin
