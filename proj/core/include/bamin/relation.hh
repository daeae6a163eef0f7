// Binary relations over the states of one automaton, as a flat bit matrix.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bamin/automaton.hh"

namespace bamin {

class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n);

    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return nw_; }

    bool test(State p, State q) const { return (bits_[p * nw_ + (q >> 6)] >> (q & 63)) & 1u; }
    void set(State p, State q) { bits_[p * nw_ + (q >> 6)] |= std::uint64_t{1} << (q & 63); }
    void reset(State p, State q) { bits_[p * nw_ + (q >> 6)] &= ~(std::uint64_t{1} << (q & 63)); }
    void assign(State p, State q, bool v) { v ? set(p, q) : reset(p, q); }

    const std::uint64_t* row(State p) const { return &bits_[p * nw_]; }
    std::uint64_t* row(State p) { return &bits_[p * nw_]; }

    /// Number of related pairs.
    std::size_t count() const;
    std::vector<std::pair<State, State>> pairs() const;

    Relation transpose() const;
    Relation complement() const;
    Relation operator&(const Relation& o) const;
    Relation operator|(const Relation& o) const;
    /// Pairs (p, r) with p R q and q S r for some q.
    Relation compose(const Relation& o) const;

    /// Reflexive-transitive closure (Warshall on bit rows).
    Relation closure() const;
    /// R minus its inverse.
    Relation strict() const;

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric_strict() const;  // p R q implies not q R p
    bool is_identity() const;
    bool subset_of(const Relation& o) const;

    /// One "p q" pair per line in index order.
    std::string debug_string() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_ = 0;
    std::size_t nw_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Equivalence classes of R ∩ R⁻¹ (connected components, so a non-transitive
/// R still yields a partition). Classes are numbered by their lowest member.
std::vector<std::uint32_t> equivalence_classes(const Relation& r, std::uint32_t* num_classes = nullptr);

/// Restricts a relation on a disjoint union to the pairs whose both
/// components fall in [offset, offset + n), shifted back to start at 0.
Relation restrict_block(const Relation& r, std::size_t offset, std::size_t n);
/// Embeds `r` as a block into an identity relation of size `total`.
Relation embed_block(const Relation& r, std::size_t offset, std::size_t total);

}  // namespace bamin
