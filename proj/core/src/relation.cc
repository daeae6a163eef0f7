#include "bamin/relation.hh"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bits.hh"

namespace bamin {

Relation::Relation(std::size_t n) : n_(n), nw_(detail::words_for(n)), bits_(n * detail::words_for(n), 0) {}

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (State q = 0; q < n; ++q) r.set(q, q);
    return r;
}

Relation Relation::full(std::size_t n) {
    Relation r(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) r.set(p, q);
    return r;
}

std::size_t Relation::count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::pair<State, State>> Relation::pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < n_; ++p)
        detail::for_each_bit(row(p), nw_, [&](std::size_t q) { out.emplace_back(p, static_cast<State>(q)); });
    return out;
}

Relation Relation::transpose() const {
    Relation t(n_);
    for (State p = 0; p < n_; ++p)
        detail::for_each_bit(row(p), nw_, [&](std::size_t q) { t.set(static_cast<State>(q), p); });
    return t;
}

Relation Relation::complement() const {
    Relation c(n_);
    for (State p = 0; p < n_; ++p)
        for (State q = 0; q < n_; ++q)
            if (!test(p, q)) c.set(p, q);
    return c;
}

Relation Relation::operator&(const Relation& o) const {
    if (o.n_ != n_) throw std::invalid_argument("relation sizes differ");
    Relation r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    return r;
}

Relation Relation::operator|(const Relation& o) const {
    if (o.n_ != n_) throw std::invalid_argument("relation sizes differ");
    Relation r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
}

Relation Relation::compose(const Relation& o) const {
    if (o.n_ != n_) throw std::invalid_argument("relation sizes differ");
    Relation r(n_);
    for (State p = 0; p < n_; ++p) {
        std::uint64_t* out = r.row(p);
        detail::for_each_bit(row(p), nw_, [&](std::size_t q) {
            const std::uint64_t* in = o.row(static_cast<State>(q));
            for (std::size_t i = 0; i < nw_; ++i) out[i] |= in[i];
        });
    }
    return r;
}

Relation Relation::closure() const {
    Relation r(*this);
    for (State q = 0; q < n_; ++q) r.set(q, q);
    for (State k = 0; k < n_; ++k) {
        const std::uint64_t* via = r.row(k);
        for (State i = 0; i < n_; ++i) {
            if (i == k || !r.test(i, k)) continue;
            std::uint64_t* out = r.row(i);
            for (std::size_t w = 0; w < nw_; ++w) out[w] |= via[w];
        }
    }
    return r;
}

Relation Relation::strict() const {
    Relation r(n_);
    for (State p = 0; p < n_; ++p)
        detail::for_each_bit(row(p), nw_, [&](std::size_t q) {
            if (!test(static_cast<State>(q), p)) r.set(p, static_cast<State>(q));
        });
    return r;
}

bool Relation::is_reflexive() const {
    for (State q = 0; q < n_; ++q)
        if (!test(q, q)) return false;
    return true;
}

bool Relation::is_irreflexive() const {
    for (State q = 0; q < n_; ++q)
        if (test(q, q)) return false;
    return true;
}

bool Relation::is_transitive() const {
    // R∘R ⊆ R, checked row by row.
    std::vector<std::uint64_t> acc(nw_);
    for (State p = 0; p < n_; ++p) {
        std::fill(acc.begin(), acc.end(), 0);
        detail::for_each_bit(row(p), nw_, [&](std::size_t q) {
            const std::uint64_t* in = row(static_cast<State>(q));
            for (std::size_t i = 0; i < nw_; ++i) acc[i] |= in[i];
        });
        const std::uint64_t* mine = row(p);
        for (std::size_t i = 0; i < nw_; ++i)
            if (acc[i] & ~mine[i]) return false;
    }
    return true;
}

bool Relation::is_antisymmetric_strict() const {
    for (State p = 0; p < n_; ++p)
        for (State q = 0; q < n_; ++q)
            if (test(p, q) && test(q, p)) return false;
    return true;
}

bool Relation::is_identity() const { return *this == identity(n_); }

bool Relation::subset_of(const Relation& o) const {
    if (o.n_ != n_) throw std::invalid_argument("relation sizes differ");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

std::string Relation::debug_string() const {
    std::ostringstream out;
    for (auto [p, q] : pairs()) out << p << ' ' << q << '\n';
    return out.str();
}

std::vector<std::uint32_t> equivalence_classes(const Relation& r, std::uint32_t* num_classes) {
    const std::size_t n = r.size();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
            if (r.test(p, q) && r.test(q, p)) {
                auto a = find(p), b = find(q);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::uint32_t> cls(n);
    std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (State q = 0; q < n; ++q) {
        auto root = find(q);
        if (id_of_root[root] == UINT32_MAX) id_of_root[root] = next++;
        cls[q] = id_of_root[root];
    }
    if (num_classes) *num_classes = next;
    return cls;
}

Relation restrict_block(const Relation& r, std::size_t offset, std::size_t n) {
    Relation out(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (r.test(static_cast<State>(p + offset), static_cast<State>(q + offset))) out.set(p, q);
    return out;
}

Relation embed_block(const Relation& r, std::size_t offset, std::size_t total) {
    Relation out = Relation::identity(total);
    for (State p = 0; p < r.size(); ++p)
        for (State q = 0; q < r.size(); ++q)
            if (r.test(p, q)) out.set(static_cast<State>(p + offset), static_cast<State>(q + offset));
    return out;
}

}  // namespace bamin
