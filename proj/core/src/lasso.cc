#include "bamin/lasso.hh"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bits.hh"

namespace bamin {
namespace {

using detail::Word;

/// Word-relation machinery for a fixed automaton.
///
/// A relation over a word x is stored as two bitset rows per state q: the
/// states reachable by reading x, and those reachable while passing through
/// an accepting state after the first letter.
class WordRelations {
public:
    explicit WordRelations(const Automaton& a)
        : n_(a.num_states()), ns_(a.num_symbols()), nw_(detail::words_for(n_)) {
        succ_.assign(n_ * ns_ * nw_, 0);
        for (State p = 0; p < n_; ++p)
            for (Symbol s = 0; s < ns_; ++s)
                for (State q : a.succ(p, s)) detail::set_bit(&succ_[(p * ns_ + s) * nw_], q);
        final_.assign(nw_, 0);
        for (State q : a.accepting()) detail::set_bit(final_.data(), q);
    }

    std::size_t states() const { return n_; }
    std::size_t words() const { return nw_; }

    /// any and acc each hold n rows of nw words.
    void identity(std::vector<Word>& any, std::vector<Word>& acc) const {
        any.assign(n_ * nw_, 0);
        acc.assign(n_ * nw_, 0);
        for (State q = 0; q < n_; ++q) detail::set_bit(&any[q * nw_], q);
    }

    void extend(const std::vector<Word>& any, const std::vector<Word>& acc, Symbol s, std::vector<Word>& any2,
                std::vector<Word>& acc2) const {
        any2.assign(n_ * nw_, 0);
        acc2.assign(n_ * nw_, 0);
        for (State q = 0; q < n_; ++q) {
            Word* out_any = &any2[q * nw_];
            Word* out_acc = &acc2[q * nw_];
            detail::for_each_bit(&any[q * nw_], nw_, [&](std::size_t x) {
                const Word* row = &succ_[(x * ns_ + s) * nw_];
                for (std::size_t i = 0; i < nw_; ++i) out_any[i] |= row[i];
            });
            detail::for_each_bit(&acc[q * nw_], nw_, [&](std::size_t x) {
                const Word* row = &succ_[(x * ns_ + s) * nw_];
                for (std::size_t i = 0; i < nw_; ++i) out_acc[i] |= row[i];
            });
            for (std::size_t i = 0; i < nw_; ++i) out_acc[i] |= out_any[i] & final_[i];
        }
    }

    void step_set(const Word* from, Symbol s, Word* to) const {
        std::fill(to, to + nw_, 0);
        detail::for_each_bit(from, nw_, [&](std::size_t x) {
            const Word* row = &succ_[(x * ns_ + s) * nw_];
            for (std::size_t i = 0; i < nw_; ++i) to[i] |= row[i];
        });
    }

    /// States from which iterating the relation can go through an accepting
    /// edge infinitely often.
    void good_states(const std::vector<Word>& any, const std::vector<Word>& acc, Word* out) const {
        constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> index(n_, kNone), low(n_, 0), comp(n_, kNone);
        std::vector<bool> on_stack(n_, false);
        std::vector<State> stack;
        std::vector<bool> comp_good;
        std::uint32_t next = 0;
        struct Frame {
            State v;
            std::size_t next_bit;
        };
        std::vector<Frame> call;

        auto next_succ = [&](State v, std::size_t from) -> std::size_t {
            const Word* row = &any[v * nw_];
            std::size_t w = from >> 6;
            if (w >= nw_) return n_;
            Word x = row[w] & (~Word{0} << (from & 63));
            while (true) {
                if (x) return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
                if (++w >= nw_) return n_;
                x = row[w];
            }
        };

        std::fill(out, out + nw_, 0);
        for (State root = 0; root < n_; ++root) {
            if (index[root] != kNone) continue;
            index[root] = low[root] = next++;
            stack.push_back(root);
            on_stack[root] = true;
            call.push_back({root, 0});
            while (!call.empty()) {
                Frame& f = call.back();
                std::size_t w = next_succ(f.v, f.next_bit);
                if (w < n_) {
                    f.next_bit = w + 1;
                    if (index[w] == kNone) {
                        index[w] = low[w] = next++;
                        stack.push_back(static_cast<State>(w));
                        on_stack[w] = true;
                        call.push_back({static_cast<State>(w), 0});
                    } else if (on_stack[w]) {
                        low[f.v] = std::min(low[f.v], index[w]);
                    }
                    continue;
                }
                State v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] != index[v]) continue;
                std::uint32_t c = static_cast<std::uint32_t>(comp_good.size());
                std::vector<State> members;
                State x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    comp[x] = c;
                    members.push_back(x);
                } while (x != v);
                // Successor components are already finished, so their verdict is known.
                bool good = false;
                for (State m : members) {
                    detail::for_each_bit(&acc[m * nw_], nw_, [&](std::size_t y) {
                        if (comp[y] == c) good = true;
                    });
                    detail::for_each_bit(&any[m * nw_], nw_, [&](std::size_t y) {
                        if (comp[y] != c && comp[y] != kNone && comp_good[comp[y]]) good = true;
                    });
                    if (good) break;
                }
                comp_good.push_back(good);
                if (good)
                    for (State m : members) detail::set_bit(out, m);
            }
        }
    }

private:
    std::size_t n_, ns_, nw_;
    std::vector<Word> succ_;
    std::vector<Word> final_;
};

std::size_t count_words(std::size_t ns, std::size_t min_len, std::size_t max_len) {
    std::size_t total = 0, level = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len >= min_len) total += level;
        if (level > std::numeric_limits<std::size_t>::max() / std::max<std::size_t>(ns, 1))
            throw std::length_error("word bound too large");
        level *= ns;
    }
    return total;
}

}  // namespace

bool canonical_less(const Lasso& x, const Lasso& y) {
    if (x.stem.size() != y.stem.size()) return x.stem.size() < y.stem.size();
    if (x.stem != y.stem) return x.stem < y.stem;
    if (x.cycle.size() != y.cycle.size()) return x.cycle.size() < y.cycle.size();
    return x.cycle < y.cycle;
}

bool member_lasso(const Automaton& a, const Lasso& w) {
    if (w.cycle.empty()) throw std::invalid_argument("lasso cycle must be non-empty");
    for (Symbol s : w.stem)
        if (s >= a.num_symbols()) throw std::out_of_range("lasso symbol outside alphabet");
    for (Symbol s : w.cycle)
        if (s >= a.num_symbols()) throw std::out_of_range("lasso symbol outside alphabet");
    if (a.num_states() == 0) return false;

    WordRelations rel(a);
    const std::size_t nw = rel.words();
    std::vector<Word> cur(nw, 0), next(nw, 0);
    for (State q : a.initial()) detail::set_bit(cur.data(), q);
    for (Symbol s : w.stem) {
        rel.step_set(cur.data(), s, next.data());
        cur.swap(next);
    }
    std::vector<Word> any, acc, any2, acc2;
    rel.identity(any, acc);
    for (Symbol s : w.cycle) {
        rel.extend(any, acc, s, any2, acc2);
        any.swap(any2);
        acc.swap(acc2);
    }
    std::vector<Word> good(nw, 0);
    rel.good_states(any, acc, good.data());
    return detail::intersects(cur.data(), good.data(), nw);
}

std::vector<std::vector<Symbol>> words_up_to(std::size_t num_symbols, std::size_t min_len, std::size_t max_len) {
    std::vector<std::vector<Symbol>> out;
    out.reserve(count_words(num_symbols, min_len, max_len));
    for (std::size_t len = min_len; len <= max_len; ++len) {
        if (len > 0 && num_symbols == 0) break;
        std::vector<Symbol> w(len, 0);
        while (true) {
            out.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == num_symbols) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return out;
}

LassoTable::LassoTable(const Automaton& a, std::size_t max_u, std::size_t max_v) {
    WordRelations rel(a);
    const std::size_t ns = a.num_symbols();
    words_ = rel.words();
    stems_ = words_up_to(ns, 0, max_u);
    cycles_ = words_up_to(ns, 1, max_v);

    // Length-lex order means every word's parent (itself minus the last
    // letter) appears earlier, at a position computable from the rank.
    reach_.assign(stems_.size() * words_, 0);
    for (State q : a.initial()) detail::set_bit(&reach_[0], q);
    {
        std::size_t level_start = 0, level_size = 1;
        for (std::size_t len = 1; len <= max_u && ns > 0; ++len) {
            std::size_t child_start = level_start + level_size;
            for (std::size_t r = 0; r < level_size * ns; ++r)
                rel.step_set(&reach_[(level_start + r / ns) * words_], static_cast<Symbol>(r % ns),
                             &reach_[(child_start + r) * words_]);
            level_start = child_start;
            level_size *= ns;
        }
    }

    // Cycles by depth-first extension so only one relation per depth is live.
    good_.assign(cycles_.size() * words_, 0);
    if (ns == 0 || max_v == 0) return;
    std::vector<std::size_t> level_start(max_v + 2, 0);
    {
        std::size_t size = ns;
        for (std::size_t len = 1; len <= max_v; ++len) {
            level_start[len + 1] = level_start[len] + size;
            size *= ns;
        }
    }
    std::vector<std::vector<Word>> any(max_v + 1), acc(max_v + 1);
    rel.identity(any[0], acc[0]);
    std::vector<Symbol> word;
    std::vector<std::size_t> rank(max_v + 1, 0);
    // Explicit stack of (depth, next symbol).
    std::vector<Symbol> next_sym(max_v + 1, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth < max_v && next_sym[depth] < ns) {
            Symbol s = next_sym[depth]++;
            rel.extend(any[depth], acc[depth], s, any[depth + 1], acc[depth + 1]);
            rank[depth + 1] = rank[depth] * ns + s;
            std::size_t idx = level_start[depth + 1] + rank[depth + 1];
            rel.good_states(any[depth + 1], acc[depth + 1], &good_[idx * words_]);
            ++depth;
            next_sym[depth] = 0;
            continue;
        }
        if (depth == 0) break;
        --depth;
    }
}

bool LassoTable::stem_alive(std::size_t i) const { return detail::any_bit(&reach_[i * words_], words_); }

bool LassoTable::accepts(std::size_t i, std::size_t j) const {
    return detail::intersects(&reach_[i * words_], &good_[j * words_], words_);
}

void for_each_accepting_lasso(const Automaton& a, std::size_t max_u, std::size_t max_v,
                              const std::function<bool(const Lasso&)>& visit) {
    if (max_v == 0 || a.num_states() == 0) return;
    LassoTable table(a, max_u, max_v);
    for (std::size_t i = 0; i < table.num_stems(); ++i) {
        if (!table.stem_alive(i)) continue;
        for (std::size_t j = 0; j < table.num_cycles(); ++j)
            if (table.accepts(i, j))
                if (!visit(Lasso{table.stem(i), table.cycle(j)})) return;
    }
}

std::vector<Lasso> enumerate_accepting_lassos(const Automaton& a, std::size_t max_u, std::size_t max_v) {
    std::vector<Lasso> out;
    for_each_accepting_lasso(a, max_u, max_v, [&](const Lasso& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace bamin
