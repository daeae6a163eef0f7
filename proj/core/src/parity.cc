#include "parity.hh"

#include <algorithm>
#include <stdexcept>

namespace bamin::detail {
namespace {

class Zielonka {
public:
    explicit Zielonka(const ParityGame& g) : g_(g), pred_(g.size()) {
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            if (g.succ[v].empty()) throw std::invalid_argument("parity game node without successor");
            for (std::uint32_t w : g.succ[v]) pred_[w].push_back(v);
        }
    }

    std::vector<std::uint8_t> run() {
        std::vector<std::uint8_t> in(g_.size(), 1);
        std::vector<std::uint8_t> win(g_.size(), 0);
        std::vector<std::uint32_t> all(g_.size());
        for (std::uint32_t v = 0; v < g_.size(); ++v) all[v] = v;
        auto [w0, w1] = solve(all, in);
        for (auto v : w1) win[v] = 1;
        return win;
    }

private:
    using Set = std::vector<std::uint32_t>;

    /// Attractor for `player` towards `target` inside the subgame `in`.
    Set attractor(const Set& nodes, const std::vector<std::uint8_t>& in, const Set& target, std::uint8_t player,
                  std::vector<std::uint8_t>& mark) {
        Set attr;
        std::vector<std::uint32_t> queue;
        for (auto v : target)
            if (!mark[v]) {
                mark[v] = 1;
                attr.push_back(v);
                queue.push_back(v);
            }
        // Remaining out-degree within the subgame for opponent nodes.
        for (auto v : nodes) {
            std::uint32_t d = 0;
            for (auto w : g_.succ[v]) d += in[w];
            degree_[v] = d;
        }
        while (!queue.empty()) {
            auto w = queue.back();
            queue.pop_back();
            for (auto v : pred_[w]) {
                if (!in[v] || mark[v]) continue;
                if (g_.owner[v] == player || --degree_[v] == 0) {
                    mark[v] = 1;
                    attr.push_back(v);
                    queue.push_back(v);
                }
            }
        }
        return attr;
    }

    std::pair<Set, Set> solve(const Set& nodes, std::vector<std::uint8_t>& in) {
        if (nodes.empty()) return {};
        degree_.resize(g_.size());
        std::uint8_t top = 0;
        for (auto v : nodes) top = std::max(top, g_.priority[v]);
        const std::uint8_t player = top % 2;
        Set target;
        for (auto v : nodes)
            if (g_.priority[v] == top) target.push_back(v);

        std::vector<std::uint8_t> mark(g_.size(), 0);
        Set a = attractor(nodes, in, target, player, mark);
        Set rest;
        for (auto v : nodes)
            if (!mark[v]) rest.push_back(v);
        for (auto v : a) in[v] = 0;
        auto sub = solve(rest, in);
        for (auto v : a) in[v] = 1;
        Set& opp_sub = player == 0 ? sub.second : sub.first;
        if (opp_sub.empty()) {
            if (player == 0) return {nodes, {}};
            return {{}, nodes};
        }
        std::vector<std::uint8_t> mark2(g_.size(), 0);
        Set b = attractor(nodes, in, opp_sub, static_cast<std::uint8_t>(1 - player), mark2);
        Set rest2;
        for (auto v : nodes)
            if (!mark2[v]) rest2.push_back(v);
        for (auto v : b) in[v] = 0;
        auto sub2 = solve(rest2, in);
        for (auto v : b) in[v] = 1;
        Set& opp2 = player == 0 ? sub2.second : sub2.first;
        opp2.insert(opp2.end(), b.begin(), b.end());
        return sub2;
    }

    const ParityGame& g_;
    std::vector<std::vector<std::uint32_t>> pred_;
    std::vector<std::uint32_t> degree_;
};

}  // namespace

std::vector<std::uint8_t> solve_parity(const ParityGame& g) { return Zielonka(g).run(); }

}  // namespace bamin::detail
