// Small explicit parity-game solver (Zielonka), max-priority convention.
#pragma once

#include <cstdint>
#include <vector>

namespace bamin::detail {

/// Player 0 ("even") wins a play if the highest priority seen infinitely
/// often is even. Every node must have a successor.
struct ParityGame {
    std::vector<std::uint8_t> owner;  // 0 or 1
    std::vector<std::uint8_t> priority;
    std::vector<std::vector<std::uint32_t>> succ;

    std::uint32_t add_node(std::uint8_t who, std::uint8_t prio) {
        owner.push_back(who);
        priority.push_back(prio);
        succ.emplace_back();
        return static_cast<std::uint32_t>(owner.size() - 1);
    }
    std::size_t size() const { return owner.size(); }
};

/// Winner (0 or 1) of every node.
std::vector<std::uint8_t> solve_parity(const ParityGame& g);

}  // namespace bamin::detail
