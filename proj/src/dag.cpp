#include "minlab/dag.hpp"

#include <algorithm>
#include <stdexcept>

namespace minlab {

Dag::Dag(int k, std::vector<Edge> edges) : k_(k), edges_(std::move(edges)) {
    if (k_ < 1 || k_ > 31) throw std::invalid_argument("node count out of range");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    parent_masks_.assign(static_cast<std::size_t>(k_), 0);
    child_masks_.assign(static_cast<std::size_t>(k_), 0);
    for (const auto& [p, c] : edges_) {
        if (p < 0 || p >= k_ || c < 0 || c >= k_) throw std::invalid_argument("edge index out of range");
        if (p == c) throw std::invalid_argument("self-loop");
        parent_masks_[static_cast<std::size_t>(c)] |= mask_bit(p);
        child_masks_[static_cast<std::size_t>(p)] |= mask_bit(c);
    }
    topological_order();  // throws on a cycle
}

Dag Dag::chain(int k) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Dag(k, std::move(e));
}

Dag Dag::complete(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Dag(k, std::move(e));
}

std::vector<int> Dag::topological_order() const {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k_));
    VarMask placed = 0;
    while (static_cast<int>(order.size()) < k_) {
        bool progressed = false;
        for (int i = 0; i < k_; ++i) {
            if (mask_contains(placed, i)) continue;
            if ((parent_masks_[static_cast<std::size_t>(i)] & ~placed) == 0) {
                order.push_back(i);
                placed |= mask_bit(i);
                progressed = true;
            }
        }
        if (!progressed) throw std::invalid_argument("edge relation has a cycle");
    }
    return order;
}

VarMask Dag::descendant_mask(int i) const {
    VarMask seen = mask_bit(i);
    VarMask frontier = seen;
    while (frontier) {
        VarMask next = 0;
        for (VarMask rest = frontier; rest; rest &= rest - 1)
            next |= child_masks_[static_cast<std::size_t>(mask_lowest(rest))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

VarMask Dag::ancestral_mask(VarMask from) const {
    VarMask seen = from;
    VarMask frontier = from;
    while (frontier) {
        VarMask next = 0;
        for (VarMask rest = frontier; rest; rest &= rest - 1)
            next |= parent_masks_[static_cast<std::size_t>(mask_lowest(rest))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

std::uint64_t Dag::adjacency_code() const {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) {
            if (i == j) continue;
            if (has_edge(i, j)) code |= std::uint64_t{1} << bit;
            ++bit;
        }
    return code;
}

std::vector<int> parents(const Dag& g, int i) {
    if (i < 0 || i >= g.node_count()) throw std::invalid_argument("variable index out of range");
    return mask_indices(g.parent_mask(i));
}

std::vector<int> descendants(const Dag& g, int i) {
    if (i < 0 || i >= g.node_count()) throw std::invalid_argument("variable index out of range");
    return mask_indices(g.descendant_mask(i));
}

}  // namespace minlab
