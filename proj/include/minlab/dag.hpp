#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "minlab/variables.hpp"

namespace minlab {

// Directed acyclic graph over variable indices 0..k-1. Edges are stored as
// sorted (parent, child) pairs; acyclicity is verified at construction by
// topological sort, so every live Dag is a DAG.
class Dag {
public:
    using Edge = std::pair<int, int>;

    Dag(int k, std::vector<Edge> edges);

    static Dag empty(int k) { return Dag(k, {}); }
    static Dag chain(int k);     // 0 -> 1 -> ... -> k-1
    static Dag complete(int k);  // all edges i -> j for i < j

    int node_count() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int parent, int child) const {
        return mask_contains(parent_masks_[static_cast<std::size_t>(child)], parent);
    }
    VarMask parent_mask(int i) const { return parent_masks_[static_cast<std::size_t>(i)]; }
    VarMask child_mask(int i) const { return child_masks_[static_cast<std::size_t>(i)]; }

    // reflexive-transitive closure of the child relation; always contains i
    VarMask descendant_mask(int i) const;
    // ancestors of every variable in `from`, reflexive
    VarMask ancestral_mask(VarMask from) const;

    std::vector<int> topological_order() const;

    // off-diagonal adjacency bits in row-major order; total order on graphs
    // of equal size, used for deterministic enumeration
    std::uint64_t adjacency_code() const;

    bool operator==(const Dag& other) const {
        return k_ == other.k_ && edges_ == other.edges_;
    }

private:
    int k_;
    std::vector<Edge> edges_;
    std::vector<VarMask> parent_masks_;
    std::vector<VarMask> child_masks_;
};

// exactly the sources of edges into i, ascending
std::vector<int> parents(const Dag& g, int i);

// descendants of i including i itself, ascending
std::vector<int> descendants(const Dag& g, int i);

}  // namespace minlab
