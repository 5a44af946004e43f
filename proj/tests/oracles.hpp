#pragma once

// Independent reference implementations used only to cross-check the library.
// They deliberately take different routes: DFS cycle detection instead of
// Kahn peeling, skeleton/collider comparison instead of entailment sets, and
// random parameterizations instead of graph separation.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "minlab/graphs.hpp"
#include "minlab/joint.hpp"
#include "minlab/rng.hpp"

namespace oracles {

using minlab::Dag;

inline bool dfs_has_cycle(int node, const std::vector<std::vector<int>>& children,
                          std::vector<int>& color) {
    color[static_cast<std::size_t>(node)] = 1;
    for (int c : children[static_cast<std::size_t>(node)]) {
        if (color[static_cast<std::size_t>(c)] == 1) return true;
        if (color[static_cast<std::size_t>(c)] == 0 && dfs_has_cycle(c, children, color))
            return true;
    }
    color[static_cast<std::size_t>(node)] = 2;
    return false;
}

// Every acyclic orientation of the off-diagonal adjacency entries, as sorted
// edge sets. Column-major bit layout, unlike the library's enumeration.
inline std::set<std::vector<std::pair<int, int>>> brute_force_dags(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (i != j) pairs.emplace_back(i, j);
    std::set<std::vector<std::pair<int, int>>> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
        std::vector<std::vector<int>> children(static_cast<std::size_t>(k));
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((code >> b) & 1) {
                edges.push_back(pairs[b]);
                children[static_cast<std::size_t>(pairs[b].first)].push_back(pairs[b].second);
            }
        std::vector<int> color(static_cast<std::size_t>(k), 0);
        bool cyclic = false;
        for (int v = 0; v < k && !cyclic; ++v)
            if (color[static_cast<std::size_t>(v)] == 0)
                cyclic = dfs_has_cycle(v, children, color);
        if (cyclic) continue;
        std::sort(edges.begin(), edges.end());
        out.insert(std::move(edges));
    }
    return out;
}

// Verma-Pearl criterion: same skeleton and same unshielded colliders.
inline bool equivalent_by_structure(const Dag& a, const Dag& b) {
    const int k = a.node_count();
    auto adjacent = [](const Dag& g, int x, int y) {
        return g.has_edge(x, y) || g.has_edge(y, x);
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (adjacent(a, i, j) != adjacent(b, i, j)) return false;
    auto colliders = [&](const Dag& g) {
        std::set<std::tuple<int, int, int>> out;
        for (int x = 0; x < k; ++x)
            for (int z = 0; z < k; ++z)
                for (int y = x + 1; y < k; ++y) {
                    if (x == z || y == z) continue;
                    if (g.has_edge(x, z) && g.has_edge(y, z) && !adjacent(g, x, y))
                        out.emplace(x, z, y);
                }
        return out;
    };
    return colliders(a) == colliders(b);
}

// Semantic check of a separation claim: entailment means the independence
// holds under every parameterization; dependence is witnessed by a generic
// one. `params` random networks per graph.
inline bool semantic_oracle_agrees(const Dag& g, const minlab::CiStatement& s, bool claimed,
                                   int params, std::uint64_t seed) {
    int dependents = 0;
    for (int r = 0; r < params; ++r) {
        const auto net = minlab::random_network(g, minlab::VariableSet::binary(g.node_count()),
                                                minlab::derive_seed(seed, static_cast<std::uint64_t>(r)));
        if (!minlab::ci_holds(minlab::joint_of(net), s)) ++dependents;
    }
    return claimed ? dependents == 0 : dependents > 0;
}

}  // namespace oracles
