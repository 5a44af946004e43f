#include "minlab/graphs.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace minlab {

void check_cap(int k, int cap) {
    if (k < 1) throw std::invalid_argument("variable count must be >= 1");
    if (k > cap)
        throw CapExceededError("variable count " + std::to_string(k) + " exceeds cap " +
                               std::to_string(cap) +
                               "; the intended ceiling is k=4 (543 DAGs). Raise the cap at "
                               "your own risk.");
}

std::vector<Dag> enumerate_dags(int k, int cap) {
    check_cap(k, cap);
    const int pair_count = k * (k - 1);
    std::vector<Dag::Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(pair_count));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) pairs.emplace_back(i, j);

    std::vector<Dag> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count); ++code) {
        std::vector<Dag::Edge> edges;
        for (int b = 0; b < pair_count; ++b)
            if ((code >> b) & 1) edges.push_back(pairs[static_cast<std::size_t>(b)]);
        try {
            out.emplace_back(k, std::move(edges));
        } catch (const std::invalid_argument&) {
            // cyclic orientation, skip
        }
    }
    std::sort(out.begin(), out.end(), [](const Dag& a, const Dag& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.adjacency_code() < b.adjacency_code();
    });
    return out;
}

bool d_separated(const Dag& g, VarMask u, VarMask v, VarMask w) {
    if (!u || !v) throw std::invalid_argument("u and v must be nonempty");
    if ((u & v) || (u & w) || (v & w)) throw std::invalid_argument("u, v, w must be disjoint");
    const int k = g.node_count();
    const VarMask relevant = g.ancestral_mask(u | v | w);

    // undirected adjacency of the moralized ancestral graph
    std::vector<VarMask> adj(static_cast<std::size_t>(k), 0);
    for (VarMask rest = relevant; rest; rest &= rest - 1) {
        const int child = mask_lowest(rest);
        const VarMask ps = g.parent_mask(child);  // parents of an ancestor are ancestors
        for (VarMask pr = ps; pr; pr &= pr - 1) {
            const int p = mask_lowest(pr);
            adj[static_cast<std::size_t>(p)] |= mask_bit(child);
            adj[static_cast<std::size_t>(child)] |= mask_bit(p);
            adj[static_cast<std::size_t>(p)] |= ps & ~mask_bit(p);  // marry co-parents
        }
    }

    // reachability from u avoiding w
    VarMask seen = u & ~w;
    VarMask frontier = seen;
    while (frontier) {
        VarMask next = 0;
        for (VarMask rest = frontier; rest; rest &= rest - 1)
            next |= adj[static_cast<std::size_t>(mask_lowest(rest))];
        next &= relevant & ~w;
        frontier = next & ~seen;
        seen |= frontier;
    }
    return (seen & v) == 0;
}

bool d_separated(const Dag& g, const CiStatement& s) {
    return d_separated(g, s.u(), s.v(), s.w());
}

namespace {

StatementSet entailment_over(const Dag& g, const std::vector<CiStatement>& universe) {
    std::vector<CiStatement> held;
    for (const auto& s : universe)
        if (d_separated(g, s)) held.push_back(s);
    return StatementSet(std::move(held));
}

struct CatalogCache {
    std::mutex mu;
    std::map<int, std::unique_ptr<DagCatalog>> by_k;
};

CatalogCache& catalog_cache() {
    static CatalogCache cache;
    return cache;
}

std::unique_ptr<DagCatalog> build_catalog(int k, int cap) {
    auto cat = std::make_unique<DagCatalog>();
    cat->universe = statement_universe(k);
    cat->dags = enumerate_dags(k, cap);
    cat->isets.reserve(cat->dags.size());
    for (const auto& g : cat->dags) cat->isets.push_back(entailment_over(g, cat->universe));

    std::map<StatementSet, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cat->dags.size(); ++i) groups[cat->isets[i]].push_back(i);

    cat->classes.reserve(groups.size());
    for (auto& [iset, members] : groups) {
        Hypothesis h;
        h.iset = iset;
        for (std::size_t i : members) h.members.push_back(cat->dags[i]);
        cat->classes.push_back(std::move(h));
    }
    // canonical class order: entailment count descending, then set order
    std::sort(cat->classes.begin(), cat->classes.end(), [](const Hypothesis& a, const Hypothesis& b) {
        if (a.iset.size() != b.iset.size()) return a.iset.size() > b.iset.size();
        return a.iset < b.iset;
    });
    cat->class_of.assign(cat->dags.size(), -1);
    for (std::size_t c = 0; c < cat->classes.size(); ++c) {
        cat->classes[c].id = static_cast<int>(c);
        for (std::size_t i = 0; i < cat->dags.size(); ++i)
            if (cat->isets[i] == cat->classes[c].iset) cat->class_of[i] = static_cast<int>(c);
    }
    return cat;
}

}  // namespace

const DagCatalog& dag_catalog(int k, int cap) {
    check_cap(k, cap);
    auto& cache = catalog_cache();
    std::scoped_lock lock(cache.mu);
    auto it = cache.by_k.find(k);
    if (it == cache.by_k.end()) it = cache.by_k.emplace(k, build_catalog(k, cap)).first;
    return *it->second;
}

StatementSet entailment_set(const Dag& g, int cap) {
    check_cap(g.node_count(), cap);
    return entailment_over(g, statement_universe(g.node_count()));
}

bool markov_equivalent(const Dag& g1, const Dag& g2, int cap) {
    if (g1.node_count() != g2.node_count())
        throw std::invalid_argument("graphs must share a variable count");
    return entailment_set(g1, cap) == entailment_set(g2, cap);
}

const std::vector<Hypothesis>& equivalence_classes(int k, int cap) {
    return dag_catalog(k, cap).classes;
}

}  // namespace minlab
