#include "minlab/states.hpp"

namespace minlab {

namespace {
void require_markov(const Dag& g, const JointTable& p, double tol, int cap) {
    if (!is_markov(g, p, tol, cap))
        throw MarkovViolationError("the graph is not Markov to this distribution");
}
}  // namespace

bool is_faithful(const Dag& g, const JointTable& p, double tol, int cap) {
    require_markov(g, p, tol, cap);
    return entailment_set(g, cap) == independence_set(p, tol, cap);
}

bool is_minimal(const Dag& g, const JointTable& p, double tol, int cap) {
    return !minimality_witness(g, p, tol, cap).has_value();
}

std::optional<Dag> minimality_witness(const Dag& g, const JointTable& p, double tol, int cap) {
    require_markov(g, p, tol, cap);
    const StatementSet ig = entailment_set(g, cap);
    const StatementSet ip = independence_set(p, tol, cap);
    const auto& cat = dag_catalog(g.node_count(), cap);
    for (std::size_t i = 0; i < cat.dags.size(); ++i)
        if (ig.strict_subset_of(cat.isets[i]) && cat.isets[i].subset_of(ip))
            return cat.dags[i];
    return std::nullopt;
}

std::vector<int> minimal_class_ids(const JointTable& p, double tol, int cap) {
    const StatementSet ip = independence_set(p, tol, cap);
    const auto& classes = equivalence_classes(p.vars.size(), cap);
    std::vector<int> out;
    for (const auto& h : classes) {
        if (!h.iset.subset_of(ip)) continue;
        bool dominated = false;
        for (const auto& other : classes)
            if (h.iset.strict_subset_of(other.iset) && other.iset.subset_of(ip)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(h.id);
    }
    return out;
}

bool is_u_minimal(const Dag& g, const JointTable& p, double tol, int cap) {
    require_markov(g, p, tol, cap);
    const auto ids = minimal_class_ids(p, tol, cap);
    if (ids.size() != 1) return false;
    const auto& classes = equivalence_classes(g.node_count(), cap);
    return classes[static_cast<std::size_t>(ids.front())].iset == entailment_set(g, cap);
}

bool is_quasi_faithful(const JointTable& p, double tol, int cap) {
    const StatementSet ip = independence_set(p, tol, cap);
    for (const auto& h : equivalence_classes(p.vars.size(), cap))
        if (h.iset == ip) return true;
    return false;
}

StateClass classify(const Dag& g, const JointTable& p, double tol, int cap) {
    StateClass out;
    out.markov = is_markov(g, p, tol, cap);
    out.quasi_faithful = is_quasi_faithful(p, tol, cap);
    if (!out.markov) return out;
    const StatementSet ig = entailment_set(g, cap);
    const StatementSet ip = independence_set(p, tol, cap);
    out.faithful = ig == ip;
    const auto ids = minimal_class_ids(p, tol, cap);
    bool g_minimal = false;
    for (int id : ids) {
        const auto& h = equivalence_classes(g.node_count(), cap)[static_cast<std::size_t>(id)];
        if (h.iset == ig) g_minimal = true;
    }
    out.minimal = g_minimal;
    out.u_minimal = g_minimal && ids.size() == 1;
    return out;
}

}  // namespace minlab
