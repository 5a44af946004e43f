#include "minlab/learner.hpp"

#include <stdexcept>
#include <string>

namespace minlab {

void HypothesisOrder::validate() const {
    const auto& classes = equivalence_classes(k);
    if (sequence.size() != classes.size())
        throw std::logic_error("order must cover every equivalence class exactly once");
    std::vector<bool> seen(classes.size(), false);
    bool has_complete = false;
    for (const auto& h : sequence) {
        if (h.id < 0 || static_cast<std::size_t>(h.id) >= classes.size() ||
            seen[static_cast<std::size_t>(h.id)])
            throw std::logic_error("order repeats or invents a class id");
        seen[static_cast<std::size_t>(h.id)] = true;
        if (h.iset.empty()) has_complete = true;
    }
    if (!has_complete) throw std::logic_error("order lacks the complete-graph class");
    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i + 1; j < sequence.size(); ++j)
            if (sequence[i].iset.strict_subset_of(sequence[j].iset))
                throw std::logic_error("superset-first violation between positions " +
                                       std::to_string(i) + " and " + std::to_string(j));
}

HypothesisOrder default_order(int k, int cap) {
    HypothesisOrder order{k, equivalence_classes(k, cap)};
    order.validate();
    return order;
}

HypothesisOrder order_preferring(int k, int preferred_class_id, int cap) {
    const auto& classes = equivalence_classes(k, cap);
    if (preferred_class_id < 0 || static_cast<std::size_t>(preferred_class_id) >= classes.size())
        throw std::invalid_argument("invalid class id: " + std::to_string(preferred_class_id));
    const auto& preferred = classes[static_cast<std::size_t>(preferred_class_id)];

    HypothesisOrder order{k, {}};
    order.sequence.reserve(classes.size());
    // strict supersets must stay ahead; everything else yields to the
    // preferred class, which keeps the superset-first property intact
    for (const auto& h : classes)
        if (preferred.iset.strict_subset_of(h.iset)) order.sequence.push_back(h);
    order.sequence.push_back(preferred);
    for (const auto& h : classes)
        if (h.id != preferred.id && !preferred.iset.strict_subset_of(h.iset))
            order.sequence.push_back(h);
    order.validate();
    return order;
}

const Hypothesis& select_f(const HypothesisOrder& order, const StatementSet& s) {
    for (const auto& h : order.sequence)
        if (h.iset.subset_of(s)) return h;
    throw std::logic_error("no fitting hypothesis; the order is missing the complete class");
}

const std::vector<CiStatement>& Learner::universe() const {
    return dag_catalog(order.k).universe;
}

Learner make_learner(int k, int cap) { return Learner{default_order(k, cap), 1.0}; }

Learner make_learner(HypothesisOrder order) { return Learner{std::move(order), 1.0}; }

LearnResult learn_detailed(const Learner& l, const Sample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("cannot learn from an empty sample");
    if (sample.vars.size() != l.order.k)
        throw std::invalid_argument("sample and learner variable counts differ");
    SuperTestOutput test = super_test(sample, l.universe(), l.threshold_constant);
    Hypothesis h = select_f(l.order, test.s);
    return LearnResult{std::move(h), std::move(test)};
}

Hypothesis learn(const Learner& l, const Sample& sample) {
    return learn_detailed(l, sample).hypothesis;
}

Hypothesis learn(const PatchedLearner& l, const Sample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("cannot learn from an empty sample");
    const SuperTestOutput test = super_test(sample, l.base.universe(), l.base.threshold_constant);
    if (test.s == l.target_iset) return l.target;
    return select_f(l.base.order, test.s);
}

}  // namespace minlab
