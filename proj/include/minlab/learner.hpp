#pragma once

#include <cstdint>
#include <vector>

#include "minlab/citest.hpp"
#include "minlab/graphs.hpp"

namespace minlab {

// Linear order over all equivalence classes with the property that a class
// whose entailment set strictly contains another's always comes first.
struct HypothesisOrder {
    int k = 0;
    std::vector<Hypothesis> sequence;

    // Throws std::logic_error if the superset-first property is violated or
    // the sequence does not cover every class exactly once.
    void validate() const;
};

// Entailment count descending, ties broken by statement-set order; equals
// the canonical class order of equivalence_classes(k).
HypothesisOrder default_order(int k, int cap = kDefaultCap);

// A valid order placing `preferred_class_id` before every class whose
// entailment set is incomparable to the preferred one.
HypothesisOrder order_preferring(int k, int preferred_class_id, int cap = kDefaultCap);

// First hypothesis in the sequence whose entailment set fits inside s.
// Total: the complete-graph class (empty entailment set) always fits.
const Hypothesis& select_f(const HypothesisOrder& order, const StatementSet& s);

// Selector composed with the statement super-test.
struct Learner {
    HypothesisOrder order;
    double threshold_constant = 1.0;

    const std::vector<CiStatement>& universe() const;
};

Learner make_learner(int k, int cap = kDefaultCap);
Learner make_learner(HypothesisOrder order);

struct LearnResult {
    Hypothesis hypothesis;
    SuperTestOutput test;
};

Hypothesis learn(const Learner& l, const Sample& sample);
LearnResult learn_detailed(const Learner& l, const Sample& sample);

// Wrapper that answers `target` whenever the accepted statement set equals
// target_iset exactly, and defers to the base learner otherwise.
struct PatchedLearner {
    Learner base;
    Hypothesis target;
    StatementSet target_iset;
};

Hypothesis learn(const PatchedLearner& l, const Sample& sample);

}  // namespace minlab
