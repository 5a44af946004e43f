#pragma once

#include <optional>

#include "minlab/joint.hpp"

namespace minlab {

struct MarkovViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StateClass {
    bool markov = false;
    bool faithful = false;
    bool minimal = false;
    bool u_minimal = false;
    bool quasi_faithful = false;

    bool operator==(const StateClass&) const = default;
};

// entailment_set(g) == independence_set(p). Requires the Markov condition.
bool is_faithful(const Dag& g, const JointTable& p, double tol = kCiTolerance,
                 int cap = kDefaultCap);

// No enumerated g' satisfies I(g) < I(g') <= I(p). Requires Markov.
bool is_minimal(const Dag& g, const JointTable& p, double tol = kCiTolerance,
                int cap = kDefaultCap);

// First graph witnessing a minimality failure, if any.
std::optional<Dag> minimality_witness(const Dag& g, const JointTable& p,
                                      double tol = kCiTolerance, int cap = kDefaultCap);

// Minimal and every graph minimal to p is Markov equivalent to g.
bool is_u_minimal(const Dag& g, const JointTable& p, double tol = kCiTolerance,
                  int cap = kDefaultCap);

// Some enumerated graph is faithful to p (a property of p alone).
bool is_quasi_faithful(const JointTable& p, double tol = kCiTolerance,
                       int cap = kDefaultCap);

// Class ids of all hypotheses whose graphs are minimal to p.
std::vector<int> minimal_class_ids(const JointTable& p, double tol = kCiTolerance,
                                   int cap = kDefaultCap);

// All five predicates; the Markov flag is computed first and the dependent
// predicates report false when it fails (no exception).
StateClass classify(const Dag& g, const JointTable& p, double tol = kCiTolerance,
                    int cap = kDefaultCap);

}  // namespace minlab
