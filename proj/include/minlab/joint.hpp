#pragma once

#include <cstdint>
#include <vector>

#include "minlab/dag.hpp"
#include "minlab/graphs.hpp"
#include "minlab/statements.hpp"
#include "minlab/variables.hpp"

namespace minlab {

// Residual tolerance for exact conditional-independence checks on joint
// tables. Exact joints built from double-precision CPTs accumulate error
// around 1e-15; generic dependence at desk scale sits at 1e-3 and above.
inline constexpr double kCiTolerance = 1e-9;

// Tolerance on probability-mass normalization.
inline constexpr double kMassTolerance = 1e-12;

// Exact joint probability table over full assignments, mixed-radix indexed
// with the last variable fastest.
struct JointTable {
    VariableSet vars;
    std::vector<double> probs;

    JointTable(VariableSet vars, std::vector<double> probs);

    double at(const std::vector<int>& assignment) const {
        return probs[vars.index_of(assignment)];
    }
};

// CPT-parameterized Bayesian network. cpts[i] is a row per assignment of
// parents(i) (mixed radix over the parents in ascending index order, last
// parent fastest), each row holding card(i) probabilities that sum to 1.
struct CptNetwork {
    Dag g;
    VariableSet vars;
    std::vector<std::vector<double>> cpts;

    CptNetwork(Dag g, VariableSet vars, std::vector<std::vector<double>> cpts);

    std::size_t row_count(int i) const { return cpts[static_cast<std::size_t>(i)].size() / static_cast<std::size_t>(vars.card(i)); }
};

// A graph paired with a joint distribution. Most call sites require the
// Markov condition to hold; classify() reports rather than assumes it.
struct CausalState {
    Dag g;
    JointTable p;
};

// Exact factorization of the network into its joint table.
JointTable joint_of(const CptNetwork& net);

// Marginal probabilities over the variables in `onto` (ascending order,
// last fastest), computed by exact summation.
std::vector<double> marginal(const JointTable& p, VarMask onto);

// True iff every assignment satisfies |P(u,v,w)P(w) - P(u,w)P(v,w)| <= tol.
// Cells with P(w) = 0 hold vacuously.
bool ci_holds(const JointTable& p, const CiStatement& s, double tol = kCiTolerance);

// All canonical statements true in p.
StatementSet independence_set(const JointTable& p, double tol = kCiTolerance,
                              int cap = kDefaultCap);

// Half the L1 distance; equals sup_A |P(A) - Q(A)| on finite spaces.
double tv_distance(const JointTable& p, const JointTable& q);

// (1-lambda) p + lambda q
JointTable mix(const JointTable& p, const JointTable& q, double lambda);

// A table drawn with uniform Dirichlet weights; deterministic given seed.
JointTable random_table(const VariableSet& vars, std::uint64_t seed);

// Random CPT parameterization of g (uniform Dirichlet rows).
CptNetwork random_network(const Dag& g, const VariableSet& vars, std::uint64_t seed);

// p' = (1-lambda) p + lambda q for a seeded random q, with lambda scaled to
// the realized distance so that tv_distance(p, p') < epsilon strictly.
JointTable perturb(const JointTable& p, double epsilon, std::uint64_t seed);

// entailment_set(g) subseteq independence_set(p), checked statement-wise.
bool is_markov(const Dag& g, const JointTable& p, double tol = kCiTolerance,
               int cap = kDefaultCap);

}  // namespace minlab
