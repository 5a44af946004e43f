#pragma once

#include <cstddef>
#include <vector>

#include "minlab/sampling.hpp"
#include "minlab/statements.hpp"

namespace minlab {

// Outcome of one conditional-independence test: accept iff the L1
// distance-from-independence of the empirical table stays below
// threshold_constant / n^(1/4).
struct CiVerdict {
    CiStatement statement;
    bool accepted = false;
    double statistic = 0.0;
    double threshold = 0.0;
    std::size_t n = 0;
};

struct SuperTestOutput {
    StatementSet s;                  // accepted statements
    std::vector<CiVerdict> verdicts; // one per statement of the universe
};

// sum over assignments of U,V,W of |P(u,v,w)P(w) - P(u,w)P(v,w)|
double l1_stat(const JointTable& p, const CiStatement& s);

double ci_threshold(std::size_t n, double constant = 1.0);

CiVerdict ci_test(const Sample& sample, const CiStatement& s, double constant = 1.0);

// Shares one empirical table across all statements of the universe.
SuperTestOutput super_test(const Sample& sample, const std::vector<CiStatement>& universe,
                           double constant = 1.0);
SuperTestOutput super_test_table(const JointTable& emp, std::size_t n,
                                 const std::vector<CiStatement>& universe,
                                 double constant = 1.0);

// |L1(p) - L1(q)| together with its bound 8 * tv_distance(p, q).
struct LipschitzGap {
    double gap;
    double bound;
};
LipschitzGap lipschitz_gap(const JointTable& p, const JointTable& q, const CiStatement& s);

// 1 - 2^cells * exp(-2 n epsilon^2), clamped to [0, 1]: a lower bound on
// P(tv_distance(empirical, truth) < epsilon) for a table with `cells` cells.
double hoeffding_envelope(std::size_t n, double epsilon, int cells);

}  // namespace minlab
