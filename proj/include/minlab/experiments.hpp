#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minlab/fixtures.hpp"
#include "minlab/learner.hpp"
#include "minlab/states.hpp"

namespace minlab {

// Terminal success-rate thresholds standing in for the asymptotic notions:
// almost-sure convergence is not finitely observable, so reports state
// "high"/"low" against these and say so.
inline constexpr double kHighSuccess = 0.95;
inline constexpr double kLowSuccess = 0.05;

struct TrialPlan {
    std::vector<std::size_t> n_grid;  // strictly increasing
    int trials_per_n = 1;
    std::uint64_t base_seed = 0;
    int jobs = 1;

    void validate() const;
};

struct CurvePoint {
    std::size_t n = 0;
    int trials = 0;
    int successes = 0;
    double rate = 0.0;
    double lo = 0.0;  // 95% Wilson interval
    double hi = 0.0;
};

struct ConvergenceCurve {
    int target_class_id = -1;
    std::vector<CurvePoint> points;

    double terminal_rate() const { return points.empty() ? 0.0 : points.back().rate; }
};

// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(int successes, int trials);

// Success frequency of "output class == target" per n, sampling from p.
ConvergenceCurve success_curve(const JointTable& p, const Hypothesis& target,
                               const Learner& l, const TrialPlan& plan);

// Curve for the state's own hypothesis. Errors when the state is not Markov.
ConvergenceCurve run_convergence(const CausalState& state, const Learner& l,
                                 const TrialPlan& plan);

// --- classification vs observed behavior ---------------------------------

struct BehaviorFlip {
    int preferred_class_id = -1;
    double preferred_terminal = 0.0;  // success of the preferred class
    double true_terminal = 0.0;       // success of the state's own class
};

struct BehaviorEntry {
    std::string label;
    StateClass cls;
    int true_class_id = -1;
    std::string regime;  // "u-minimal" | "non-minimal" | "minimal-ambiguous"
    ConvergenceCurve curve;
    std::vector<BehaviorFlip> flips;  // only for minimal-ambiguous states
    int winning_class_id = -1;        // class most often output at terminal n
    double winning_rate = 0.0;
    bool consistent = false;
};

struct BehaviorReport {
    std::vector<BehaviorEntry> entries;
    bool all_consistent = true;
};

BehaviorReport verify_classification_behavior(
    const std::vector<std::pair<std::string, CausalState>>& states,
    const TrialPlan& plan, double threshold_constant = 1.0);

// --- stability of success under small perturbations ----------------------

struct UniformityReport {
    std::string label;
    double epsilon = 0.0;
    double effective_epsilon = 0.0;  // after shrinking, if rejection sampling struggled
    bool shrunk = false;
    bool center_u_minimal = false;   // informational; probe runs either way
    ConvergenceCurve center_curve;
    std::vector<double> probe_tv;
    std::vector<ConvergenceCurve> probe_curves;
    std::vector<std::pair<std::size_t, double>> inf_success_per_n;
    std::string verdict;  // "no violation found" | "violation found"
};

// Probes are CPT-space perturbations of `net` (joint mixtures almost surely
// change the independence set); each keeps tv < epsilon, the Markov
// condition, and independence_set(p') == independence_set(center.p).
UniformityReport uniformity_probe(const CausalState& center, const CptNetwork& net,
                                  double epsilon, int probes, const TrialPlan& plan,
                                  double threshold_constant = 1.0);

// --- replaying the cost of converging in a non-minimal state -------------

// From a non-minimal s0 = (G, P), builds s1 = (G', P) with G' minimal and
// I(G) <= I(G'), s2 = (G', P'), s3 = (G, P'), and demonstrates on shared
// seeds that the learner behaves identically in s2 and s3, converging to a
// falsehood in s3. Throws std::invalid_argument when s0 is minimal.
struct ReplayReport {
    int s0_class_id = -1;
    int minimal_class_id = -1;   // class of G'
    bool perturbed = false;      // whether P' != P was needed
    std::size_t n = 0;
    int trials = 0;
    bool outputs_identical = false;   // per-seed outputs equal on s2 vs s3
    double s2_truth_rate = 0.0;       // success of [G'] in s2
    double s3_truth_rate = 0.0;       // success of [G] in s3
    double s3_converged_rate = 0.0;   // rate of [G'] in s3
    bool succeeded = false;
};

ReplayReport sacrifice_replay(const CausalState& s0, const Learner& l, std::size_t n,
                              int trials, std::uint64_t seed);

// --- faithfulness <-> convergence over quasi-faithful states -------------

struct QuasiEntry {
    std::string label;
    bool faithful = false;
    double terminal_success = 0.0;
    bool consistent = false;
};

struct QuasiReport {
    std::vector<QuasiEntry> entries;  // only quasi-faithful states
    std::vector<std::string> skipped; // states filtered out
    bool all_consistent = true;
    bool empty_suite = false;
};

QuasiReport quasi_faithful_suite(const std::vector<std::pair<std::string, CausalState>>& states,
                                 const TrialPlan& plan, double threshold_constant = 1.0);

// --- accepted statements vs output class ---------------------------------

struct TraceReport {
    std::size_t n = 0;
    int trials = 0;
    // output entailment set inside accepted S with no fitting class above it
    double relation_rate = 0.0;
    double exact_iset_rate = 0.0;  // accepted S == independence_set(P)
    int output_mode_class_id = -1;
};

TraceReport acceptance_trace(const CausalState& state, const Learner& l, std::size_t n,
                             int trials, std::uint64_t seed);

}  // namespace minlab
