#include "minlab/citest.hpp"

#include <cmath>
#include <stdexcept>

namespace minlab {

double l1_stat(const JointTable& p, const CiStatement& s) {
    if ((s.scope() & ~p.vars.full_mask()) != 0)
        throw std::invalid_argument("statement is not over the table's variables");
    const auto muvw = marginal(p, s.scope());
    const auto mw = marginal(p, s.w());
    const auto muw = marginal(p, s.u() | s.w());
    const auto mvw = marginal(p, s.v() | s.w());

    const auto sel = mask_indices(s.scope());
    std::vector<int> cards;
    cards.reserve(sel.size());
    for (int i : sel) cards.push_back(p.vars.card(i));

    double sum = 0.0;
    std::vector<int> a(sel.size(), 0);
    for (std::size_t cell = 0; cell < muvw.size(); ++cell) {
        std::size_t iw = 0, iuw = 0, ivw = 0;
        for (std::size_t d = 0; d < sel.size(); ++d) {
            const auto c = static_cast<std::size_t>(cards[d]);
            const auto val = static_cast<std::size_t>(a[d]);
            if (mask_contains(s.w(), sel[d])) iw = iw * c + val;
            if (mask_contains(s.u() | s.w(), sel[d])) iuw = iuw * c + val;
            if (mask_contains(s.v() | s.w(), sel[d])) ivw = ivw * c + val;
        }
        sum += std::abs(muvw[cell] * mw[iw] - muw[iuw] * mvw[ivw]);
        for (std::size_t d = sel.size(); d-- > 0;) {
            if (++a[d] < cards[d]) break;
            a[d] = 0;
        }
    }
    return sum;
}

double ci_threshold(std::size_t n, double constant) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    return constant / std::pow(static_cast<double>(n), 0.25);
}

CiVerdict ci_test(const Sample& sample, const CiStatement& s, double constant) {
    if (sample.size() == 0) throw std::invalid_argument("cannot test an empty sample");
    const JointTable emp = empirical(sample);
    CiVerdict v{s, false, l1_stat(emp, s), ci_threshold(sample.size(), constant), sample.size()};
    v.accepted = v.statistic < v.threshold;
    return v;
}

SuperTestOutput super_test_table(const JointTable& emp, std::size_t n,
                                 const std::vector<CiStatement>& universe, double constant) {
    SuperTestOutput out;
    const double threshold = ci_threshold(n, constant);
    std::vector<CiStatement> accepted;
    out.verdicts.reserve(universe.size());
    for (const auto& s : universe) {
        CiVerdict v{s, false, l1_stat(emp, s), threshold, n};
        v.accepted = v.statistic < v.threshold;
        if (v.accepted) accepted.push_back(s);
        out.verdicts.push_back(std::move(v));
    }
    out.s = StatementSet(std::move(accepted));
    return out;
}

SuperTestOutput super_test(const Sample& sample, const std::vector<CiStatement>& universe,
                           double constant) {
    if (sample.size() == 0) throw std::invalid_argument("cannot test an empty sample");
    if (universe.empty()) return SuperTestOutput{};
    return super_test_table(empirical(sample), sample.size(), universe, constant);
}

LipschitzGap lipschitz_gap(const JointTable& p, const JointTable& q, const CiStatement& s) {
    return LipschitzGap{std::abs(l1_stat(p, s) - l1_stat(q, s)), 8.0 * tv_distance(p, q)};
}

double hoeffding_envelope(std::size_t n, double epsilon, int cells) {
    if (n < 1 || epsilon <= 0.0 || cells < 1) throw std::invalid_argument("bad envelope arguments");
    const double tail = std::exp2(static_cast<double>(cells)) *
                        std::exp(-2.0 * static_cast<double>(n) * epsilon * epsilon);
    const double bound = 1.0 - tail;
    return bound < 0.0 ? 0.0 : (bound > 1.0 ? 1.0 : bound);
}

}  // namespace minlab
