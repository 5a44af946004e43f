#include <doctest.h>

#include <cmath>

#include "minlab/citest.hpp"
#include "minlab/fixtures.hpp"
#include "minlab/rng.hpp"

using namespace minlab;

namespace {
const CiStatement kPair = CiStatement::of({0}, {1}, {});

JointTable correlated_pair() {
    return JointTable(VariableSet::binary(2), {0.5, 0.0, 0.0, 0.5});
}
}  // namespace

TEST_CASE("l1 statistic on exact tables") {
    const JointTable uniform(VariableSet::binary(2), {0.25, 0.25, 0.25, 0.25});
    CHECK(l1_stat(uniform, kPair) == 0.0);
    CHECK(l1_stat(correlated_pair(), kPair) == 1.0);

    const auto& chain = fixture("generic_chain");
    for (const auto& s : statement_universe(3)) {
        const bool zero = l1_stat(chain.state.p, s) <= 1e-12;
        CHECK(zero == ci_holds(chain.state.p, s, 1e-12));
    }
}

TEST_CASE("threshold rule") {
    CHECK(ci_threshold(16) == 0.5);
    CHECK(ci_threshold(16, 2.0) == 1.0);
    CHECK(ci_threshold(10000) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(ci_threshold(0), std::invalid_argument);

    Sample empty{VariableSet::binary(2), {}};
    CHECK_THROWS_AS(ci_test(empty, kPair), std::invalid_argument);
}

TEST_CASE("verdicts are consistent with the rule") {
    const auto& chain = fixture("generic_chain");
    for (int r = 0; r < 30; ++r) {
        const Sample s = draw(chain.state.p, 200 + 137 * static_cast<std::size_t>(r),
                              derive_seed(0x7E57u, static_cast<std::uint64_t>(r)));
        const auto out = super_test(s, statement_universe(3));
        for (const auto& v : out.verdicts) {
            CHECK(v.accepted == (v.statistic < v.threshold));
            CHECK(v.threshold == ci_threshold(s.size()));
            CHECK(out.s.contains(v.statement) == v.accepted);
        }
    }
}

TEST_CASE("acceptance under independence, rejection under strong dependence") {
    const JointTable fair(VariableSet::binary(2), {0.25, 0.25, 0.25, 0.25});
    int accepted = 0;
    for (int r = 0; r < 50; ++r)
        accepted += ci_test(draw(fair, 10000, derive_seed(1, static_cast<std::uint64_t>(r))), kPair)
                        .accepted;
    CHECK(accepted == 50);

    int rejected = 0;
    for (int r = 0; r < 50; ++r) {
        const auto verdict =
            ci_test(draw(correlated_pair(), 10000, derive_seed(2, static_cast<std::uint64_t>(r))),
                    kPair);
        rejected += !verdict.accepted;
        CHECK(verdict.statistic > 0.9);
    }
    CHECK(rejected == 50);
}

TEST_CASE("super test degenerate inputs") {
    const auto& point = fixture("point_mass");
    const auto out = super_test(draw(point.state.p, 50, 3), statement_universe(2));
    for (const auto& v : out.verdicts) {
        CHECK(v.statistic == 0.0);
        CHECK(v.accepted);
    }

    const Sample s = draw(point.state.p, 50, 4);
    CHECK(super_test(s, {}).verdicts.empty());
    CHECK(super_test(s, {}).s.empty());
}

TEST_CASE("super test converges to the entailment set of a generic chain") {
    const auto& chain = fixture("generic_chain");
    const auto out = super_test(draw(chain.state.p, 100000, 0xCAFEu), statement_universe(3));
    CHECK(out.s == entailment_set(chain.state.g));
}

TEST_CASE("statistic gap is Lipschitz in total variation") {
    const VariableSet vars = VariableSet::binary(3);
    const auto universe = statement_universe(3);
    for (int r = 0; r < 2000; ++r) {
        const auto p = random_table(vars, derive_seed(0x11Au, static_cast<std::uint64_t>(r), 0));
        const auto q = random_table(vars, derive_seed(0x11Au, static_cast<std::uint64_t>(r), 1));
        const auto& s = universe[static_cast<std::size_t>(r) % universe.size()];
        const auto [gap, bound] = lipschitz_gap(p, q, s);
        CHECK(gap <= bound + 1e-12);

        // mixtures stay inside the same bound at their realized distance
        const auto m = mix(p, q, 0.1);
        const auto [mgap, mbound] = lipschitz_gap(p, m, s);
        CHECK(mgap <= mbound + 1e-12);
    }
    const auto p = random_table(vars, 5);
    const auto [gap, bound] = lipschitz_gap(p, p, kPair);
    CHECK(gap == 0.0);
    CHECK(bound == 0.0);
}

TEST_CASE("envelope arithmetic") {
    CHECK(hoeffding_envelope(1000, 0.1, 4) ==
          doctest::Approx(1.0 - 16.0 * std::exp(-20.0)).epsilon(1e-12));
    CHECK(hoeffding_envelope(10, 5.0, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hoeffding_envelope(1, 1e-3, 20) == 0.0);  // clamped
    CHECK_THROWS_AS(hoeffding_envelope(0, 0.1, 4), std::invalid_argument);
}

TEST_CASE("rejection rate under a false statement beats the exponential bound") {
    // perfectly correlated pair: the statistic sits at 1, so rejection only
    // needs n^(1/4) >= 4
    const int seeds = 200;
    for (std::size_t n : {256u, 1024u, 4096u}) {
        int rejections = 0;
        for (int r = 0; r < seeds; ++r)
            rejections += !ci_test(draw(correlated_pair(), n,
                                        derive_seed(0xF00Du, n, static_cast<std::uint64_t>(r))),
                                   kPair)
                               .accepted;
        const double bound = 1.0 - 16.0 * std::exp(-static_cast<double>(n) / 128.0);
        const double noise = 3.0 * std::sqrt(std::max(bound * (1.0 - bound), 0.25) / seeds);
        CHECK(static_cast<double>(rejections) / seeds >= std::max(0.0, bound - noise));
    }
}

TEST_CASE("per-statement error rates keep falling with n") {
    const auto& chain = fixture("generic_chain");
    const StatementSet truth = independence_set(chain.state.p);
    const auto universe = statement_universe(3);
    const int seeds = 200;
    const std::vector<std::size_t> grid = {100, 1000, 10000, 100000};

    std::vector<std::vector<double>> errors(universe.size());
    for (std::size_t ni = 0; ni < grid.size(); ++ni) {
        std::vector<int> wrong(universe.size(), 0);
        for (int r = 0; r < seeds; ++r) {
            const auto emp = empirical(
                draw(chain.state.p, grid[ni], derive_seed(0x5C5Cu, ni, static_cast<std::uint64_t>(r))));
            const auto out = super_test_table(emp, grid[ni], universe);
            for (std::size_t si = 0; si < universe.size(); ++si)
                if (out.verdicts[si].accepted != truth.contains(universe[si])) ++wrong[si];
        }
        for (std::size_t si = 0; si < universe.size(); ++si)
            errors[si].push_back(static_cast<double>(wrong[si]) / seeds);
    }
    for (std::size_t si = 0; si < universe.size(); ++si)
        for (std::size_t ni = 0; ni + 1 < grid.size(); ++ni) {
            const double now = errors[si][ni], next = errors[si][ni + 1];
            if (now < 0.5) {
                CAPTURE(universe[si].str());
                CHECK((next < now || next == 0.0));
            }
        }
}
