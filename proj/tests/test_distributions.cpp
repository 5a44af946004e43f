#include <doctest.h>

#include <cmath>

#include "minlab/fixtures.hpp"
#include "minlab/joint.hpp"
#include "minlab/rng.hpp"

using namespace minlab;

namespace {
JointTable correlated_pair() {
    return JointTable(VariableSet::binary(2), {0.5, 0.0, 0.0, 0.5});
}
}  // namespace

TEST_CASE("table validation") {
    CHECK_THROWS_AS(JointTable(VariableSet::binary(2), {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(JointTable(VariableSet::binary(2), {0.9, 0.2, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(JointTable(VariableSet::binary(2), {1.1, -0.1, 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("joint_of multiplies the factors") {
    const VariableSet vars = VariableSet::binary(2);
    const CptNetwork fair(Dag::empty(2), vars, {{0.5, 0.5}, {0.5, 0.5}});
    CHECK(joint_of(fair).probs == std::vector<double>{0.25, 0.25, 0.25, 0.25});

    const CptNetwork degenerate(Dag(2, {{0, 1}}), vars, {{0.5, 0.5}, {0.5, 0.5, 0.5, 0.5}});
    for (double p : joint_of(degenerate).probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));

    const CptNetwork net(Dag(2, {{0, 1}}), vars, {{0.7, 0.3}, {0.8, 0.2, 0.1, 0.9}});
    const auto probs = joint_of(net).probs;  // (x0, x1) in order 00, 01, 10, 11
    CHECK(probs[0] == doctest::Approx(0.56).epsilon(1e-12));
    CHECK(probs[1] == doctest::Approx(0.14).epsilon(1e-12));
    CHECK(probs[2] == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(probs[3] == doctest::Approx(0.27).epsilon(1e-12));

    CHECK_THROWS_AS(CptNetwork(Dag(2, {{0, 1}}), vars, {{0.7, 0.3}, {0.8, 0.3, 0.1, 0.9}}),
                    std::invalid_argument);
}

TEST_CASE("ci_holds checks the factorization cellwise") {
    const CiStatement s = CiStatement::of({0}, {1}, {});
    CHECK(ci_holds(JointTable(VariableSet::binary(2), {0.25, 0.25, 0.25, 0.25}), s));
    CHECK_FALSE(ci_holds(correlated_pair(), s));

    const auto& collider = fixture("generic_collider");
    CHECK(ci_holds(collider.state.p, CiStatement::of({0}, {1}, {})));
    CHECK_FALSE(ci_holds(collider.state.p, CiStatement::of({0}, {1}, {2})));
}

TEST_CASE("independence sets of stock tables") {
    const auto uniform3 = JointTable(VariableSet::binary(3), std::vector<double>(8, 0.125));
    CHECK(independence_set(uniform3).size() == 9);  // everything

    std::vector<double> point(8, 0.0);
    point[5] = 1.0;
    CHECK(independence_set(JointTable(VariableSet::binary(3), point)).size() == 9);

    const auto& chain = fixture("generic_chain");
    CHECK(independence_set(chain.state.p) == entailment_set(chain.state.g));
}

TEST_CASE("tv distance examples and metric laws") {
    const auto p = JointTable(VariableSet::binary(2), {0.5, 0.5, 0.0, 0.0});
    const auto q = JointTable(VariableSet::binary(2), {0.6, 0.4, 0.0, 0.0});
    CHECK(tv_distance(p, p) == 0.0);
    CHECK(tv_distance(p, q) == doctest::Approx(0.1).epsilon(1e-12));

    std::vector<double> a(4, 0.0), b(4, 0.0);
    a[0] = 1.0;
    b[3] = 1.0;
    CHECK(tv_distance(JointTable(VariableSet::binary(2), a),
                      JointTable(VariableSet::binary(2), b)) == 1.0);

    const VariableSet vars = VariableSet::binary(3);
    for (int r = 0; r < 200; ++r) {
        const auto x = random_table(vars, derive_seed(0xD15Cu, static_cast<std::uint64_t>(r), 0));
        const auto y = random_table(vars, derive_seed(0xD15Cu, static_cast<std::uint64_t>(r), 1));
        const auto z = random_table(vars, derive_seed(0xD15Cu, static_cast<std::uint64_t>(r), 2));
        const double dxy = tv_distance(x, y);
        CHECK(dxy == doctest::Approx(tv_distance(y, x)));
        CHECK(dxy >= 0.0);
        CHECK(dxy <= 1.0);
        CHECK(dxy <= tv_distance(x, z) + tv_distance(z, y) + 1e-12);
    }
    CHECK(tv_distance(random_table(vars, 9), random_table(vars, 9)) == 0.0);
}

TEST_CASE("mix arithmetic and the two-cell mixture example") {
    const auto uniform = JointTable(VariableSet::binary(2), {0.25, 0.25, 0.25, 0.25});
    CHECK(mix(uniform, correlated_pair(), 0.0).probs == uniform.probs);

    const VariableSet coin({"c"}, {2});
    const auto fair = JointTable(coin, {0.5, 0.5});
    const auto point = JointTable(coin, {1.0, 0.0});
    CHECK(tv_distance(fair, mix(fair, point, 0.2)) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("perturb stays strictly inside the ball and is seed-deterministic") {
    const auto& chain = fixture("generic_chain");
    for (int r = 0; r < 50; ++r) {
        const double eps = 0.001 + 0.9 * (r / 50.0);
        const auto p1 = perturb(chain.state.p, eps, static_cast<std::uint64_t>(r));
        const auto p2 = perturb(chain.state.p, eps, static_cast<std::uint64_t>(r));
        CHECK(p1.probs == p2.probs);
        CHECK(tv_distance(chain.state.p, p1) < eps);
    }
    CHECK_THROWS_AS(perturb(chain.state.p, 0.0, 1), std::invalid_argument);
}

TEST_CASE("is_markov on the worked examples") {
    CHECK_FALSE(is_markov(Dag::empty(2), correlated_pair()));
    CHECK(is_markov(Dag::complete(3), random_table(VariableSet::binary(3), 7)));
    const auto& chain = fixture("generic_chain");
    CHECK(is_markov(chain.state.g, chain.state.p));
}

TEST_CASE("factorizations are Markov by construction") {
    const auto& cat = dag_catalog(3);
    const auto vars = VariableSet::binary(3);
    for (std::size_t i = 0; i < cat.dags.size(); ++i) {
        const auto net = random_network(cat.dags[i], vars, derive_seed(0xFAC7u, i));
        const auto joint = joint_of(net);
        CHECK(is_markov(cat.dags[i], joint));
        double sum = 0.0;
        for (double x : joint.probs) {
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("faithfulness is generic: no random parameterization adds independencies") {
    const auto& cat = dag_catalog(3);
    const auto vars = VariableSet::binary(3);
    int spurious = 0;
    for (std::size_t i = 0; i < cat.dags.size(); ++i)
        for (int r = 0; r < 1000; ++r) {
            const auto net =
                random_network(cat.dags[i], vars, derive_seed(0x6E6E, i, static_cast<std::uint64_t>(r)));
            if (independence_set(joint_of(net)) != cat.isets[i]) ++spurious;
        }
    CHECK(spurious == 0);
}
