#include <doctest.h>

#include <map>

#include "minlab/fixtures.hpp"
#include "minlab/rng.hpp"
#include "minlab/states.hpp"

using namespace minlab;

namespace {
JointTable correlated_pair() {
    return JointTable(VariableSet::binary(2), {0.5, 0.0, 0.0, 0.5});
}
JointTable uniform_table(int k) {
    const auto vars = VariableSet::binary(k);
    return JointTable(vars, std::vector<double>(vars.cell_count(),
                                                1.0 / static_cast<double>(vars.cell_count())));
}
}  // namespace

TEST_CASE("faithfulness predicate") {
    const auto& chain = fixture("generic_chain");
    CHECK(is_faithful(chain.state.g, chain.state.p));

    const auto& degen = fixture("degenerate_edge");
    CHECK_FALSE(is_faithful(degen.state.g, degen.state.p));

    CHECK(is_faithful(Dag::empty(2), uniform_table(2)));
    CHECK_THROWS_AS(is_faithful(Dag::empty(2), correlated_pair()), MarkovViolationError);
}

TEST_CASE("minimality predicate and its witness") {
    const auto& degen = fixture("degenerate_edge");
    CHECK_FALSE(is_minimal(degen.state.g, degen.state.p));
    const auto witness = minimality_witness(degen.state.g, degen.state.p);
    REQUIRE(witness.has_value());
    CHECK(witness->edge_count() == 0);  // the empty graph explains strictly more

    const auto& chain = fixture("generic_chain");
    CHECK(is_minimal(chain.state.g, chain.state.p));
    CHECK_FALSE(minimality_witness(chain.state.g, chain.state.p).has_value());

    CHECK(is_minimal(Dag::empty(2), uniform_table(2)));
    CHECK_THROWS_AS(is_minimal(Dag::empty(2), correlated_pair()), MarkovViolationError);
}

TEST_CASE("u-minimality: unfaithful cancellations leave rival minimal graphs") {
    const auto& chain = fixture("generic_chain");
    CHECK(is_u_minimal(chain.state.g, chain.state.p));

    // faithful states are always u-minimal
    for (const auto& f : fixture_library())
        if (classify(f.state.g, f.state.p).faithful) CHECK(is_u_minimal(f.state.g, f.state.p));

    const auto& xor_state = fixture("cancellation_collider");
    CHECK(is_minimal(xor_state.state.g, xor_state.state.p));
    CHECK_FALSE(is_u_minimal(xor_state.state.g, xor_state.state.p));
    // the three colliders are exactly the minimal explanations of noisy xor
    CHECK(minimal_class_ids(xor_state.state.p).size() == 3);

    const auto& tern = fixture("cancelling_chain");
    CHECK(is_minimal(tern.state.g, tern.state.p));
    CHECK_FALSE(is_u_minimal(tern.state.g, tern.state.p));
    CHECK(minimal_class_ids(tern.state.p).size() == 2);
}

TEST_CASE("quasi-faithfulness is a property of the distribution") {
    const auto& chain = fixture("generic_chain");
    CHECK(is_quasi_faithful(chain.state.p));
    CHECK(is_quasi_faithful(uniform_table(3)));
    CHECK(is_quasi_faithful(fixture("degenerate_edge").state.p));

    // cancellation sets match no graph's entailment set
    CHECK_FALSE(is_quasi_faithful(fixture("cancellation_collider").state.p));
    CHECK_FALSE(is_quasi_faithful(fixture("cancelling_chain").state.p));
}

TEST_CASE("classify bundles the predicates") {
    const std::map<std::string, StateClass> expected = {
        {"generic_chain", {true, true, true, true, true}},
        {"generic_collider", {true, true, true, true, true}},
        {"degenerate_edge", {true, false, false, false, true}},
        {"cancellation_collider", {true, false, true, false, false}},
        {"cancellation_collider_alt", {true, false, true, false, false}},
        {"cancelling_chain", {true, false, true, false, false}},
        {"point_mass", {true, true, true, true, true}},
        {"uniform_pair", {true, true, true, true, true}},
    };
    for (const auto& f : fixture_library()) {
        CAPTURE(f.name);
        REQUIRE(expected.count(f.name) == 1);
        CHECK(classify(f.state.g, f.state.p) == expected.at(f.name));
        CHECK(classify(f.state.g, f.state.p) == classify(f.state.g, f.state.p));  // pure
    }

    const StateClass non_markov = classify(Dag::empty(2), correlated_pair());
    CHECK_FALSE(non_markov.markov);
    CHECK_FALSE(non_markov.faithful);
    CHECK_FALSE(non_markov.minimal);
    CHECK_FALSE(non_markov.u_minimal);
}

TEST_CASE("implication chain: faithful -> u-minimal -> minimal -> markov") {
    auto check_chain = [](const StateClass& c) {
        if (c.faithful) CHECK(c.u_minimal);
        if (c.u_minimal) CHECK(c.minimal);
        if (c.minimal) CHECK(c.markov);
        if (c.faithful) CHECK(c.quasi_faithful);
    };
    for (const auto& f : fixture_library()) check_chain(classify(f.state.g, f.state.p));
    for (int r = 0; r < 50; ++r) {
        const auto& cat = dag_catalog(3);
        const auto& g = cat.dags[static_cast<std::size_t>(r) % cat.dags.size()];
        const auto net = random_network(g, VariableSet::binary(3),
                                        derive_seed(0xC4A1, static_cast<std::uint64_t>(r)));
        check_chain(classify(g, joint_of(net)));
    }
}

TEST_CASE("every fixture distribution has a minimal graph explaining its own") {
    // minimal graphs always exist above the state's graph, which is what the
    // replay construction relies on
    for (const auto& f : fixture_library()) {
        const StatementSet ig = entailment_set(f.state.g);
        const auto& classes = equivalence_classes(f.state.g.node_count());
        bool covered = false;
        for (int id : minimal_class_ids(f.state.p))
            if (ig.subset_of(classes[static_cast<std::size_t>(id)].iset)) covered = true;
        CAPTURE(f.name);
        CHECK(covered);
    }
}

TEST_CASE("minimal class scan agrees with the witness scan") {
    for (const auto& f : fixture_library()) {
        const auto ids = minimal_class_ids(f.state.p);
        const auto& classes = equivalence_classes(f.state.g.node_count());
        const StatementSet ig = entailment_set(f.state.g);
        bool in_ids = false;
        for (int id : ids)
            if (classes[static_cast<std::size_t>(id)].iset == ig) in_ids = true;
        CHECK(in_ids == is_minimal(f.state.g, f.state.p));
    }
}

// At desk scale every single-pair statement is realized exactly by some
// class's entailment set; together with the closure laws every distribution
// satisfies (decomposition, weak union, contraction) and the composition
// property of graph separation, this forces u-minimal states to be faithful
// for k <= 4. The suite therefore carries no u-minimal unfaithful witness;
// this test pins the structural fact behind that absence.
TEST_CASE("single-pair statements are exactly realizable, so u-minimal implies faithful here") {
    for (int k : {3, 4}) {
        const auto& cat = dag_catalog(k);
        for (const auto& s : cat.universe) {
            if (mask_count(s.u()) != 1 || mask_count(s.v()) != 1) continue;
            bool exact = false;
            for (const auto& h : cat.classes)
                if (h.iset == StatementSet({s})) exact = true;
            CAPTURE(k);
            CAPTURE(s.str());
            CHECK(exact);
        }
    }
    for (const auto& f : fixture_library()) {
        const auto c = classify(f.state.g, f.state.p);
        if (c.u_minimal) CHECK(c.faithful);
    }
}
