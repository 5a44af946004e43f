#include "minlab/fixtures.hpp"

#include <stdexcept>

namespace minlab {

namespace {

Fixture from_net(std::string name, std::string description, CptNetwork net) {
    CausalState state{net.g, joint_of(net)};
    return Fixture{std::move(name), std::move(description), std::move(state), std::move(net)};
}

std::vector<Fixture> build_library() {
    std::vector<Fixture> out;

    {
        // strong generic edges; faithful, hence u-minimal
        Dag g = Dag::chain(3);
        CptNetwork net(g, VariableSet::binary(3),
                       {{0.65, 0.35},
                        {0.2, 0.8, 0.85, 0.15},
                        {0.3, 0.7, 0.9, 0.1}});
        out.push_back(from_net("generic_chain", "binary chain 0->1->2 with generic parameters",
                               std::move(net)));
    }
    {
        Dag g(3, {{0, 2}, {1, 2}});
        CptNetwork net(g, VariableSet::binary(3),
                       {{0.6, 0.4},
                        {0.3, 0.7},
                        {0.1, 0.9, 0.4, 0.6, 0.7, 0.3, 0.95, 0.05}});
        out.push_back(from_net("generic_collider", "binary collider 0->2<-1 with generic parameters",
                               std::move(net)));
    }
    {
        // identical CPT rows make the edge vacuous: X0 _||_ X1 although the
        // graph draws an arrow. Not minimal (the empty graph fits better).
        Dag g(2, {{0, 1}});
        CptNetwork net(g, VariableSet::binary(2), {{0.7, 0.3}, {0.4, 0.6, 0.4, 0.6}});
        out.push_back(from_net("degenerate_edge",
                               "edge 0->1 whose CPT rows coincide; non-minimal", std::move(net)));
    }
    {
        // X2 = X0 xor X1 with 0.1 flip noise over fair inputs: all three
        // pairs are marginally independent, nothing else holds. Minimal but
        // unfaithful, and two rival colliders are minimal to the same
        // distribution, so not u-minimal. The distribution matches no
        // graph's entailment set, so it is not quasi-faithful either.
        Dag g(3, {{0, 2}, {1, 2}});
        CptNetwork net(g, VariableSet::binary(3),
                       {{0.5, 0.5},
                        {0.5, 0.5},
                        {0.9, 0.1, 0.1, 0.9, 0.1, 0.9, 0.9, 0.1}});
        out.push_back(from_net("cancellation_collider",
                               "noisy-xor collider 0->2<-1; minimal, unfaithful, ambiguous",
                               std::move(net)));
    }
    {
        // the same joint distribution factorized along the rival collider
        // 0->1<-2; pairs with cancellation_collider for order-flip runs
        Dag g(3, {{0, 1}, {2, 1}});
        CptNetwork net(g, VariableSet::binary(3),
                       {{0.5, 0.5},
                        {0.9, 0.1, 0.1, 0.9, 0.1, 0.9, 0.9, 0.1},
                        {0.5, 0.5}});
        out.push_back(from_net("cancellation_collider_alt",
                               "noisy-xor collider 0->1<-2 over the same distribution",
                               std::move(net)));
    }
    {
        // ternary middle variable whose effect rows are tied exactly where
        // the parent contrast lives, cancelling the 0-2 dependence: X0 and
        // X2 are independent both marginally and given X1, nothing else.
        Dag g = Dag::chain(3);
        CptNetwork net(g, VariableSet::with_cards({2, 3, 2}),
                       {{0.55, 0.45},
                        {0.5, 0.3, 0.2, 0.3, 0.5, 0.2},
                        {0.4, 0.6, 0.4, 0.6, 0.9, 0.1}});
        out.push_back(from_net("cancelling_chain",
                               "chain 0->1->2 with a ternary middle and cancelled end-to-end effect",
                               std::move(net)));
    }
    {
        Dag g = Dag::empty(2);
        CptNetwork net(g, VariableSet::binary(2), {{1.0, 0.0}, {1.0, 0.0}});
        out.push_back(
            from_net("point_mass", "all mass on one cell of an independent pair", std::move(net)));
    }
    {
        Dag g = Dag::empty(2);
        CptNetwork net(g, VariableSet::binary(2), {{0.5, 0.5}, {0.5, 0.5}});
        out.push_back(from_net("uniform_pair", "two fair independent bits", std::move(net)));
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& fixture_library() {
    static const std::vector<Fixture> library = build_library();
    return library;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixture_library())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace minlab
