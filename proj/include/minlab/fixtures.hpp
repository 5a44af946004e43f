#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minlab/joint.hpp"

namespace minlab {

// Named canonical causal states. The interesting ones cannot be produced by
// random parameterization (unfaithful and non-minimal states form a
// measure-zero set), so they are built by exact parameter cancellation.
struct Fixture {
    std::string name;
    std::string description;
    CausalState state;
    std::optional<CptNetwork> net;  // generating network, when there is one
};

const std::vector<Fixture>& fixture_library();

// Throws std::invalid_argument for unknown names.
const Fixture& fixture(const std::string& name);

}  // namespace minlab
