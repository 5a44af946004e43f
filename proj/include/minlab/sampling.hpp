#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minlab/joint.hpp"
#include "minlab/variables.hpp"

namespace minlab {

// IID observations stored as encoded cell indices; one entry per row.
struct Sample {
    VariableSet vars;
    std::vector<std::uint32_t> cells;

    std::size_t size() const { return cells.size(); }
    std::vector<int> row(std::size_t i) const { return vars.decode(cells[i]); }
};

// n IID draws by inverse CDF over the table cells; deterministic given seed.
Sample draw(const JointTable& p, std::size_t n, std::uint64_t seed);

// Cell frequencies of a nonempty sample.
JointTable empirical(const Sample& s);

// CSV with a header of variable names and one row per observation.
void write_csv(const Sample& s, std::ostream& out);
void write_csv(const Sample& s, const std::string& path);

// Cardinalities are taken from `cards` when given, otherwise inferred as
// max observed value + 1 per column (with a floor of 2).
Sample read_csv(std::istream& in, const std::vector<int>* cards = nullptr);
Sample read_csv(const std::string& path, const std::vector<int>* cards = nullptr);

}  // namespace minlab
