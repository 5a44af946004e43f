#include "minlab/sampling.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "minlab/rng.hpp"

namespace minlab {

Sample draw(const JointTable& p, std::size_t n, std::uint64_t seed) {
    std::vector<double> cdf(p.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        acc += p.probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    Rng rng(seed);
    Sample s{p.vars, {}};
    s.cells.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        std::size_t cell = 0;
        while (cdf[cell] <= u) ++cell;
        s.cells.push_back(static_cast<std::uint32_t>(cell));
    }
    return s;
}

JointTable empirical(const Sample& s) {
    if (s.cells.empty()) throw std::invalid_argument("empirical table of an empty sample");
    std::vector<double> counts(s.vars.cell_count(), 0.0);
    for (auto cell : s.cells) {
        if (cell >= counts.size()) throw std::invalid_argument("sample cell out of range");
        counts[cell] += 1.0;
    }
    const double n = static_cast<double>(s.cells.size());
    for (auto& c : counts) c /= n;
    return JointTable(s.vars, std::move(counts));
}

void write_csv(const Sample& s, std::ostream& out) {
    for (int i = 0; i < s.vars.size(); ++i) {
        if (i) out << ',';
        out << s.vars.names()[static_cast<std::size_t>(i)];
    }
    out << '\n';
    for (std::size_t r = 0; r < s.size(); ++r) {
        const auto row = s.row(r);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
}

void write_csv(const Sample& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(s, out);
}

Sample read_csv(std::istream& in, const std::vector<int>* cards) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV: missing header");
    std::vector<std::string> names;
    {
        std::stringstream header(line);
        std::string field;
        while (std::getline(header, field, ',')) names.push_back(field);
    }
    if (names.empty()) throw std::invalid_argument("CSV header has no columns");

    std::vector<std::vector<int>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<int> row;
        while (std::getline(ss, field, ',')) {
            try {
                row.push_back(std::stoi(field));
            } catch (const std::exception&) {
                throw std::invalid_argument("CSV line " + std::to_string(lineno) +
                                            ": not an integer: " + field);
            }
        }
        if (row.size() != names.size())
            throw std::invalid_argument("CSV line " + std::to_string(lineno) +
                                        ": wrong column count");
        rows.push_back(std::move(row));
    }

    std::vector<int> resolved;
    if (cards) {
        if (cards->size() != names.size())
            throw std::invalid_argument("cardinalities do not match the CSV column count");
        resolved = *cards;
    } else {
        resolved.assign(names.size(), 2);
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i] + 1 > resolved[i]) resolved[i] = row[i] + 1;
    }

    VariableSet vars(std::move(names), std::move(resolved));
    Sample s{vars, {}};
    s.cells.reserve(rows.size());
    for (const auto& row : rows) s.cells.push_back(static_cast<std::uint32_t>(vars.index_of(row)));
    return s;
}

Sample read_csv(const std::string& path, const std::vector<int>* cards) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_csv(in, cards);
}

}  // namespace minlab
