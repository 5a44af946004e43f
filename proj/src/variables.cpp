#include "minlab/variables.hpp"

#include <stdexcept>
#include <unordered_set>

namespace minlab {

std::vector<int> mask_indices(VarMask m) {
    std::vector<int> out;
    for (VarMask rest = m; rest; rest &= rest - 1) out.push_back(mask_lowest(rest));
    return out;
}

VarMask mask_from_indices(const std::vector<int>& indices) {
    VarMask m = 0;
    for (int i : indices) {
        if (i < 0 || i >= 32) throw std::invalid_argument("variable index out of range");
        m |= mask_bit(i);
    }
    return m;
}

VariableSet::VariableSet(std::vector<std::string> names, std::vector<int> cards)
    : names_(std::move(names)), cards_(std::move(cards)) {
    if (cards_.empty()) throw std::invalid_argument("variable set must be nonempty");
    if (names_.size() != cards_.size())
        throw std::invalid_argument("names and cardinalities differ in length");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    cell_count_ = 1;
    for (int c : cards_) {
        if (c < 2) throw std::invalid_argument("every cardinality must be >= 2");
        cell_count_ *= static_cast<std::size_t>(c);
    }
}

VariableSet VariableSet::with_cards(std::vector<int> cards) {
    std::vector<std::string> names;
    names.reserve(cards.size());
    for (std::size_t i = 0; i < cards.size(); ++i) names.push_back("X" + std::to_string(i));
    return VariableSet(std::move(names), std::move(cards));
}

VariableSet VariableSet::binary(int k) {
    return with_cards(std::vector<int>(static_cast<std::size_t>(k), 2));
}

std::size_t VariableSet::index_of(const std::vector<int>& assignment) const {
    if (assignment.size() != cards_.size())
        throw std::invalid_argument("assignment length mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < cards_.size(); ++i) {
        const int v = assignment[i];
        if (v < 0 || v >= cards_[i]) throw std::invalid_argument("assignment value out of range");
        idx = idx * static_cast<std::size_t>(cards_[i]) + static_cast<std::size_t>(v);
    }
    return idx;
}

std::vector<int> VariableSet::decode(std::size_t index) const {
    std::vector<int> out(cards_.size());
    for (std::size_t i = cards_.size(); i-- > 0;) {
        const auto c = static_cast<std::size_t>(cards_[i]);
        out[i] = static_cast<int>(index % c);
        index /= c;
    }
    return out;
}

}  // namespace minlab
