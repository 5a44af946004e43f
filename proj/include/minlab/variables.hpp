#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace minlab {

// Bitmask over variable indices. Desk scale keeps K small, so 32 bits is ample.
using VarMask = std::uint32_t;

inline VarMask mask_bit(int i) { return VarMask{1} << i; }
inline bool mask_contains(VarMask m, int i) { return (m >> i) & 1u; }
inline int mask_count(VarMask m) { return __builtin_popcount(m); }
inline int mask_lowest(VarMask m) { return __builtin_ctz(m); }

std::vector<int> mask_indices(VarMask m);
VarMask mask_from_indices(const std::vector<int>& indices);

// An ordered set of named categorical variables. Assignments are indexed in
// mixed radix with the last variable fastest (row-major).
class VariableSet {
public:
    VariableSet(std::vector<std::string> names, std::vector<int> cards);

    // default names X0..X{k-1}
    static VariableSet with_cards(std::vector<int> cards);
    static VariableSet binary(int k);

    int size() const { return static_cast<int>(cards_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& cards() const { return cards_; }
    int card(int i) const { return cards_[static_cast<std::size_t>(i)]; }

    std::size_t cell_count() const { return cell_count_; }
    VarMask full_mask() const { return (VarMask{1} << size()) - 1; }

    std::size_t index_of(const std::vector<int>& assignment) const;
    std::vector<int> decode(std::size_t index) const;

    bool operator==(const VariableSet& other) const { return cards_ == other.cards_; }

private:
    std::vector<std::string> names_;
    std::vector<int> cards_;
    std::size_t cell_count_;
};

}  // namespace minlab
