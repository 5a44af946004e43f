#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "minlab/variables.hpp"

namespace minlab {

// A conditional-independence claim U _||_ V | W over disjoint index sets,
// U and V nonempty. The claim is symmetric in U and V, so construction
// canonicalizes: the side containing the smallest index is stored as u.
class CiStatement {
public:
    CiStatement(VarMask u, VarMask v, VarMask w);

    static CiStatement of(const std::vector<int>& u, const std::vector<int>& v,
                          const std::vector<int>& w);

    VarMask u() const { return u_; }
    VarMask v() const { return v_; }
    VarMask w() const { return w_; }
    VarMask scope() const { return u_ | v_ | w_; }

    std::vector<int> u_indices() const { return mask_indices(u_); }
    std::vector<int> v_indices() const { return mask_indices(v_); }
    std::vector<int> w_indices() const { return mask_indices(w_); }

    // e.g. "{0} _||_ {2} | {1}"
    std::string str() const;

    auto operator<=>(const CiStatement& other) const = default;

private:
    VarMask u_, v_, w_;
};

// Set of canonical statements kept sorted and unique; value-semantic.
class StatementSet {
public:
    StatementSet() = default;
    explicit StatementSet(std::vector<CiStatement> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const CiStatement& s) const;
    bool subset_of(const StatementSet& other) const;
    bool strict_subset_of(const StatementSet& other) const {
        return size() < other.size() && subset_of(other);
    }

    const std::vector<CiStatement>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    StatementSet unioned(const StatementSet& other) const;

    auto operator<=>(const StatementSet& other) const = default;

private:
    std::vector<CiStatement> members_;
};

// Every canonical statement over k variables: U, V nonempty and disjoint,
// W any subset of the remainder. Deterministic order.
std::vector<CiStatement> statement_universe(int k);

}  // namespace minlab
