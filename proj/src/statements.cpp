#include "minlab/statements.hpp"

#include <algorithm>
#include <stdexcept>

namespace minlab {

CiStatement::CiStatement(VarMask u, VarMask v, VarMask w) : u_(u), v_(v), w_(w) {
    if (!u_ || !v_) throw std::invalid_argument("u and v must be nonempty");
    if ((u_ & v_) || (u_ & w_) || (v_ & w_))
        throw std::invalid_argument("u, v, w must be pairwise disjoint");
    // symmetric in u and v; the side holding the smallest index goes first,
    // which orders the sorted index lists lexicographically
    if (mask_contains(v_, mask_lowest(u_ | v_))) std::swap(u_, v_);
}

CiStatement CiStatement::of(const std::vector<int>& u, const std::vector<int>& v,
                            const std::vector<int>& w) {
    return CiStatement(mask_from_indices(u), mask_from_indices(v), mask_from_indices(w));
}

namespace {
std::string mask_str(VarMask m) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_indices(m)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}
}  // namespace

std::string CiStatement::str() const {
    return mask_str(u_) + " _||_ " + mask_str(v_) + " | " + mask_str(w_);
}

StatementSet::StatementSet(std::vector<CiStatement> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StatementSet::contains(const CiStatement& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool StatementSet::subset_of(const StatementSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

StatementSet StatementSet::unioned(const StatementSet& other) const {
    std::vector<CiStatement> merged = members_;
    merged.insert(merged.end(), other.members_.begin(), other.members_.end());
    return StatementSet(std::move(merged));
}

std::vector<CiStatement> statement_universe(int k) {
    if (k < 1 || k > 15) throw std::invalid_argument("variable count out of range");
    std::vector<CiStatement> out;
    // each variable takes one of four roles: none, U, V, W
    std::vector<int> role(static_cast<std::size_t>(k), 0);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (int i = 0; i < k; ++i) t *= 4;
        return t;
    }();
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        VarMask u = 0, v = 0, w = 0;
        for (int i = 0; i < k; ++i) {
            switch (c & 3) {
                case 1: u |= mask_bit(i); break;
                case 2: v |= mask_bit(i); break;
                case 3: w |= mask_bit(i); break;
                default: break;
            }
            c >>= 2;
        }
        if (!u || !v) continue;
        if (mask_contains(v, mask_lowest(u | v))) continue;  // u/v swap double-counts
        out.emplace_back(u, v, w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace minlab
