#pragma once

#include <vector>

#include "bitset.hpp"
#include "universe.hpp"

namespace relmat {

/// Duplicate-free family of subsets of one universe, kept sorted in numeric
/// bit-vector order. Immutable after construction.
class SetFamily {
public:
    explicit SetFamily(Universe u) : universe_(std::move(u)) {}
    SetFamily(Universe u, std::vector<Bitset> members);

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const Bitset& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Bitset>& members() const { return members_; }

    bool contains(const Bitset& s) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SetFamily& o) const {
        return universe_.size() == o.universe_.size() && members_ == o.members_;
    }
    bool operator!=(const SetFamily& o) const { return !(*this == o); }

private:
    Universe universe_;
    std::vector<Bitset> members_;
};

}  // namespace relmat
