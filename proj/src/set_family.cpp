#include "set_family.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace relmat {

SetFamily::SetFamily(Universe u, std::vector<Bitset> members)
    : universe_(std::move(u)), members_(std::move(members)) {
    for (const auto& m : members_) {
        if (m.size() != universe_.size())
            throw DomainError("family member width " + std::to_string(m.size()) +
                              " does not match universe size " + std::to_string(universe_.size()));
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Bitset& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

}  // namespace relmat
