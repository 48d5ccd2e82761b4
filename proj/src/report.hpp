#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace relmat {

/// One named property with its verdict. A failed check carries every witness
/// found, in ascending scan order (lowest bit-vector value first).
struct PropertyCheck {
    std::string property;
    bool pass = true;
    std::vector<nlohmann::ordered_json> witnesses;

    void fail(nlohmann::ordered_json witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
};

/// Result of an exhaustive property suite.
class PropertyReport {
public:
    PropertyCheck& add(std::string property) {
        checks_.push_back(PropertyCheck{std::move(property)});
        return checks_.back();
    }

    const std::vector<PropertyCheck>& checks() const { return checks_; }

    const PropertyCheck* find(std::string_view property) const {
        for (const auto& c : checks_)
            if (c.property == property) return &c;
        return nullptr;
    }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    /// One entry per passing property, one entry per failure witness:
    /// {"property": ..., "pass": ..., "witness": {...} | null}.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& c : checks_) {
            if (c.pass) {
                out.push_back({{"property", c.property}, {"pass", true}, {"witness", nullptr}});
            } else {
                for (const auto& w : c.witnesses)
                    out.push_back({{"property", c.property}, {"pass", false}, {"witness", w}});
            }
        }
        return out;
    }

private:
    std::vector<PropertyCheck> checks_;
};

}  // namespace relmat
