#include "format.hpp"

#include <algorithm>

namespace relmat {

namespace {

std::vector<std::string> sorted_labels(const Universe& u, const Bitset& s) {
    std::vector<std::string> labels;
    labels.reserve(s.count());
    s.for_each([&](std::size_t i) { labels.push_back(u.label(i)); });
    std::sort(labels.begin(), labels.end());
    return labels;
}

}  // namespace

ordered_json set_to_json(const Universe& u, const Bitset& s) {
    return ordered_json(sorted_labels(u, s));
}

ordered_json family_to_json(const Universe& u, const SetFamily& f) {
    std::vector<std::vector<std::string>> sets;
    sets.reserve(f.size());
    for (const auto& m : f) sets.push_back(sorted_labels(u, m));
    std::sort(sets.begin(), sets.end());
    return ordered_json(sets);
}

ordered_json pairs_to_json(const Relation& r) {
    std::vector<std::vector<std::string>> pairs;
    for (const auto& [x, y] : r.pairs())
        pairs.push_back({r.universe().label(x), r.universe().label(y)});
    std::sort(pairs.begin(), pairs.end());
    return ordered_json(pairs);
}

std::string set_to_text(const Universe& u, const Bitset& s) {
    if (s.none()) return "∅";
    std::string out = "{";
    bool first = true;
    for (const auto& label : sorted_labels(u, s)) {
        if (!first) out += ", ";
        out += label;
        first = false;
    }
    return out + "}";
}

std::string family_to_text(const Universe& u, const SetFamily& f) {
    // Order members by cardinality, then lexicographically by labels.
    std::vector<std::vector<std::string>> sets;
    sets.reserve(f.size());
    for (const auto& m : f) sets.push_back(sorted_labels(u, m));
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::string out = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i > 0) out += ", ";
        if (sets[i].empty()) {
            out += "∅";
            continue;
        }
        out += "{";
        for (std::size_t j = 0; j < sets[i].size(); ++j) {
            if (j > 0) out += ", ";
            out += sets[i][j];
        }
        out += "}";
    }
    return out + "}";
}

}  // namespace relmat
