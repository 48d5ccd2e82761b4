#include "universe.hpp"

#include <unordered_set>

#include "errors.hpp"

namespace relmat {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Universe::Universe(std::size_t n) : Universe(default_labels(n)) {}

Universe::Universe(std::vector<std::string> labels) {
    if (labels.empty()) throw InvalidArgument("universe must contain at least one element");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second)
            throw InvalidArgument("duplicate universe label \"" + l + "\"");
    }
    data_ = std::make_shared<const Data>(Data{std::move(labels)});
}

const std::string& Universe::label(std::size_t i) const {
    if (i >= size())
        throw DomainError("element " + std::to_string(i) + " outside universe of size " +
                          std::to_string(size()));
    return data_->labels[i];
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
    const auto& labels = data_->labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

}  // namespace relmat
