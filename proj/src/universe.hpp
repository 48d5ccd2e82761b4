#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relmat {

/// Ordered finite ground set. Elements are the dense indices 0..n-1; labels
/// are presentation-only and default to "0".."n-1". Copies share storage.
class Universe {
public:
    explicit Universe(std::size_t n);
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    const std::string& label(std::size_t i) const;
    std::optional<std::size_t> find(std::string_view label) const;

    const std::vector<std::string>& labels() const { return data_->labels; }

    bool operator==(const Universe& o) const {
        return data_ == o.data_ || data_->labels == o.data_->labels;
    }
    bool operator!=(const Universe& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<std::string> labels;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace relmat
