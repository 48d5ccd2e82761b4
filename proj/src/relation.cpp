#include "relation.hpp"

#include <string>

#include "errors.hpp"

namespace relmat {

Relation::Relation(Universe u, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : universe_(std::move(u)), rows_(universe_.size(), Bitset(universe_.size())) {
    const std::size_t n = universe_.size();
    for (const auto& [x, y] : pairs) {
        if (x >= n || y >= n)
            throw DomainError("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") outside universe of size " + std::to_string(n));
        rows_[x].set(y);
    }
}

Relation::Relation(Universe u, std::vector<Bitset> rows)
    : universe_(std::move(u)), rows_(std::move(rows)) {
    if (rows_.size() != universe_.size())
        throw DomainError("expected " + std::to_string(universe_.size()) + " successor rows, got " +
                          std::to_string(rows_.size()));
    for (const auto& row : rows_) {
        if (row.size() != universe_.size())
            throw DomainError("successor row width does not match universe size");
    }
}

Relation Relation::identity(const Universe& u) {
    std::vector<Bitset> rows(u.size(), Bitset(u.size()));
    for (std::size_t x = 0; x < u.size(); ++x) rows[x].set(x);
    return Relation(u, std::move(rows));
}

Relation Relation::full(const Universe& u) {
    std::vector<Bitset> rows(u.size(), Bitset::full(u.size()));
    return Relation(u, std::move(rows));
}

void Relation::check_element(std::size_t x) const {
    if (x >= rows_.size())
        throw DomainError("element " + std::to_string(x) + " outside universe of size " +
                          std::to_string(rows_.size()));
}

bool Relation::contains(std::size_t x, std::size_t y) const {
    check_element(x);
    return rows_[x].test(y);
}

const Bitset& Relation::successors(std::size_t x) const {
    check_element(x);
    return rows_[x];
}

Bitset Relation::predecessors(std::size_t x) const {
    check_element(x);
    Bitset col(rows_.size());
    for (std::size_t y = 0; y < rows_.size(); ++y)
        if (rows_[y].test(x)) col.set(y);
    return col;
}

Relation Relation::inverse() const {
    const std::size_t n = rows_.size();
    std::vector<Bitset> cols(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        rows_[x].for_each([&](std::size_t y) { cols[y].set(x); });
    return Relation(universe_, std::move(cols));
}

bool Relation::is_reflexive() const {
    for (std::size_t x = 0; x < rows_.size(); ++x)
        if (!rows_[x].test(x)) return false;
    return true;
}

bool Relation::is_symmetric() const {
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        bool ok = true;
        rows_[x].for_each([&](std::size_t y) { ok = ok && rows_[y].test(x); });
        if (!ok) return false;
    }
    return true;
}

bool Relation::is_transitive() const {
    // x R y implies RS(y) subset of RS(x).
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        bool ok = true;
        rows_[x].for_each([&](std::size_t y) { ok = ok && rows_[y].is_subset_of(rows_[x]); });
        if (!ok) return false;
    }
    return true;
}

bool Relation::is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
}

SetFamily Relation::equivalence_classes() const {
    if (!is_reflexive())
        throw PreconditionError("relation is not an equivalence relation: not reflexive");
    if (!is_symmetric())
        throw PreconditionError("relation is not an equivalence relation: not symmetric");
    if (!is_transitive())
        throw PreconditionError("relation is not an equivalence relation: not transitive");
    // For an equivalence relation the class of x is exactly RS(x).
    return SetFamily(universe_, rows_);
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < rows_.size(); ++x)
        rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.count();
    return total;
}

bool Relation::is_subrelation_of(const Relation& o) const {
    if (rows_.size() != o.rows_.size())
        throw DomainError("relations live on universes of different sizes");
    for (std::size_t x = 0; x < rows_.size(); ++x)
        if (!rows_[x].is_subset_of(o.rows_[x])) return false;
    return true;
}

bool Relation::operator==(const Relation& o) const {
    return rows_.size() == o.rows_.size() && rows_ == o.rows_;
}

}  // namespace relmat
