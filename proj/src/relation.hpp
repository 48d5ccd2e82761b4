#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "set_family.hpp"
#include "universe.hpp"

namespace relmat {

/// Binary relation on a finite universe, stored as one successor row per
/// element: row x holds {y : x R y}. Immutable after construction.
class Relation {
public:
    /// Builds the relation from (x, y) index pairs; duplicates are ignored,
    /// out-of-universe indices rejected.
    Relation(Universe u, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    /// Adopts prebuilt successor rows (one per element, width n).
    Relation(Universe u, std::vector<Bitset> rows);

    static Relation identity(const Universe& u);
    static Relation full(const Universe& u);

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return rows_.size(); }

    bool contains(std::size_t x, std::size_t y) const;

    /// RS(x) = {y : x R y}.
    const Bitset& successors(std::size_t x) const;
    /// RP(x) = {y : y R x}. Computed by a column scan.
    Bitset predecessors(std::size_t x) const;

    Relation inverse() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const;

    /// The partition U/R. Precondition: is_equivalence(); the error names the
    /// first property that fails.
    SetFamily equivalence_classes() const;

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    std::size_t pair_count() const;

    bool is_subrelation_of(const Relation& o) const;

    /// Adjacency equality; universes must have the same size.
    bool operator==(const Relation& o) const;
    bool operator!=(const Relation& o) const { return !(*this == o); }

private:
    Universe universe_;
    std::vector<Bitset> rows_;

    void check_element(std::size_t x) const;
};

}  // namespace relmat
