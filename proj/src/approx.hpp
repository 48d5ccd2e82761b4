#pragma once

#include "bitset.hpp"
#include "limits.hpp"
#include "relation.hpp"
#include "report.hpp"

namespace relmat {

/// L(X) = {u : RS(u) ⊆ X}.
Bitset lower_approx(const Relation& r, const Bitset& x);

/// H(X) = {u : RS(u) ∩ X ≠ ∅}.
Bitset upper_approx(const Relation& r, const Bitset& x);

/// Exhaustively verifies, over all subsets of the universe:
///   (1) H(∅) = ∅
///   (2) H(X ∪ Y) = H(X) ∪ H(Y)
///   (3) X ⊆ Y implies H(X) ⊆ H(Y)
/// Witnesses list every failing input, lowest numeric subset first.
PropertyReport check_h_properties(const Relation& r, std::size_t max_n = kMaxExhaustive);

/// The sixteen classical approximation laws (1L)–(8H) for L/H over an
/// equivalence relation, checked over all subsets (and all pairs where the
/// law quantifies over two). Precondition: the relation is an equivalence.
///
/// Note on naming: (5L)/(5H) are idempotence of L and H, (6L)/(6H) are
/// monotonicity (X ⊆ Y implies L(X) ⊆ L(Y), resp. H).
PropertyReport check_pawlak_properties(const Relation& r, std::size_t max_n = kMaxExhaustive);

}  // namespace relmat
