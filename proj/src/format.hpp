#pragma once

#include <string>

#include <json.hpp>

#include "bitset.hpp"
#include "relation.hpp"
#include "set_family.hpp"
#include "universe.hpp"

namespace relmat {

using ordered_json = nlohmann::ordered_json;

/// JSON array of member labels, sorted by label.
ordered_json set_to_json(const Universe& u, const Bitset& s);

/// JSON array of sets, each sorted by label, family sorted lexicographically.
ordered_json family_to_json(const Universe& u, const SetFamily& f);

/// JSON array of [x, y] label pairs, sorted lexicographically.
ordered_json pairs_to_json(const Relation& r);

/// Human notation: "{1, 3}"; the empty set renders as "∅".
std::string set_to_text(const Universe& u, const Bitset& s);

/// Human notation: "{∅, {1}, {2, 3}}".
std::string family_to_text(const Universe& u, const SetFamily& f);

}  // namespace relmat
