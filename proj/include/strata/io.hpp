#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "strata/sum.hpp"
#include "strata/tournament.hpp"
#include "strata/tree.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

// Text notation:
//   codim 0   (abc12)
//   codim 1   D(ab|c12)               the side with a first
//   codim 2   (ab)-(c)-(12)           vertices along the path
//   otherwise {ab|c12, abc|12, ...}   one A|B per split, canonical order
// Labels inside a group are single characters unless some label has two
// digits, in which case the group is comma separated.
std::string to_text(const StableTree& tree);
// Accepts every form above. Throws ParseError, or the tree validation errors.
StableTree parse_tree_text(int n, std::string_view text);

// {"n": 2, "splits": [["c","1","2"], ["1","2"]]}
Json to_json(const StableTree& tree);
StableTree tree_from_json(const Json& j);

// {"n": .., "size": .., "total": .., "terms": [{"tree": .., "text": .., "mult": ..}]}
Json to_json(const StrataSum& sum);
StrataSum sum_from_json(const Json& j);

Json to_json(const TournamentResult& result);
TournamentResult tournament_from_json(const Json& j);

std::string to_dot(const StableTree& tree, std::string_view name = "T");
// One cluster per term, in canonical order.
std::string to_dot(const StrataSum& sum);

// Text listing: one "multiplicity  tree" line per term.
std::string to_text(const StrataSum& sum);

}  // namespace strata
