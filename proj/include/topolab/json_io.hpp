#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "topolab/core.hpp"
#include "topolab/enumeration.hpp"
#include "topolab/topgroups.hpp"

namespace topolab {

// {"n": k, "opens": [[...], ...]} or {"n": k, "min_nbhds": [[...], ...]}.
// Throws ParseError for malformed documents and NotATopology for families
// that are not topologies.
FiniteSpace space_from_json(const nlohmann::json& j);
FiniteSpace space_from_text(std::string_view text);
// Emits the min_nbhds form.
nlohmann::json space_to_json(const FiniteSpace& s);

nlohmann::json set_to_json(PointSet a);
// Open sets as point lists, sorted lexicographically.
nlohmann::json opens_to_json(const FiniteSpace& s);
nlohmann::json report_to_json(const FiniteSpace& s, const SpaceReport& r);
nlohmann::json verify_report_to_json(const VerifyReport& r, bool include_elapsed = true);
nlohmann::json search_to_json(SearchPredicate p, int n, const std::optional<SearchWitness>& w);

// {"n": k, "mul": [[...]], "e": i}
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

// "0,2,3" over a ground set of n points; "" and "{}" are the empty set.
// Throws ParseError.
PointSet parse_point_list(std::string_view text, int n);

}  // namespace topolab
