#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylalt/bas.hpp"
#include "weylalt/enumeration.hpp"
#include "weylalt/typea.hpp"

namespace weylalt {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers, other rationals as "p/q" strings.
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

/// { root_system, lambda, mu, size, elements: [words], right_cover_edges: [[w, w]] }
Json to_json(const RootSystem& rs, const AlternationSet& set);
/// Rebuilds the set from its words. Throws std::invalid_argument when the
/// document names another root system or is malformed.
AlternationSet alternation_set_from_json(const RootSystem& rs, const Json& j);

/// { root_system, lambda, mu, members: [words], dependence_edges: [[w, w]] }
Json to_json(const RootSystem& rs, const BasSet& bas);
Json to_json(const Report& report);
Json to_json(const PowerSeries& series);

/// Canonical text form used for files and round trips: two-space indent and a
/// trailing newline.
std::string dump(const Json& j);

/// Right weak order covers of an alternation set, edges from lower to upper.
std::string hasse_dot(const AlternationSet& set, const std::string& name = "alternation_set");
/// Covers among arbitrary elements in the right or left weak order.
std::string hasse_dot(const RootSystem& rs, const ElementSet& elements, bool left_order,
                      const std::string& name = "weak_order");
/// Undirected graph on BAS members with edges between dependent pairs.
std::string dependence_dot(const BasSet& bas, const std::string& name = "dependence");

/// Header "r,i,j,count,formula_value,match".
std::string counts_csv(const std::vector<CountRow>& rows);

std::string alternation_set_text(const AlternationSet& set);
/// Members grouped by length, one row per length.
std::string bas_text(const BasSet& bas);
/// One row per shape with its words.
std::string catalog_text(const std::vector<CatalogEntry>& entries);

}  // namespace weylalt
