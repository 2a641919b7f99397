#pragma once

#include "ribbons/cone.hpp"
#include "ribbons/composition.hpp"
#include "ribbons/qsym.hpp"
#include "ribbons/sym.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace ribbons {

using Json = nlohmann::ordered_json;

// {"4,3,3,2": 1, ...}, keys descending lex.
Json to_json(const PartitionMultiset& m);

// {"basis": "F", "n": 4, "terms": {"2,2": "1", "1,2,1": "1"}}; composition
// keys ascending lex, rationals as strings.
Json to_json(const QsymExpr& e);
QsymExpr qsym_from_json(const Json& j);

// {"basis": "h", "terms": {"2,2,1": "-1", ...}}, partition keys descending lex.
Json to_json(const SymHExpr& e);

// Partition-keyed rational map (Schur expansions), keys descending lex.
Json schur_map_to_json(const std::map<Partition, Rat, PartitionOrder>& m);

// {"n": 5, "weights": {"": "1", "1,3": "2"}}; the empty key is the empty
// subset and keys list elements ascending.
Json to_json(const Multicollection& mc);
Multicollection multicollection_from_json(const Json& j);

Json to_json(const ConeRay& ray);

std::string dump(const Json& j); // 2-space indent plus trailing newline

} // namespace ribbons
