#pragma once

// JSON file formats, all 1-based:
//   subdivision  {"n": N, "d": D, "cells": [[[1,2],[2]], ...]}
//   types        {"n": N, "d": D, "types": [[[1],[2]], ...]}
//   weights      {"n": N, "d": D, "weights": [["0","1/2"], ...]}

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "tom/geometry.hpp"
#include "tom/paths.hpp"
#include "tom/subdivision.hpp"

namespace tom {

using Json = nlohmann::ordered_json;

// Malformed input; what() starts with the location (source:line:column for
// syntax errors, source:/json/pointer for schema errors).
class FormatError : public Error {
 public:
  using Error::Error;
};

Json parse_json(std::string_view text, const std::string& source);

Json type_to_json(const TropicalType& t);
// d == 0 infers d as the largest element mentioned.
TropicalType type_from_json(const Json& j, std::size_t d, const std::string& where = "");

Json to_json(const CellCollection& cells);
Json to_json(const TypeSystem& system);
Json path_to_json(std::size_t n, std::size_t d, const TypePath& path);
Json to_json(const WeightMatrix& w);

CellCollection cells_from_json(const Json& j, const std::string& source = "");
TypeSystem types_from_json(const Json& j, const std::string& source = "");
WeightMatrix weights_from_json(const Json& j, const std::string& source = "");

// A subdivision file or a types file, told apart by its "cells"/"types" key.
using TypesOrCells = std::variant<CellCollection, TypeSystem>;
TypesOrCells types_or_cells_from_json(const Json& j, const std::string& source = "");

}  // namespace tom
