#include "tom/io.hpp"

#include <algorithm>

namespace tom {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& pointer,
                       const std::string& message) {
  throw FormatError((source.empty() ? std::string("<input>") : source) + ":" +
                    (pointer.empty() ? "/" : pointer) + ": " + message);
}

std::size_t positive_int(const Json& j, const char* key, const std::string& source) {
  const std::string pointer = std::string("/") + key;
  if (!j.contains(key)) fail(source, pointer, "missing key");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(source, pointer, "expected a positive integer");
  }
  const auto value = v.get<long long>();
  if (value > static_cast<long long>(kMaxElements)) fail(source, pointer, "at most 64 supported");
  return static_cast<std::size_t>(value);
}

const Json& array_at(const Json& j, const char* key, const std::string& source) {
  const std::string pointer = std::string("/") + key;
  if (!j.is_object()) fail(source, "", "expected an object");
  if (!j.contains(key)) fail(source, pointer, "missing key");
  if (!j.at(key).is_array()) fail(source, pointer, "expected an array");
  return j.at(key);
}

TropicalType parse_type(const Json& j, std::size_t n, std::size_t d, const std::string& source,
                        const std::string& pointer) {
  if (!j.is_array()) fail(source, pointer, "expected an array of coordinate lists");
  if (n != 0 && j.size() != n) {
    fail(source, pointer, "expected " + std::to_string(n) + " coordinates, got " +
                              std::to_string(j.size()));
  }
  std::vector<std::vector<std::size_t>> lists;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = pointer + "/" + std::to_string(i);
    const Json& list = j[i];
    if (!list.is_array() || list.empty()) fail(source, at, "expected a nonempty list of elements");
    std::vector<std::size_t> coordinate;
    for (std::size_t t = 0; t < list.size(); ++t) {
      const Json& e = list[t];
      if (!e.is_number_integer() || e.get<long long>() < 1 ||
          (d != 0 && e.get<long long>() > static_cast<long long>(d)) ||
          e.get<long long>() > static_cast<long long>(kMaxElements)) {
        fail(source, at + "/" + std::to_string(t),
             "expected an element in [1," + std::to_string(d == 0 ? kMaxElements : d) + "]");
      }
      coordinate.push_back(e.get<std::size_t>());
    }
    std::sort(coordinate.begin(), coordinate.end());
    if (std::adjacent_find(coordinate.begin(), coordinate.end()) != coordinate.end()) {
      fail(source, at, "repeated element");
    }
    largest = std::max(largest, coordinate.back());
    lists.push_back(std::move(coordinate));
  }
  if (lists.empty()) fail(source, pointer, "a type needs at least one coordinate");
  return TropicalType::from_lists(d == 0 ? largest : d, lists);
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError((source.empty() ? std::string("<input>") : source) + ":" + e.what());
  }
}

Json type_to_json(const TropicalType& t) { return Json(t.to_lists()); }

TropicalType type_from_json(const Json& j, std::size_t d, const std::string& where) {
  return parse_type(j, 0, d, where, "");
}

Json to_json(const CellCollection& cells) {
  Json out;
  out["n"] = cells.n();
  out["d"] = cells.d();
  out["cells"] = Json::array();
  for (const auto& c : cells.cells()) out["cells"].push_back(type_to_json(c));
  return out;
}

Json to_json(const TypeSystem& system) {
  Json out;
  out["n"] = system.n();
  out["d"] = system.d();
  out["types"] = Json::array();
  for (const auto& t : system) out["types"].push_back(type_to_json(t));
  return out;
}

Json path_to_json(std::size_t n, std::size_t d, const TypePath& path) {
  Json out;
  out["n"] = n;
  out["d"] = d;
  out["types"] = Json::array();
  for (const auto& t : path) out["types"].push_back(type_to_json(t));
  return out;
}

Json to_json(const WeightMatrix& w) {
  Json out;
  out["n"] = w.n();
  out["d"] = w.d();
  out["weights"] = Json::array();
  for (const auto& row : w.rows()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    out["weights"].push_back(std::move(r));
  }
  return out;
}

CellCollection cells_from_json(const Json& j, const std::string& source) {
  const Json& cells = array_at(j, "cells", source);
  const std::size_t n = positive_int(j, "n", source);
  const std::size_t d = positive_int(j, "d", source);
  std::vector<TropicalType> parsed;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    parsed.push_back(parse_type(cells[c], n, d, source, "/cells/" + std::to_string(c)));
  }
  try {
    return CellCollection(n, d, std::move(parsed));
  } catch (const InvalidType& e) {
    fail(source, "/cells", e.what());
  }
}

TypeSystem types_from_json(const Json& j, const std::string& source) {
  const Json& types = array_at(j, "types", source);
  const std::size_t n = positive_int(j, "n", source);
  const std::size_t d = positive_int(j, "d", source);
  std::vector<TropicalType> parsed;
  for (std::size_t t = 0; t < types.size(); ++t) {
    parsed.push_back(parse_type(types[t], n, d, source, "/types/" + std::to_string(t)));
  }
  return TypeSystem(n, d, std::move(parsed));
}

WeightMatrix weights_from_json(const Json& j, const std::string& source) {
  const Json& rows = array_at(j, "weights", source);
  const std::size_t n = positive_int(j, "n", source);
  const std::size_t d = positive_int(j, "d", source);
  if (rows.size() != n) fail(source, "/weights", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Rational>> parsed;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = "/weights/" + std::to_string(i);
    if (!rows[i].is_array() || rows[i].size() != d) {
      fail(source, at, "expected a row of " + std::to_string(d) + " entries");
    }
    std::vector<Rational> row;
    for (std::size_t k = 0; k < d; ++k) {
      const Json& e = rows[i][k];
      try {
        if (e.is_number_integer()) {
          row.emplace_back(e.get<long long>());
        } else if (e.is_string()) {
          row.push_back(parse_rational(e.get<std::string>()));
        } else {
          fail(source, at + "/" + std::to_string(k), "expected a rational string like \"3/4\"");
        }
      } catch (const MalformedRational& err) {
        fail(source, at + "/" + std::to_string(k), err.what());
      }
    }
    parsed.push_back(std::move(row));
  }
  return WeightMatrix(std::move(parsed));
}

TypesOrCells types_or_cells_from_json(const Json& j, const std::string& source) {
  if (j.is_object() && j.contains("cells")) return cells_from_json(j, source);
  if (j.is_object() && j.contains("types")) return types_from_json(j, source);
  fail(source, "", "expected a subdivision file (\"cells\") or a types file (\"types\")");
}

}  // namespace tom
