#include "tom/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tom/transport.hpp"

namespace tom {

CellCollection::CellCollection(std::size_t n, std::size_t d, std::vector<TropicalType> cells)
    : n_(n), d_(d), cells_(std::move(cells)) {
  std::set<TropicalType> seen;
  for (const auto& c : cells_) {
    if (c.n() != n_ || c.d() != d_) {
      throw InvalidType("cell " + c.to_string() + " is not an (" + std::to_string(n_) + "," +
                        std::to_string(d_) + ")-type");
    }
    if (!seen.insert(c).second) throw InvalidType("duplicate cell " + c.to_string());
  }
}

CellCollection CellCollection::transposed() const {
  std::vector<TropicalType> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(dual(c));
  return CellCollection(d_, n_, std::move(out));
}

bool CellCollection::same_cells(const CellCollection& other) const {
  if (n_ != other.n_ || d_ != other.d_ || cells_.size() != other.cells_.size()) return false;
  auto a = cells_;
  auto b = other.cells_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

TypeSystem::TypeSystem(std::size_t n, std::size_t d, std::vector<TropicalType> types,
                       std::vector<std::size_t> provenance)
    : n_(n), d_(d) {
  if (!provenance.empty() && provenance.size() != types.size()) {
    throw ShapeMismatch("provenance length differs from the number of types");
  }
  std::vector<std::size_t> order(types.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return types[a] < types[b]; });
  for (std::size_t t : order) {
    if (types[t].n() != n_ || types[t].d() != d_) {
      throw InvalidType("type " + types[t].to_string() + " is not an (" + std::to_string(n_) +
                        "," + std::to_string(d_) + ")-type");
    }
    if (!types_.empty() && types_.back() == types[t]) continue;
    types_.push_back(types[t]);
    provenance_.push_back(provenance.empty() ? kNoCell : provenance[t]);
  }
  index_.reserve(types_.size());
  for (std::size_t t = 0; t < types_.size(); ++t) index_.emplace(types_[t], t);
}

std::optional<std::size_t> TypeSystem::index_of(const TropicalType& t) const {
  const auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TypeSystem TypeSystem::without(const TropicalType& t) const {
  std::vector<TropicalType> types;
  std::vector<std::size_t> prov;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i] == t) continue;
    types.push_back(types_[i]);
    prov.push_back(provenance_[i]);
  }
  return TypeSystem(n_, d_, std::move(types), std::move(prov));
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << "spanning trees: " << (spanning_trees_ok() ? "ok" : "FAIL") << " ("
      << non_trees.size() << " violations); facets: " << (facets_ok() ? "ok" : "FAIL") << " ("
      << dangling_facets.size() << " violations); overlaps: " << (overlaps_ok() ? "ok" : "FAIL")
      << " (" << overlap_cycles.size() << " violations)";
  return out.str();
}

namespace {

bool is_connected_spanning(const TropicalType& t) {
  const std::size_t n = t.n();
  const std::size_t total = n + t.d();
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    };
    if (v < n) {
      for (std::size_t j : elements_of(t[v])) visit(n + j);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (t.has_edge(i, v - n)) visit(i);
      }
    }
  }
  return reached == total;
}

bool contains_coordinatewise(const TropicalType& outer, const std::vector<ElementSet>& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if ((inner[i] & ~outer[i]) != 0) return false;
  }
  return true;
}

class OverlapCycleSearch {
 public:
  OverlapCycleSearch(const TropicalType& first, const TropicalType& second)
      : n_(first.n()), succ_(first.n() + first.d()) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j : elements_of(first[i])) succ_[i].push_back(n_ + j);
      for (std::size_t j : elements_of(second[i])) succ_[n_ + j].push_back(i);
    }
    on_path_.assign(succ_.size(), false);
  }

  std::optional<std::vector<GraphVertex>> run() {
    // The smallest vertex on any cycle is a left vertex; only vertices above
    // the start are explored so each cycle is found from its minimum.
    for (std::size_t s = 0; s < n_; ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      const bool found = extend(s);
      on_path_[s] = false;
      if (found) {
        std::vector<GraphVertex> out;
        for (std::size_t v : path_) {
          out.push_back(v < n_ ? GraphVertex{Side::left, v} : GraphVertex{Side::right, v - n_});
        }
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t v) {
    for (std::size_t w : succ_[v]) {
      if (w == start_ && path_.size() >= 4) return true;
      if (w <= start_ || on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend(w)) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
};

}  // namespace

bool is_spanning_tree(const TropicalType& t) {
  return t.edge_count() + 1 == t.n() + t.d() && is_connected_spanning(t);
}

std::optional<std::vector<GraphVertex>> overlap_cycle(const TropicalType& first,
                                                      const TropicalType& second) {
  require_same_shape(first, second);
  return OverlapCycleSearch(first, second).run();
}

ValidationReport validate_subdivision(const CellCollection& cells) {
  ValidationReport report;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& t = cells[c];
    const bool connected = is_connected_spanning(t);
    if (!connected || t.edge_count() + 1 != t.n() + t.d()) {
      report.non_trees.push_back({c, t.edge_count(), connected});
    }
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& t = cells[c];
    const auto rdv = right_degree_vector(t);
    for (std::size_t i = 0; i < t.n(); ++i) {
      if (set_size(t[i]) < 2) continue;  // deleting the edge isolates left i
      for (std::size_t j : elements_of(t[i])) {
        if (rdv.entries[j] < 1) continue;  // isolates right j
        auto facet = t.coords();
        facet[i] &= ~singleton(j);
        bool covered = false;
        for (std::size_t other = 0; other < cells.size() && !covered; ++other) {
          covered = other != c && contains_coordinatewise(cells[other], facet);
        }
        if (!covered) {
          report.dangling_facets.push_back({c, i, j, TropicalType(t.d(), std::move(facet))});
        }
      }
    }
  }

  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (auto cycle = overlap_cycle(cells[a], cells[b])) {
        report.overlap_cycles.push_back({a, b, std::move(*cycle)});
      }
    }
  }
  return report;
}

TypeSystem face_types_unchecked(const CellCollection& cells) {
  std::vector<TropicalType> types;
  std::vector<std::size_t> provenance;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    std::vector<ElementSet> current = cell.coords();
    // Odometer over nonempty submasks of each coordinate.
    for (;;) {
      types.emplace_back(cells.d(), current);
      provenance.push_back(c);
      std::size_t i = 0;
      for (; i < current.size(); ++i) {
        const ElementSet next = (current[i] - 1) & cell[i];
        if (next != 0) {
          current[i] = next;
          break;
        }
        current[i] = cell[i];
      }
      if (i == current.size()) break;
    }
  }
  return TypeSystem(cells.n(), cells.d(), std::move(types), std::move(provenance));
}

namespace {

void require_valid(const CellCollection& cells) {
  const auto report = validate_subdivision(cells);
  if (!report.valid()) throw InvalidSubdivision(report.summary());
}

}  // namespace

TypeSystem face_types(const CellCollection& cells) {
  require_valid(cells);
  return face_types_unchecked(cells);
}

std::vector<TropicalType> topes(const TypeSystem& system) {
  std::vector<TropicalType> out;
  for (const auto& t : system) {
    if (t.is_tope()) out.push_back(t);
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

namespace {

void compare_to_compositions(const std::vector<std::vector<int>>& images, int total,
                             std::size_t parts, std::vector<std::vector<int>>& collisions,
                             std::vector<std::vector<int>>& missing) {
  std::map<std::vector<int>, std::size_t> hits;
  for (const auto& v : images) ++hits[v];
  for (const auto& comp : weak_compositions(total, parts)) {
    const auto it = hits.find(comp);
    if (it == hits.end()) {
      missing.push_back(comp);
    } else if (it->second > 1) {
      collisions.push_back(comp);
    }
  }
}

bool is_composition(const std::vector<int>& v, int total) {
  int sum = 0;
  for (int x : v) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == total;
}

}  // namespace

BijectionReport ldv_bijection_check(const CellCollection& cells) {
  require_valid(cells);
  const int n = static_cast<int>(cells.n());
  const int d = static_cast<int>(cells.d());
  BijectionReport report;
  report.cell_count = cells.size();
  report.expected_count = binomial(cells.n() + cells.d() - 2, cells.d() - 1);
  std::vector<std::vector<int>> ldvs, rdvs;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ldvs.push_back(left_degree_vector(cells[c]).entries);
    rdvs.push_back(right_degree_vector(cells[c]).entries);
    if (!is_composition(ldvs.back(), d - 1) || !is_composition(rdvs.back(), n - 1)) {
      report.malformed_cells.push_back(c);
    }
  }
  compare_to_compositions(ldvs, d - 1, cells.n(), report.ldv_collisions, report.ldv_missing);
  compare_to_compositions(rdvs, n - 1, cells.d(), report.rdv_collisions, report.rdv_missing);
  return report;
}

bool UnitSimplexReport::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.ok(); });
}

std::vector<std::vector<int>> unit_simplex_locations(const TropicalType& cell) {
  const std::size_t d = cell.d();
  std::vector<std::vector<int>> out;
  for (const auto& location : weak_compositions(static_cast<int>(cell.n()) - 1, d)) {
    bool inside = true;
    for (std::size_t j = 0; j < d && inside; ++j) {
      std::vector<Rational> vertex(location.begin(), location.end());
      vertex[j] += 1;
      inside = minkowski_contains(cell, vertex);
    }
    if (inside) out.push_back(location);
  }
  return out;
}

UnitSimplexReport unit_simplex_check(const CellCollection& cells) {
  require_valid(cells);
  UnitSimplexReport report;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    report.cells.push_back(
        {c, right_degree_vector(cells[c]).entries, unit_simplex_locations(cells[c])});
  }
  return report;
}

}  // namespace tom
