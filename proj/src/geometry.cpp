#include "tom/geometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tom {

WeightMatrix::WeightMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) throw ShapeMismatch("weight matrix is empty");
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw ShapeMismatch("weight matrix is ragged");
  }
  if (d() > kMaxElements) throw InvalidType("weight matrix has more than 64 columns");
}

FacetMatrix facet_matrix(const TropicalType& cell) {
  if (!is_spanning_tree(cell)) {
    throw NotSpanningTree(cell.to_string() + " is not a spanning tree of K_{n,d}");
  }
  const std::size_t n = cell.n();
  const std::size_t d = cell.d();
  FacetMatrix out;
  out.d = d;
  for (std::size_t i = 0; i < n; ++i) {
    if (set_size(cell[i]) < 2) continue;
    for (std::size_t j : elements_of(cell[i])) {
      // Component of right vertex d-1 in T \ (i,j).
      std::vector<bool> seen(n + d, false);
      std::deque<std::size_t> queue{n + d - 1};
      seen[n + d - 1] = true;
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        auto visit = [&](std::size_t w) {
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        };
        if (v < n) {
          for (std::size_t k : elements_of(cell[v])) {
            if (!(v == i && k == j)) visit(n + k);
          }
        } else {
          for (std::size_t l = 0; l < n; ++l) {
            if (cell.has_edge(l, v - n) && !(l == i && v - n == j)) visit(l);
          }
        }
      }
      std::vector<int> row(d - 1, 0);
      for (std::size_t k = 0; k + 1 < d; ++k) row[k] = seen[n + k] ? 0 : 1;
      long cut_off = 0;
      for (std::size_t l = 0; l < n; ++l) cut_off += seen[l] ? 0 : 1;
      out.edges.emplace_back(i, j);
      out.rows.push_back(std::move(row));
      out.rhs.emplace_back(cut_off);
      out.upper.push_back(!seen[i]);
    }
  }
  return out;
}

long long determinant(BinaryMatrix m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  std::vector<std::vector<long long>> a(size);
  for (std::size_t r = 0; r < size; ++r) a[r].assign(m[r].begin(), m[r].end());
  long long sign = 1;
  long long previous = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < size; ++r) {
      for (std::size_t c = k + 1; c < size; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / previous;
      }
    }
    previous = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

namespace {

std::size_t column_count(const BinaryMatrix& m) { return m.empty() ? 0 : m.front().size(); }

// Calls f on every k-subset of [0, total) as a sorted index vector.
template <class F>
bool for_each_subset(std::size_t total, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (!f(idx)) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == total - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

ElementSet row_support(const std::vector<int>& row) {
  ElementSet s = 0;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) s |= singleton(c);
  }
  return s;
}

bool rows_consecutive(const BinaryMatrix& m, const std::vector<std::size_t>& order) {
  for (const auto& row : m) {
    int runs = 0;
    bool inside = false;
    for (std::size_t c : order) {
      const bool one = row[c] != 0;
      if (one && !inside) ++runs;
      inside = one;
    }
    if (runs > 1) return false;
  }
  return true;
}

// Columns of `universe` ordered so that every family member inside it is
// contiguous. Members are pairwise nested or disjoint.
void laminar_order(ElementSet universe, const std::vector<ElementSet>& family,
                   std::vector<std::size_t>& out) {
  std::vector<ElementSet> maximal;
  for (ElementSet s : family) {
    if (s == universe || (s & ~universe) != 0) continue;
    const bool dominated = std::any_of(family.begin(), family.end(), [&](ElementSet t) {
      return t != s && t != universe && (t & ~universe) == 0 && (s & ~t) == 0;
    });
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  ElementSet covered = 0;
  for (ElementSet s : maximal) {
    laminar_order(s, family, out);
    covered |= s;
  }
  for (std::size_t c : elements_of(universe & ~covered)) out.push_back(c);
}

}  // namespace

bool is_totally_unimodular(const BinaryMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = column_count(m);
  if (rows > 12 || cols > 12) throw TooLarge("total unimodularity brute force is capped at 12x12");
  for (const auto& row : m) {
    if (row.size() != cols) throw ShapeMismatch("ragged matrix");
  }
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const bool ok = for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
      return for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
        BinaryMatrix sub(k, std::vector<int>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[r[a]][c[b]];
        }
        const long long det = determinant(std::move(sub));
        return det >= -1 && det <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool has_laminar_rows(const BinaryMatrix& m) {
  for (std::size_t a = 0; a < m.size(); ++a) {
    const ElementSet s = row_support(m[a]);
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const ElementSet t = row_support(m[b]);
      const bool nested = (s & ~t) == 0 || (t & ~s) == 0;
      if (!nested && (s & t) != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> interval_column_order(const BinaryMatrix& m) {
  const std::size_t cols = column_count(m);
  if (cols > kMaxElements) throw TooLarge("more than 64 columns");
  if (has_laminar_rows(m)) {
    std::vector<ElementSet> family;
    for (const auto& row : m) family.push_back(row_support(row));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<std::size_t> order;
    laminar_order(full_set(cols), family, order);
    if (rows_consecutive(m, order)) return order;
  }
  if (cols > 10) throw TooLarge("column permutation search is capped at 10 columns");
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    if (rows_consecutive(m, order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

bool is_interval_matrix_reorderable(const BinaryMatrix& m) {
  return interval_column_order(m).has_value();
}

TropicalType point_type(const WeightMatrix& w, std::span<const Rational> x) {
  if (x.size() != w.d()) throw ShapeMismatch("point has " + std::to_string(x.size()) +
                                             " coordinates, expected " + std::to_string(w.d()));
  std::vector<ElementSet> coords(w.n(), 0);
  for (std::size_t i = 0; i < w.n(); ++i) {
    Rational best = w(i, 0) + x[0];
    coords[i] = singleton(0);
    for (std::size_t j = 1; j < w.d(); ++j) {
      const Rational value = w(i, j) + x[j];
      if (value > best) {
        best = value;
        coords[i] = singleton(j);
      } else if (value == best) {
        coords[i] |= singleton(j);
      }
    }
  }
  return TropicalType(w.d(), std::move(coords));
}

NonGenericWeights::NonGenericWeights(TropicalType tree, std::size_t left, std::size_t right)
    : Error("non-generic weights: tree " + tree.to_string() + " ties on edge (" +
            std::to_string(left + 1) + "," + std::to_string(right + 1) + ")"),
      tree_(std::move(tree)), left_(left), right_(right) {}

TreePotential tree_potential(const WeightMatrix& w, const TropicalType& tree) {
  if (tree.n() != w.n() || tree.d() != w.d()) throw ShapeMismatch("tree and weights differ in shape");
  if (!is_spanning_tree(tree)) throw NotSpanningTree(tree.to_string() + " is not a spanning tree");
  const std::size_t n = w.n();
  const std::size_t d = w.d();
  TreePotential p{std::vector<Rational>(n), std::vector<Rational>(d)};
  std::vector<bool> seen(n + d, false);
  std::deque<std::size_t> queue{n + d - 1};
  seen[n + d - 1] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v < n) {
      for (std::size_t j : elements_of(tree[v])) {
        if (seen[n + j]) continue;
        seen[n + j] = true;
        p.right[j] = w(v, j) - p.left[v];
        queue.push_back(n + j);
      }
    } else {
      const std::size_t j = v - n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!tree.has_edge(i, j) || seen[i]) continue;
        seen[i] = true;
        p.left[i] = w(i, j) - p.right[j];
        queue.push_back(i);
      }
    }
  }
  return p;
}

namespace {

void extend_trees(std::size_t d, std::size_t i, std::vector<std::size_t> parent,
                  std::size_t edges, std::vector<ElementSet>& coords,
                  std::vector<TropicalType>& out) {
  const std::size_t n = coords.size();
  if (i == n) {
    if (edges + 1 == n + d) out.emplace_back(d, coords);
    return;
  }
  auto find = [](std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  const std::size_t remaining_left = n - i - 1;
  for (ElementSet mask = 1; mask <= full_set(d); ++mask) {
    const std::size_t size = set_size(mask);
    // Each later left vertex needs at least one edge.
    if (edges + size + remaining_left > n + d - 1) continue;
    auto next = parent;
    bool forest = true;
    for (std::size_t j : elements_of(mask)) {
      const std::size_t a = find(next, i);
      const std::size_t b = find(next, n + j);
      if (a == b) {
        forest = false;
        break;
      }
      next[a] = b;
    }
    if (!forest) continue;
    coords[i] = mask;
    extend_trees(d, i + 1, std::move(next), edges + size, coords, out);
  }
}

}  // namespace

std::vector<TropicalType> all_spanning_trees(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0 || d > 16) throw TooLarge("spanning trees enumerated for d <= 16 only");
  // n^{d-1} d^{n-1} trees.
  double count = 1;
  for (std::size_t t = 1; t < d; ++t) count *= static_cast<double>(n);
  for (std::size_t t = 1; t < n; ++t) count *= static_cast<double>(d);
  if (count > 2e6) throw TooLarge("K_{n,d} has too many spanning trees to enumerate");
  std::vector<std::size_t> parent(n + d);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<ElementSet> coords(n, 0);
  std::vector<TropicalType> out;
  extend_trees(d, 0, std::move(parent), 0, coords, out);
  return out;
}

CellCollection regular_subdivision(const WeightMatrix& w) {
  std::vector<TropicalType> cells;
  for (auto& tree : all_spanning_trees(w.n(), w.d())) {
    const auto p = tree_potential(w, tree);
    bool accepted = true;
    std::optional<std::pair<std::size_t, std::size_t>> tie;
    for (std::size_t i = 0; i < w.n() && accepted; ++i) {
      for (std::size_t j = 0; j < w.d(); ++j) {
        if (tree.has_edge(i, j)) continue;
        const Rational slack = p.left[i] + p.right[j] - w(i, j);
        if (slack < 0) {
          accepted = false;
          break;
        }
        if (slack == 0 && !tie) tie.emplace(i, j);
      }
    }
    if (!accepted) continue;
    if (tie) throw NonGenericWeights(tree, tie->first, tie->second);
    cells.push_back(std::move(tree));
  }
  return CellCollection(w.n(), w.d(), std::move(cells));
}

}  // namespace tom
