#include "tom/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tom {

std::vector<std::size_t> elements_of(ElementSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

TropicalType::TropicalType(std::size_t d, std::vector<ElementSet> coords)
    : d_(d), coords_(std::move(coords)) {
  if (d_ == 0 || d_ > kMaxElements) {
    throw InvalidType("d must lie in [1, 64], got " + std::to_string(d_));
  }
  if (coords_.empty()) throw InvalidType("a type needs at least one coordinate");
  const ElementSet all = full_set(d_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) {
      throw InvalidType("coordinate " + std::to_string(i + 1) + " is empty");
    }
    if ((coords_[i] & ~all) != 0) {
      throw InvalidType("coordinate " + std::to_string(i + 1) + " has an element outside [" +
                        std::to_string(d_) + "]");
    }
  }
}

TropicalType TropicalType::from_lists(std::size_t d,
                                      const std::vector<std::vector<std::size_t>>& one_based) {
  std::vector<ElementSet> coords;
  coords.reserve(one_based.size());
  for (const auto& list : one_based) {
    ElementSet s = 0;
    for (std::size_t j : list) {
      if (j == 0 || j > d) {
        throw InvalidType("element " + std::to_string(j) + " outside [" + std::to_string(d) + "]");
      }
      s |= singleton(j - 1);
    }
    coords.push_back(s);
  }
  return TropicalType(d, std::move(coords));
}

std::size_t TropicalType::edge_count() const {
  std::size_t count = 0;
  for (ElementSet s : coords_) count += set_size(s);
  return count;
}

ElementSet TropicalType::support() const {
  ElementSet s = 0;
  for (ElementSet c : coords_) s |= c;
  return s;
}

bool TropicalType::is_tope() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](ElementSet s) { return set_size(s) == 1; });
}

std::vector<std::vector<std::size_t>> TropicalType::to_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(coords_.size());
  for (ElementSet s : coords_) {
    auto elems = elements_of(s);
    for (auto& j : elems) ++j;
    out.push_back(std::move(elems));
  }
  return out;
}

std::string TropicalType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    const auto elems = elements_of(coords_[i]);
    if (d_ <= 9) {
      for (std::size_t j : elems) out += static_cast<char>('1' + j);
    } else {
      out += '{';
      for (std::size_t t = 0; t < elems.size(); ++t) {
        if (t > 0) out += ',';
        out += std::to_string(elems[t] + 1);
      }
      out += '}';
    }
  }
  return out + ")";
}

std::size_t TropicalType::hash() const {
  std::size_t h = d_ * 0x9e3779b97f4a7c15ULL;
  for (ElementSet s : coords_) {
    h ^= std::hash<ElementSet>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void require_same_shape(const TropicalType& a, const TropicalType& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw ShapeMismatch("types " + a.to_string() + " and " + b.to_string() +
                        " have different (n,d)");
  }
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_forest(const TropicalType& t) {
  UnionFind uf(t.n() + t.d());
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j : elements_of(t[i])) {
      if (!uf.unite(i, t.n() + j)) return false;
    }
  }
  return true;
}

DegreeVector left_degree_vector(const TropicalType& t) {
  DegreeVector v{{}, Side::left};
  v.entries.reserve(t.n());
  for (ElementSet s : t.coords()) v.entries.push_back(static_cast<int>(set_size(s)) - 1);
  return v;
}

DegreeVector right_degree_vector(const TropicalType& t) {
  DegreeVector v{std::vector<int>(t.d(), -1), Side::right};
  for (ElementSet s : t.coords()) {
    for (std::size_t j : elements_of(s)) ++v.entries[j];
  }
  return v;
}

TropicalType dual(const TropicalType& t) {
  std::vector<ElementSet> coords(t.d(), 0);
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j : elements_of(t[i])) coords[j] |= singleton(i);
  }
  for (std::size_t j = 0; j < t.d(); ++j) {
    if (coords[j] == 0) throw MissingElement(j);
  }
  return TropicalType(t.n(), std::move(coords));
}

ComparabilityGraph comparability_graph(const TropicalType& a, const TropicalType& b) {
  require_same_shape(a, b);
  ComparabilityGraph g;
  g.vertex_count = a.d();
  for (std::size_t i = 0; i < a.n(); ++i) {
    const ElementSet common = a[i] & b[i];
    for (std::size_t j : elements_of(a[i])) {
      for (std::size_t k : elements_of(b[i])) {
        if (j == k) continue;
        if (set_contains(common, j) && set_contains(common, k)) {
          g.undirected.emplace(std::min(j, k), std::max(j, k));
        } else {
          g.directed.emplace(j, k);
        }
      }
    }
  }
  return g;
}

namespace {

// Adjacency where undirected edges count in both directions.
std::vector<std::vector<std::size_t>> mixed_adjacency(const ComparabilityGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (auto [u, v] : g.undirected) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto [u, v] : g.directed) adj[u].push_back(v);
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

class Tarjan {
 public:
  explicit Tarjan(const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), index_(adj.size(), kUnvisited), low_(adj.size(), 0),
        on_stack_(adj.size(), false), component_(adj.size(), 0) {
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (index_[v] == kUnvisited) visit(v);
    }
  }
  const std::vector<std::size_t>& components() const { return component_; }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  void visit(std::size_t v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (index_[w] == kUnvisited) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      std::size_t w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        component_[w] = next_component_;
      } while (w != v);
      ++next_component_;
    }
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> index_, low_;
  std::vector<bool> on_stack_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> stack_;
  std::size_t counter_ = 0;
  std::size_t next_component_ = 0;
};

}  // namespace

bool is_acyclic(const ComparabilityGraph& g) {
  if (g.directed.empty()) return true;
  const auto adj = mixed_adjacency(g);
  Tarjan scc(adj);
  const auto& comp = scc.components();
  return std::none_of(g.directed.begin(), g.directed.end(),
                      [&](const auto& e) { return comp[e.first] == comp[e.second]; });
}

std::optional<std::vector<std::size_t>> find_directed_cycle(const ComparabilityGraph& g) {
  const auto adj = mixed_adjacency(g);
  for (auto [u, v] : g.directed) {
    // Shortest mixed path v ~> u closes the cycle u -> v ~> u.
    std::vector<std::size_t> prev(g.vertex_count, g.vertex_count);
    std::deque<std::size_t> queue{v};
    prev[v] = v;
    while (!queue.empty() && prev[u] == g.vertex_count) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : adj[x]) {
        if (prev[y] == g.vertex_count) {
          prev[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (prev[u] == g.vertex_count) continue;
    std::vector<std::size_t> back;
    for (std::size_t x = u; x != v; x = prev[x]) back.push_back(x);
    std::vector<std::size_t> cycle{u, v};
    cycle.insert(cycle.end(), back.rbegin(), back.rend());
    return cycle;
  }
  return std::nullopt;
}

OrderedPartition::OrderedPartition(std::size_t d, std::vector<ElementSet> blocks)
    : d_(d), blocks_(std::move(blocks)) {
  if (d_ == 0 || d_ > kMaxElements) throw InvalidType("partition ground set must be [1..64]");
  ElementSet seen = 0;
  for (ElementSet b : blocks_) {
    if (b == 0) throw InvalidType("ordered partition has an empty block");
    if ((b & seen) != 0) throw InvalidType("ordered partition blocks overlap");
    seen |= b;
  }
  if (seen != full_set(d_)) throw InvalidType("ordered partition does not cover [d]");
}

std::string OrderedPartition::to_string() const {
  std::string out = "(";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '|';
    const auto elems = elements_of(blocks_[b]);
    for (std::size_t t = 0; t < elems.size(); ++t) {
      if (t > 0 && d_ > 9) out += ',';
      out += std::to_string(elems[t] + 1);
    }
  }
  return out + ")";
}

namespace {

void extend_partitions(std::size_t d, ElementSet remaining, std::vector<ElementSet>& prefix,
                       std::vector<OrderedPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(d, prefix);
    return;
  }
  // Enumerate nonempty submasks of remaining as the next block.
  for (ElementSet block = remaining; block != 0; block = (block - 1) & remaining) {
    prefix.push_back(block);
    extend_partitions(d, remaining & ~block, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> all_ordered_partitions(std::size_t d) {
  if (d == 0 || d > 12) throw TooLarge("ordered partitions enumerated only for 1 <= d <= 12");
  std::vector<OrderedPartition> out;
  std::vector<ElementSet> prefix;
  extend_partitions(d, full_set(d), prefix, out);
  return out;
}

TropicalType refine(const TropicalType& a, const OrderedPartition& p) {
  if (a.d() != p.d()) throw ShapeMismatch("partition ground set differs from the type's [d]");
  std::vector<ElementSet> coords(a.n());
  const auto& blocks = p.blocks();
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t m = blocks.size(); m-- > 0;) {
      if ((a[i] & blocks[m]) != 0) {
        coords[i] = a[i] & blocks[m];
        break;
      }
    }
  }
  return TropicalType(a.d(), std::move(coords));
}

std::vector<TropicalType> single_deletion_refinements(const TropicalType& a) {
  if (!is_forest(a)) throw CyclicType("type " + a.to_string() + " contains a cycle");
  std::vector<TropicalType> out;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (set_size(a[i]) < 2) continue;
    for (std::size_t k : elements_of(a[i])) {
      auto coords = a.coords();
      coords[i] &= ~singleton(k);
      out.emplace_back(a.d(), std::move(coords));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrderedPartition deletion_partition(const TropicalType& a, std::size_t i, std::size_t k) {
  if (i >= a.n() || !a.has_edge(i, k) || set_size(a[i]) < 2) {
    throw InvalidType("deletion of an element from a coordinate of size < 2 or absent element");
  }
  if (!is_forest(a)) throw CyclicType("type " + a.to_string() + " contains a cycle");
  // BFS over K_{n,d} restricted to a, without edge (i,k), starting at left i.
  const std::size_t n = a.n();
  std::vector<bool> seen(n + a.d(), false);
  std::deque<std::size_t> queue{i};
  seen[i] = true;
  ElementSet component = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v < n) {
      for (std::size_t j : elements_of(a[v])) {
        if (v == i && j == k) continue;
        if (!seen[n + j]) {
          seen[n + j] = true;
          queue.push_back(n + j);
        }
      }
    } else {
      const std::size_t j = v - n;
      component |= singleton(j);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i && j == k) continue;
        if (a.has_edge(l, j) && !seen[l]) {
          seen[l] = true;
          queue.push_back(l);
        }
      }
    }
  }
  return OrderedPartition(a.d(), {full_set(a.d()) & ~component, component});
}

RankVector rank(const TropicalType& a, const TropicalType& b) {
  require_same_shape(a, b);
  RankVector r(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    r[i] = static_cast<int>(std::min(set_size(a[i]), set_size(b[i]))) - 1;
  }
  return r;
}

bool rank_geq(const RankVector& alpha, const RankVector& beta) {
  if (alpha.size() != beta.size()) throw ShapeMismatch("rank vectors differ in length");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < beta[i]) return false;
  }
  return true;
}

std::size_t delta(const TropicalType& a, const TropicalType& b) {
  require_same_shape(a, b);
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.n(); ++i) total += set_size(a[i] ^ b[i]);
  return total;
}

namespace {

void extend_compositions(int remaining, std::size_t parts, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    extend_compositions(remaining - v, parts, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> weak_compositions(int total, std::size_t parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  if (total < 0) return out;
  std::vector<int> prefix;
  extend_compositions(total, parts, prefix, out);
  return out;
}

}  // namespace tom
