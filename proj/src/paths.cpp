#include "tom/paths.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace tom {

bool adjacent(const TropicalType& a, const TropicalType& b) {
  require_same_shape(a, b);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    const ElementSet diff = a[i] ^ b[i];
    if (diff == 0) continue;
    if (++differing > 1 || set_size(diff) != 1) return false;
  }
  return differing == 1;
}

TypeSystem q_alpha(const TypeSystem& system, const RankVector& alpha) {
  if (alpha.size() != system.n()) throw ShapeMismatch("alpha must have n entries");
  std::vector<TropicalType> kept;
  std::vector<std::size_t> provenance;
  for (std::size_t t = 0; t < system.size(); ++t) {
    const auto& type = system[t];
    bool inside = true;
    for (std::size_t i = 0; i < type.n() && inside; ++i) {
      inside = static_cast<int>(set_size(type[i])) > alpha[i];
    }
    if (inside) {
      kept.push_back(type);
      provenance.push_back(system.provenance(t));
    }
  }
  return TypeSystem(system.n(), system.d(), std::move(kept), std::move(provenance));
}

namespace {

// Members of the system adjacent to t, in increasing order.
std::vector<std::size_t> neighbours(const TypeSystem& system, const TropicalType& t) {
  std::vector<std::size_t> out;
  const ElementSet all = full_set(t.d());
  auto coords = t.coords();
  for (std::size_t i = 0; i < t.n(); ++i) {
    const ElementSet original = coords[i];
    for (std::size_t j : elements_of(all)) {
      coords[i] = original ^ singleton(j);
      if (coords[i] == 0) continue;
      if (auto idx = system.index_of(TropicalType(t.d(), coords))) out.push_back(*idx);
    }
    coords[i] = original;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConnectivityReport connectivity(const TypeSystem& system) {
  ConnectivityReport report;
  report.type_count = system.size();
  std::vector<bool> seen(system.size(), false);
  for (std::size_t s = 0; s < system.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> component;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (std::size_t w : neighbours(system, system[v])) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    report.components.push_back(std::move(component));
  }
  return report;
}

ConnectivityReport q_alpha_connected(const TypeSystem& system, const RankVector& alpha) {
  return connectivity(q_alpha(system, alpha));
}

bool is_strong_path(const TypeSystem& system, const TypePath& path) {
  if (path.empty()) return false;
  const auto& a = path.front();
  const auto& b = path.back();
  for (const auto& t : path) {
    if (t.n() != a.n() || t.d() != a.d() || !system.contains(t)) return false;
  }
  std::vector<bool> deleted(a.n(), false);
  for (std::size_t s = 1; s < path.size(); ++s) {
    if (!adjacent(path[s - 1], path[s])) return false;
    for (std::size_t i = 0; i < a.n(); ++i) {
      const ElementSet before = path[s - 1][i];
      const ElementSet after = path[s][i];
      if (before == after) continue;
      const ElementSet added = after & ~before;
      const ElementSet removed = before & ~after;
      if (added != 0 && (deleted[i] || (added & ~(b[i] & ~a[i])) != 0)) return false;
      if (removed != 0) {
        if ((removed & ~(a[i] & ~b[i])) != 0) return false;
        deleted[i] = true;
      }
    }
  }
  return true;
}

namespace {

class StrongPathSearch {
 public:
  StrongPathSearch(const TypeSystem& system, const TropicalType& a, const TropicalType& b)
      : system_(system), a_(a), b_(b) {
    for (std::size_t i = 0; i < a.n(); ++i) {
      additions_.push_back(b[i] & ~a[i]);
      deletions_.push_back(a[i] & ~b[i]);
    }
  }

  bool run(TypePath& path) {
    path = {a_};
    return extend(path);
  }

 private:
  // Legal successors in the system, ascending.
  std::vector<TropicalType> successors(const TropicalType& t) const {
    std::vector<TropicalType> out;
    auto coords = t.coords();
    for (std::size_t i = 0; i < t.n(); ++i) {
      const ElementSet original = coords[i];
      // No deletion yet iff everything of A_i is still present.
      const bool adding_phase = (a_[i] & ~original) == 0;
      if (adding_phase) {
        for (std::size_t j : elements_of(additions_[i] & ~original)) {
          coords[i] = original | singleton(j);
          TropicalType next(t.d(), coords);
          if (system_.contains(next)) out.push_back(std::move(next));
        }
      }
      for (std::size_t j : elements_of(deletions_[i] & original)) {
        coords[i] = original & ~singleton(j);
        if (coords[i] == 0) continue;
        TropicalType next(t.d(), coords);
        if (system_.contains(next)) out.push_back(std::move(next));
      }
      coords[i] = original;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Every move is irreversible, so any completed path has length delta(a, b)
  // and a depth-first search in ascending order yields the lexicographically
  // smallest one.
  bool extend(TypePath& path) {
    const TropicalType current = path.back();
    if (current == b_) return true;
    if (dead_.count(current) != 0) return false;
    for (auto& next : successors(current)) {
      path.push_back(std::move(next));
      if (extend(path)) return true;
      path.pop_back();
    }
    dead_.insert(current);
    return false;
  }

  const TypeSystem& system_;
  const TropicalType& a_;
  const TropicalType& b_;
  std::vector<ElementSet> additions_;
  std::vector<ElementSet> deletions_;
  std::unordered_set<TropicalType, TropicalTypeHash> dead_;
};

}  // namespace

TypePath strong_path(const TypeSystem& system, const TropicalType& a, const TropicalType& b) {
  require_same_shape(a, b);
  if (!system.contains(a)) throw NotInSystem("type " + a.to_string() + " is not in the system");
  if (!system.contains(b)) throw NotInSystem("type " + b.to_string() + " is not in the system");
  TypePath path;
  if (!StrongPathSearch(system, a, b).run(path)) {
    throw NoStrongPath("no strong path from " + a.to_string() + " to " + b.to_string());
  }
  return path;
}

TropicalType eliminate_via_path(const TypeSystem& system, const TropicalType& a,
                                const TropicalType& b, std::size_t position) {
  if (position >= a.n()) throw ShapeMismatch("elimination position outside [n]");
  const auto path = strong_path(system, a, b);
  const ElementSet target = a[position] | b[position];
  const auto hit = std::find_if(path.begin(), path.end(),
                                [&](const auto& c) { return c[position] == target; });
  if (hit == path.end()) {
    throw NoStrongPath("strong path never reaches the union at position " +
                       std::to_string(position + 1));
  }
  std::vector<ElementSet> coords = hit->coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const ElementSet both = a[k] | b[k];
    if (coords[k] == a[k] || coords[k] == b[k] || coords[k] == both) continue;
    // Strong paths keep C_k between A_k n B_k and A_k u B_k and containing
    // A_k or B_k, so one of the two is a face of C_k.
    coords[k] = (a[k] & ~coords[k]) == 0 ? a[k] : b[k];
  }
  TropicalType witness(a.d(), std::move(coords));
  if (!system.contains(witness)) {
    throw NotInSystem("trimmed witness " + witness.to_string() + " is not in the system");
  }
  return witness;
}

}  // namespace tom
