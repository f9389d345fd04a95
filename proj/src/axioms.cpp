#include "tom/axioms.hpp"

#include <algorithm>
#include <map>

namespace tom {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::boundary: return "boundary";
    case Axiom::surrounding: return "surrounding";
    case Axiom::comparability: return "comparability";
    case Axiom::elimination: return "elimination";
  }
  return "unknown";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const Violation& v) {
  return std::visit(
      Overloaded{
          [](const MissingBoundary& m) {
            return "missing boundary type for element " + std::to_string(m.element + 1);
          },
          [](const MissingRefinement& m) {
            return "missing refinement " + m.type.to_string() + " by " + m.partition.to_string() +
                   " -> " + m.refinement.to_string();
          },
          [](const MissingDeletion& m) {
            return "missing deletion of " + std::to_string(m.element + 1) + " from coordinate " +
                   std::to_string(m.coordinate + 1) + " of " + m.type.to_string() + " -> " +
                   m.result.to_string();
          },
          [](const ComparabilityViolation& m) {
            std::string cycle;
            for (std::size_t t = 0; t < m.cycle.size(); ++t) {
              if (t > 0) cycle += "~";
              cycle += std::to_string(m.cycle[t] + 1);
            }
            return "cyclic comparability graph of " + m.a.to_string() + " and " +
                   m.b.to_string() + ": " + cycle;
          },
          [](const EliminationViolation& m) {
            return "no elimination of " + m.a.to_string() + " and " + m.b.to_string() +
                   " at position " + std::to_string(m.position + 1);
          },
      },
      v);
}

AxiomReport check_boundary(const TypeSystem& system) {
  AxiomReport report{Axiom::boundary, {}};
  for (std::size_t j = 0; j < system.d(); ++j) {
    const TropicalType constant(system.d(), std::vector<ElementSet>(system.n(), singleton(j)));
    if (!system.contains(constant)) report.violations.push_back(MissingBoundary{j});
  }
  return report;
}

namespace {

void surrounding_by_partitions(const TypeSystem& system, AxiomReport& report) {
  const auto partitions = all_ordered_partitions(system.d());
  for (const auto& type : system) {
    std::map<TropicalType, const OrderedPartition*> missing;
    for (const auto& p : partitions) {
      auto refined = refine(type, p);
      if (!system.contains(refined)) missing.emplace(std::move(refined), &p);
    }
    for (const auto& [refined, p] : missing) {
      report.violations.push_back(MissingRefinement{type, *p, refined});
    }
  }
}

void surrounding_by_deletions(const TypeSystem& system, AxiomReport& report) {
  for (const auto& type : system) {
    if (!is_forest(type)) {
      throw CyclicType("subset-mode surrounding needs acyclic types; " + type.to_string() +
                       " has a cycle");
    }
  }
  for (const auto& type : system) {
    for (std::size_t i = 0; i < type.n(); ++i) {
      if (set_size(type[i]) < 2) continue;
      for (std::size_t k : elements_of(type[i])) {
        auto coords = type.coords();
        coords[i] &= ~singleton(k);
        TropicalType result(type.d(), std::move(coords));
        if (!system.contains(result)) {
          report.violations.push_back(MissingDeletion{type, i, k, std::move(result)});
        }
      }
    }
  }
}

}  // namespace

AxiomReport check_surrounding(const TypeSystem& system, SurroundingMode mode) {
  AxiomReport report{Axiom::surrounding, {}};
  if (mode == SurroundingMode::automatic) {
    const bool all_forests =
        std::all_of(system.begin(), system.end(), [](const auto& t) { return is_forest(t); });
    mode = all_forests ? SurroundingMode::subset : SurroundingMode::partition;
  }
  if (mode == SurroundingMode::partition) {
    surrounding_by_partitions(system, report);
  } else {
    surrounding_by_deletions(system, report);
  }
  return report;
}

AxiomReport check_comparability(const TypeSystem& system) {
  AxiomReport report{Axiom::comparability, {}};
  for (std::size_t a = 0; a < system.size(); ++a) {
    for (std::size_t b = a + 1; b < system.size(); ++b) {
      const auto graph = comparability_graph(system[a], system[b]);
      if (is_acyclic(graph)) continue;
      report.violations.push_back(
          ComparabilityViolation{system[a], system[b], find_directed_cycle(graph).value()});
    }
  }
  return report;
}

bool is_elimination_witness(const TropicalType& a, const TropicalType& b, std::size_t position,
                            const TropicalType& c) {
  require_same_shape(a, b);
  require_same_shape(a, c);
  if (c[position] != (a[position] | b[position])) return false;
  for (std::size_t k = 0; k < a.n(); ++k) {
    const ElementSet ck = c[k];
    if (ck != a[k] && ck != b[k] && ck != (a[k] | b[k])) return false;
  }
  return true;
}

namespace {

// Distinct admissible values for each coordinate of a witness.
std::vector<std::vector<ElementSet>> witness_options(const TropicalType& a, const TropicalType& b,
                                                     std::size_t position) {
  std::vector<std::vector<ElementSet>> options(a.n());
  for (std::size_t k = 0; k < a.n(); ++k) {
    if (k == position) {
      options[k] = {a[k] | b[k]};
      continue;
    }
    options[k] = {a[k], b[k], a[k] | b[k]};
    std::sort(options[k].begin(), options[k].end());
    options[k].erase(std::unique(options[k].begin(), options[k].end()), options[k].end());
  }
  return options;
}

}  // namespace

std::optional<TropicalType> find_elimination_witness(const TypeSystem& system,
                                                     const TropicalType& a, const TropicalType& b,
                                                     std::size_t position) {
  require_same_shape(a, b);
  if (position >= a.n()) throw ShapeMismatch("elimination position outside [n]");
  // A or B itself works when the position's coordinates are nested.
  if ((b[position] & ~a[position]) == 0 && system.contains(a)) return a;
  if ((a[position] & ~b[position]) == 0 && system.contains(b)) return b;

  const auto options = witness_options(a, b, position);
  std::size_t candidates = 1;
  for (const auto& o : options) {
    candidates *= o.size();
    if (candidates > system.size()) break;
  }
  if (candidates <= system.size()) {
    std::vector<std::size_t> digit(a.n(), 0);
    std::vector<ElementSet> coords(a.n());
    for (;;) {
      for (std::size_t k = 0; k < a.n(); ++k) coords[k] = options[k][digit[k]];
      TropicalType c(a.d(), coords);
      if (system.contains(c)) return c;
      std::size_t k = 0;
      for (; k < a.n(); ++k) {
        if (++digit[k] < options[k].size()) break;
        digit[k] = 0;
      }
      if (k == a.n()) return std::nullopt;
    }
  }
  for (const auto& c : system) {
    if (is_elimination_witness(a, b, position, c)) return c;
  }
  return std::nullopt;
}

AxiomReport check_elimination(const TypeSystem& system) {
  AxiomReport report{Axiom::elimination, {}};
  // A witness for (A,B,j) also witnesses (B,A,j), so unordered pairs suffice;
  // (A,A,j) is always witnessed by A.
  for (std::size_t a = 0; a < system.size(); ++a) {
    for (std::size_t b = a + 1; b < system.size(); ++b) {
      for (std::size_t j = 0; j < system.n(); ++j) {
        if (!find_elimination_witness(system, system[a], system[b], j)) {
          report.violations.push_back(EliminationViolation{system[a], system[b], j});
        }
      }
    }
  }
  return report;
}

TOMVerdict check_tom(const TypeSystem& system, SurroundingMode mode) {
  return TOMVerdict{check_boundary(system), check_surrounding(system, mode),
                    check_comparability(system), check_elimination(system)};
}

}  // namespace tom
