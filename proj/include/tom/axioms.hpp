#pragma once

// The four tropical oriented matroid axioms (boundary, surrounding,
// comparability, elimination) over a finite TypeSystem. Reports collect every
// violation instead of stopping at the first one.

#include <string>
#include <variant>
#include <vector>

#include "tom/core.hpp"
#include "tom/subdivision.hpp"

namespace tom {

enum class Axiom { boundary, surrounding, comparability, elimination };

std::string to_string(Axiom axiom);

struct MissingBoundary {
  std::size_t element;
};

struct MissingRefinement {
  TropicalType type;
  OrderedPartition partition;
  TropicalType refinement;
};

struct MissingDeletion {
  TropicalType type;
  std::size_t coordinate;
  std::size_t element;
  TropicalType result;
};

struct ComparabilityViolation {
  TropicalType a;
  TropicalType b;
  std::vector<std::size_t> cycle;
};

struct EliminationViolation {
  TropicalType a;
  TropicalType b;
  std::size_t position;
};

using Violation = std::variant<MissingBoundary, MissingRefinement, MissingDeletion,
                               ComparabilityViolation, EliminationViolation>;

// One line, 1-based, e.g. "missing refinement (12,3) by (1|23) -> (2,3)".
std::string describe(const Violation& v);

struct AxiomReport {
  Axiom axiom;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

enum class SurroundingMode {
  // Every ordered partition of [d].
  partition,
  // Every single-element deletion; requires acyclic types.
  subset,
  // subset when every type is a forest, partition otherwise.
  automatic,
};

AxiomReport check_boundary(const TypeSystem& system);

// Throws CyclicType in subset mode when some type contains a cycle.
AxiomReport check_surrounding(const TypeSystem& system,
                              SurroundingMode mode = SurroundingMode::automatic);

AxiomReport check_comparability(const TypeSystem& system);

// True iff c witnesses elimination of (a, b) at position.
bool is_elimination_witness(const TropicalType& a, const TropicalType& b, std::size_t position,
                            const TropicalType& c);

// Some witness in the system, by candidate-pattern hashing or a linear scan.
std::optional<TropicalType> find_elimination_witness(const TypeSystem& system,
                                                     const TropicalType& a, const TropicalType& b,
                                                     std::size_t position);

AxiomReport check_elimination(const TypeSystem& system);

struct TOMVerdict {
  AxiomReport boundary;
  AxiomReport surrounding;
  AxiomReport comparability;
  AxiomReport elimination;

  bool passed() const {
    return boundary.passed() && surrounding.passed() && comparability.passed() &&
           elimination.passed();
  }
  std::vector<const AxiomReport*> reports() const {
    return {&boundary, &surrounding, &comparability, &elimination};
  }
};

TOMVerdict check_tom(const TypeSystem& system,
                     SurroundingMode mode = SurroundingMode::automatic);

}  // namespace tom
