#include "tom/transport.hpp"

#include <deque>

namespace tom {

namespace {

// Edmonds-Karp on a dense residual matrix. Vertex 0 is the source, 1 the sink.
Rational max_flow(std::vector<std::vector<Rational>>& residual) {
  const std::size_t v_count = residual.size();
  Rational total = 0;
  for (;;) {
    std::vector<std::size_t> prev(v_count, v_count);
    prev[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty() && prev[1] == v_count) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < v_count; ++w) {
        if (prev[w] == v_count && residual[u][w] > 0) {
          prev[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (prev[1] == v_count) return total;
    Rational bottleneck = residual[prev[1]][1];
    for (std::size_t w = 1; w != 0; w = prev[w]) {
      if (residual[prev[w]][w] < bottleneck) bottleneck = residual[prev[w]][w];
    }
    for (std::size_t w = 1; w != 0; w = prev[w]) {
      residual[prev[w]][w] -= bottleneck;
      residual[w][prev[w]] += bottleneck;
    }
    total += bottleneck;
  }
}

}  // namespace

bool transportation_feasible(std::span<const ElementSet> supports,
                             std::span<const Rational> demand) {
  const std::size_t sources = supports.size();
  const std::size_t sinks = demand.size();
  Rational total_demand = 0;
  for (const auto& p : demand) {
    if (p < 0) return false;
    total_demand += p;
  }
  if (total_demand != Rational(static_cast<long>(sources))) return false;

  const std::size_t v_count = 2 + sources + sinks;
  std::vector<std::vector<Rational>> residual(v_count, std::vector<Rational>(v_count));
  for (std::size_t i = 0; i < sources; ++i) {
    residual[0][2 + i] = 1;
    for (std::size_t k : elements_of(supports[i])) {
      if (k >= sinks) return false;
      // A source ships at most 1 in total, so 1 is an unbinding edge capacity.
      residual[2 + i][2 + sources + k] = 1;
    }
  }
  for (std::size_t k = 0; k < sinks; ++k) residual[2 + sources + k][1] = demand[k];
  return max_flow(residual) == total_demand;
}

bool minkowski_contains(const TropicalType& cell, std::span<const Rational> point) {
  if (point.size() != cell.d()) throw ShapeMismatch("point dimension differs from d");
  return transportation_feasible(cell.coords(), point);
}

}  // namespace tom
