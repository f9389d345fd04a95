#include "tom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tom {

namespace {

// Lattice point (p_2, p_3) of n*Delta_2; p_1 is implied.
using LatticePoint = std::pair<long, long>;

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<LatticePoint> cell_vertices(const TropicalType& cell) {
  std::vector<LatticePoint> pts{{0, 0}};
  for (std::size_t i = 0; i < cell.n(); ++i) {
    std::vector<LatticePoint> next;
    for (const auto& p : pts) {
      for (std::size_t j : elements_of(cell[i])) {
        next.emplace_back(p.first + (j == 1 ? 1 : 0), p.second + (j == 2 ? 1 : 0));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    pts = std::move(next);
  }
  return pts;
}

class Canvas {
 public:
  explicit Canvas(std::size_t n) : scale_(480.0 / static_cast<double>(n)) {}

  std::string point(const LatticePoint& p) const {
    const double x = kMargin + scale_ * (static_cast<double>(p.first) + 0.5 * static_cast<double>(p.second));
    const double y = kMargin + kHeight - scale_ * kRoot3Half * static_cast<double>(p.second);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", x, y);
    return buf;
  }

  std::string polygon(const std::vector<LatticePoint>& pts) const {
    std::string out;
    for (std::size_t t = 0; t < pts.size(); ++t) {
      if (t > 0) out += ' ';
      out += point(pts[t]);
    }
    return out;
  }

  static constexpr double kMargin = 10.0;
  static constexpr double kRoot3Half = 0.8660254037844386;
  static constexpr double kHeight = 480.0 * kRoot3Half;

 private:
  double scale_;
};

std::string fill_for(const std::vector<int>& ldv, std::size_t d) {
  const auto all = weak_compositions(static_cast<int>(d) - 1, ldv.size());
  const auto it = std::find(all.begin(), all.end(), ldv);
  const double index = it == all.end() ? 0.0 : static_cast<double>(it - all.begin());
  const int hue = static_cast<int>(std::lround(360.0 * index / static_cast<double>(all.size())));
  return "hsl(" + std::to_string(hue) + ",65%,75%)";
}

}  // namespace

std::string render_svg(const CellCollection& cells) {
  if (cells.d() != 3) throw ShapeMismatch("plotting needs d = 3");
  const long n = static_cast<long>(cells.n());
  const Canvas canvas(cells.n());
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\""
      << static_cast<int>(2 * Canvas::kMargin + Canvas::kHeight) << "\">\n";
  svg << "<title>mixed subdivision of " << n << "*Delta_2, " << cells.size() << " cells</title>\n";
  svg << "<polygon points=\"" << canvas.polygon({{0, 0}, {n, 0}, {0, n}})
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& cell : cells.cells()) {
    const auto ldv = left_degree_vector(cell).entries;
    svg << "<polygon points=\"" << canvas.polygon(convex_hull(cell_vertices(cell)))
        << "\" fill=\"" << fill_for(ldv, cells.d()) << "\" stroke=\"black\" stroke-width=\"1\">"
        << "<title>" << cell.to_string() << "</title></polygon>\n";
  }
  for (const auto& cell : cells.cells()) {
    const auto rdv = right_degree_vector(cell).entries;
    if (std::any_of(rdv.begin(), rdv.end(), [](int a) { return a < 0; })) continue;
    const LatticePoint base{rdv[1], rdv[2]};
    svg << "<polygon points=\""
        << canvas.polygon({{base.first, base.second},
                           {base.first + 1, base.second},
                           {base.first, base.second + 1}})
        << "\" fill=\"none\" stroke=\"#b00\" stroke-width=\"2\" stroke-dasharray=\"4 2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tom
