#pragma once

#include <string>

#include "tom/subdivision.hpp"

namespace tom {

// Static drawing of the mixed subdivision of n*Delta_2: cells filled by left
// degree vector, each cell's unit simplex outlined at its right degree
// vector. Throws ShapeMismatch unless d == 3.
std::string render_svg(const CellCollection& cells);

}  // namespace tom
