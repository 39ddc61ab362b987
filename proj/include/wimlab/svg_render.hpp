#pragma once

#include <string>

#include "wimlab/benzenoid.hpp"
#include "wimlab/lattice.hpp"

namespace wimlab {

// Deterministic rendering: hexagon side 30, fixed stroke widths and palette.
// One <polygon> per hexagon, one <line class="edge"> per graph edge, three
// <line class="bond"> per selected edge, one (i,j) label per v-bar.
std::string render_kekule_svg(const KekuleStructure& structure);

// Thick polylines over a dotted grid, endpoints labeled a1..am and b1..bm.
std::string render_paths_svg(const PathTuple& tuple);

}  // namespace wimlab
