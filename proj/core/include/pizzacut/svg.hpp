#pragma once

#include <string>

#include "pizzacut/chain.hpp"
#include "pizzacut/geom.hpp"
#include "pizzacut/partition.hpp"

namespace pizza {

/// SVG 1.1 rendering of a partition: dough outline, shaded topping, one path
/// per slice and one per cut. Fixed viewBox fitted to the dough with a 5%
/// margin; fixed styling.
std::string partition_svg(const Pizza& pizza, const PartitionTree& tree);

/// SVG 1.1 overlay of a chain construction on A: the boundary, the chord
/// lines and the shaded caps.
std::string chain_svg(const ConvexPolygon& A, const ChainReport& report);

}  // namespace pizza
