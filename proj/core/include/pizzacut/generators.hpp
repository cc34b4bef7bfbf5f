#pragma once

#include <cstdint>

#include "pizzacut/geom.hpp"

namespace pizza {

/// Regular m-gon inscribed in the circle of the given radius, vertex 0 at
/// angle 0, counterclockwise.
ConvexPolygon make_regular_polygon(int m, double radius, Point2 center = {0.0, 0.0});

/// Concentric regular m-gons: topping radius r, dough radius R, 0 < r <= R.
Pizza make_disk_pair(double r, double R, int m = 512);

/// Axis-aligned squares sharing a center: A of side a centered in B = [0,b]^2.
Pizza make_square_pair(double a, double b);

/// Offset square-in-square: A = [0,a]^2 inside B = [0,b]^2 (shared corner).
Pizza make_offset_square(double a, double b);

/// Seeded random pizza: the dough is the convex hull of random points
/// (resampled until it has at least 6 vertices), the topping is a shrunk hull
/// of points sampled inside the dough. Deterministic for a given seed.
Pizza make_random_pair(std::uint64_t seed);

/// Seeded random convex polygon with at most max_points hull vertices,
/// contained in the unit square.
ConvexPolygon make_random_convex(std::uint64_t seed, int max_points = 12);

}  // namespace pizza
