#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pizzacut/geom.hpp"

namespace pizza {

/// A point on the boundary of a polygon, addressed as a position along one of
/// its edges. `fraction` is in [0, 1) measured from the edge's start vertex.
struct BoundaryPoint {
    std::size_t edge_index;
    double fraction;
    Point2 point;  // cached coordinates
};

/// Constructs a boundary point on edge `edge_index` of A at relative position
/// `fraction`, caching the coordinates.
BoundaryPoint boundary_point(const ConvexPolygon& A, std::size_t edge_index, double fraction);

/// Boundary point at arc length s measured counterclockwise from vertex 0;
/// s is taken modulo the perimeter.
BoundaryPoint boundary_point_at_arc(const ConvexPolygon& A, double s);

/// Arc-length coordinate of a boundary point (inverse of the above).
double arc_of(const ConvexPolygon& A, const BoundaryPoint& p);

/// A chain cap: the polygon Delta^- n A together with its defining line.
struct Cap {
    OrientedLine line;
    ConvexPolygon polygon;
};

struct CoverageSample {
    Point2 point;
    int count;  // K(point)
};

/// Consecutive alpha-section chain on the boundary of A, with caps and
/// covering statistics.
struct ChainReport {
    double alpha;
    std::vector<BoundaryPoint> points;  // x_0 ... x_n
    std::vector<OrientedLine> lines;    // D_1 ... D_n
    std::vector<Cap> caps;              // D_i^- n A
    int k;                              // min covering number over boundary samples
    std::vector<CoverageSample> boundary_samples;
    std::vector<CoverageSample> interior_samples;
    double closure_residual;  // |x_n - x_0|
};

/// The next chain point: y on the boundary of A, counterclockwise from x,
/// such that the chord x -> y cuts a region of area alpha|A| on its Delta^-
/// side. Found by bisection on y's arc position; the cap area is monotone as
/// y advances.
std::pair<BoundaryPoint, OrientedLine> next_chain_point(const ConvexPolygon& A, double alpha,
                                                        const BoundaryPoint& x);

/// Iterates next_chain_point n times from x0 and gathers the proof
/// construction's statistics: caps, covering numbers at 512 boundary and 512
/// quasi-random interior samples, and k = min boundary covering number.
ChainReport build_chain(const ConvexPolygon& A, double alpha, const BoundaryPoint& x0, int n);

/// Number of caps whose defining half-plane Delta^- contains x
/// (side_of(line, x) <= tol counts as inside).
int covering_number(const std::vector<Cap>& caps, Point2 x, double tol);

}  // namespace pizza
