#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pizzacut/errors.hpp"

namespace pizza {

// Tolerances. Fractions are dimensionless; lengths scale with the body, so
// length-like tolerances are multiplied by ConvexPolygon::scale().
inline constexpr double kEpsGeom = 1e-12;       // convexity cross-product slack (times scale^2)
inline constexpr double kEpsAreaAbs = 1e-15;    // absolute area floor, squared input units
inline constexpr double kEpsAreaRel = 1e-9;     // relative area checks
inline constexpr double kEpsContainRel = 1e-9;  // containment slack (times scale)
inline constexpr double kEpsSection = 1e-12;    // section residual, fraction scale
inline constexpr double kVertexDedupRel = 1e-12;  // vertex dedup distance (times scale)
inline constexpr int kSectionMaxIter = 80;        // bisection budget for alpha_section

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
constexpr Point2 operator*(double s, Point2 a) { return a * s; }
constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);
double distance(Point2 a, Point2 b);

/// Oriented line, identified with a point (theta, t) of the cylinder
/// S^1 x R: the line runs in direction u(theta) = (cos theta, sin theta) and
/// passes at signed offset t from the origin. The closed half-plane on the
/// left is Delta^+ = { x : <x, u'(theta)> >= t } with u' = (-sin, cos);
/// Delta^- is the closed half-plane on the right.
struct OrientedLine {
    double theta;  // normalized to [0, 2*pi)
    double t;

    OrientedLine(double theta_in, double t_in);

    /// Same geometric line with Delta^+ / Delta^- swapped: (theta + pi, -t).
    OrientedLine reversed() const;
};

/// (u(theta), u'(theta)): the unit direction vector and its +90-degree rotation.
std::pair<Point2, Point2> direction_vectors(double theta);

/// Signed offset of p relative to the line: <p, u'(theta)> - t.
/// >= 0 means p lies in Delta^+, <= 0 means p lies in Delta^-.
double side_of(const OrientedLine& line, Point2 p);

/// A planar convex body represented by its counterclockwise vertex list.
/// Construction normalizes (drops duplicate and collinear vertices) and
/// validates convexity, orientation and non-degeneracy.
class ConvexPolygon {
public:
    /// Throws InvalidInput unless the normalized vertex list is a strictly
    /// counterclockwise convex polygon of positive area.
    static ConvexPolygon from_vertices(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const noexcept { return verts_; }
    std::size_t size() const noexcept { return verts_.size(); }

    /// Shoelace area; strictly positive.
    double area() const noexcept { return area_; }

    /// Bounding-box diagonal; the length scale used by tolerances.
    double scale() const noexcept { return scale_; }

    Point2 centroid() const;
    double perimeter() const;

    /// True if p lies inside (or within tol of) every edge half-plane.
    bool contains(Point2 p, double tol) const;

private:
    ConvexPolygon(std::vector<Point2> verts, double area, double scale)
        : verts_(std::move(verts)), area_(area), scale_(scale) {}

    std::vector<Point2> verts_;
    double area_;
    double scale_;
};

enum class Side { plus, minus };

/// Intersection of P with the closed half-plane Delta^+ (side=plus) or
/// Delta^- (side=minus). Returns std::nullopt when the intersection is empty
/// or its area falls below kEpsAreaAbs; this is a normal result, not an error.
std::optional<ConvexPolygon> clip(const ConvexPolygon& P, const OrientedLine& line, Side side);

/// |Delta^- n P| / |P|, in [0, 1].
double section_fraction(const OrientedLine& line, const ConvexPolygon& P);

/// The unique alpha-section of P with direction theta: the line (theta, t*)
/// with |Delta^- n P| = alpha |P|. t* is found by bisection over the offset
/// range spanned by the vertices; the cut area is strictly increasing in t
/// while the line crosses P. Throws NumericalFailure if the iteration budget
/// is exhausted with residual above kEpsSection.
OrientedLine alpha_section(const ConvexPolygon& P, double alpha, double theta);

/// A nested pair of convex bodies: topping A inside dough B.
class Pizza {
public:
    /// Validates A subseteq B (every vertex of A within kEpsContainRel *
    /// scale(B) of B) and |A| <= |B| up to kEpsAreaRel.
    static Pizza make(ConvexPolygon topping, ConvexPolygon dough);

    const ConvexPolygon& topping() const noexcept { return topping_; }
    const ConvexPolygon& dough() const noexcept { return dough_; }
    double topping_area() const noexcept { return topping_.area(); }
    double dough_area() const noexcept { return dough_.area(); }

private:
    Pizza(ConvexPolygon topping, ConvexPolygon dough)
        : topping_(std::move(topping)), dough_(std::move(dough)) {}

    ConvexPolygon topping_;
    ConvexPolygon dough_;
};

}  // namespace pizza
