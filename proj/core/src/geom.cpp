#include "pizzacut/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pizza {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double shoelace(const std::vector<Point2>& verts) {
    double twice = 0.0;
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(verts[i], verts[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double bbox_diagonal(const std::vector<Point2>& verts) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = xmax;
    for (const Point2& v : verts) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

// Drops consecutive near-duplicate vertices, then collinear middle vertices,
// iterating until stable. Works cyclically. The two passes stay separate: a
// duplicate neighbor would make the collinearity cross product vanish and
// take a genuine corner with it.
std::vector<Point2> normalize_ring(std::vector<Point2> verts) {
    const double diag = bbox_diagonal(verts);
    const double dedup = kVertexDedupRel * std::max(diag, 1e-300);
    const double collinear = kEpsGeom * std::max(diag * diag, 1e-300);

    {
        std::vector<Point2> out;
        out.reserve(verts.size());
        for (const Point2& p : verts) {
            if (out.empty() || distance(out.back(), p) > dedup) out.push_back(p);
        }
        while (out.size() >= 2 && distance(out.front(), out.back()) <= dedup) out.pop_back();
        verts = std::move(out);
    }

    // Collinear middles are removed stack-style so each test sees the last
    // kept neighbor; a naive sweep can drop two adjacent corners that are
    // only collinear against each other and collapse a valid ring.
    std::vector<Point2> out;
    out.reserve(verts.size());
    for (const Point2& p : verts) {
        out.push_back(p);
        while (out.size() >= 3) {
            const Point2& a = out[out.size() - 3];
            const Point2& b = out[out.size() - 2];
            const Point2& c = out[out.size() - 1];
            if (std::abs(cross(b - a, c - b)) > collinear) break;
            out.erase(out.end() - 2);
        }
    }
    // the ring is cyclic: the first and last vertices can still be middles
    bool changed = true;
    while (changed && out.size() >= 3) {
        changed = false;
        std::size_t n = out.size();
        if (std::abs(cross(out[n - 1] - out[n - 2], out[0] - out[n - 1])) <= collinear) {
            out.pop_back();
            changed = true;
            continue;
        }
        n = out.size();
        if (std::abs(cross(out[0] - out[n - 1], out[1] - out[0])) <= collinear) {
            out.erase(out.begin());
            changed = true;
        }
    }
    return out;
}

}  // namespace

double norm(Point2 a) { return std::hypot(a.x, a.y); }

double distance(Point2 a, Point2 b) { return norm(a - b); }

OrientedLine::OrientedLine(double theta_in, double t_in) : theta(theta_in), t(t_in) {
    if (!std::isfinite(theta) || !std::isfinite(t)) {
        throw InvalidInput("oriented line requires finite (theta, t)");
    }
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;  // fmod can land exactly on 2*pi
}

OrientedLine OrientedLine::reversed() const { return OrientedLine(theta + std::numbers::pi, -t); }

std::pair<Point2, Point2> direction_vectors(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {Point2{c, s}, Point2{-s, c}};
}

double side_of(const OrientedLine& line, Point2 p) {
    const auto [u, uperp] = direction_vectors(line.theta);
    return dot(p, uperp) - line.t;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> vertices) {
    if (vertices.size() < 3) {
        throw InvalidInput("polygon requires at least 3 vertices");
    }
    for (const Point2& v : vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            throw InvalidInput("polygon vertices must be finite");
        }
    }
    vertices = normalize_ring(std::move(vertices));
    if (vertices.size() < 3) {
        throw InvalidInput("polygon degenerates to fewer than 3 vertices after normalization");
    }

    const double area = shoelace(vertices);
    if (area <= 0.0) {
        throw InvalidInput("polygon vertices must be in counterclockwise order");
    }
    if (area <= kEpsAreaAbs) {
        throw InvalidInput("polygon area is below the degeneracy threshold");
    }

    const double diag = bbox_diagonal(vertices);
    const double slack = kEpsGeom * diag * diag;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        const Point2& c = vertices[(i + 2) % n];
        if (cross(b - a, c - b) < -slack) {
            std::ostringstream msg;
            msg << "polygon is not convex at vertex " << (i + 1) % n;
            throw InvalidInput(msg.str());
        }
    }
    return ConvexPolygon(std::move(vertices), area, diag);
}

Point2 ConvexPolygon::centroid() const {
    // Area-weighted centroid of the polygon.
    double cx = 0.0, cy = 0.0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = verts_[i];
        const Point2& q = verts_[(i + 1) % n];
        const double w = cross(p, q);
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    const double inv = 1.0 / (6.0 * area_);
    return {cx * inv, cy * inv};
}

double ConvexPolygon::perimeter() const {
    double total = 0.0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += distance(verts_[i], verts_[(i + 1) % n]);
    }
    return total;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = verts_[i];
        const Point2 b = verts_[(i + 1) % n];
        const double len = distance(a, b);
        // signed distance of p to the edge line, positive inside
        if (cross(b - a, p - a) < -tol * len) return false;
    }
    return true;
}

namespace {

// Sutherland-Hodgman against a single half-plane. The raw ring may contain
// duplicate or collinear vertices; they contribute zero area, so the ring's
// shoelace area varies continuously with the line, which the root finders
// rely on.
std::vector<Point2> clip_ring(const ConvexPolygon& P, const OrientedLine& line, Side side) {
    const double sign = (side == Side::plus) ? 1.0 : -1.0;
    const std::vector<Point2>& verts = P.vertices();
    const std::size_t n = verts.size();

    const Point2 uperp = direction_vectors(line.theta).second;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = sign * (dot(verts[i], uperp) - line.t);

    std::vector<Point2> out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Point2& s = verts[i];
        const Point2& e = verts[j];
        const bool s_in = d[i] >= 0.0;
        const bool e_in = d[j] >= 0.0;
        if (s_in != e_in) {
            const double f = d[i] / (d[i] - d[j]);
            out.push_back(s + f * (e - s));
        }
        if (e_in) out.push_back(e);
    }
    return out;
}

}  // namespace

std::optional<ConvexPolygon> clip(const ConvexPolygon& P, const OrientedLine& line, Side side) {
    std::vector<Point2> out = clip_ring(P, line, side);
    if (out.size() < 3) return std::nullopt;

    // Slivers that normalization collapses count as empty; downstream area
    // computations must see an exact 0, not a tiny polygon.
    std::vector<Point2> cleaned = normalize_ring(std::move(out));
    if (cleaned.size() < 3 || shoelace(cleaned) <= kEpsAreaAbs) return std::nullopt;

    return ConvexPolygon::from_vertices(std::move(cleaned));
}

double section_fraction(const OrientedLine& line, const ConvexPolygon& P) {
    const std::vector<Point2> ring = clip_ring(P, line, Side::minus);
    if (ring.size() < 3) return 0.0;
    const double area = shoelace(ring);
    if (area <= kEpsAreaAbs) return 0.0;
    return std::min(area / P.area(), 1.0);
}

OrientedLine alpha_section(const ConvexPolygon& P, double alpha, double theta) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidInput("alpha_section requires alpha in (0, 1)");
    }
    const auto [u, uperp] = direction_vectors(theta);

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Point2& v : P.vertices()) {
        const double d = dot(v, uperp);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const double range = hi - lo;

    // fraction(t) increases monotonically from 0 at t=lo to 1 at t=hi
    double best_t = 0.5 * (lo + hi);
    double best_residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < kSectionMaxIter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f = section_fraction(OrientedLine(theta, mid), P);
        const double residual = std::abs(f - alpha);
        if (residual < best_residual) {
            best_residual = residual;
            best_t = mid;
        }
        if (residual == 0.0) break;
        if (f < alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-16 * range) break;
    }
    if (best_residual > kEpsSection) {
        std::ostringstream msg;
        msg << "alpha_section did not converge: residual " << best_residual << " for alpha "
            << alpha << ", theta " << theta;
        throw NumericalFailure(msg.str());
    }
    return OrientedLine(theta, best_t);
}

Pizza Pizza::make(ConvexPolygon topping, ConvexPolygon dough) {
    const double tol = kEpsContainRel * dough.scale();
    for (const Point2& v : topping.vertices()) {
        if (!dough.contains(v, tol)) {
            throw InvalidInput("topping must be contained in the dough");
        }
    }
    if (topping.area() > dough.area() * (1.0 + kEpsAreaRel)) {
        throw InvalidInput("topping area exceeds dough area");
    }
    return Pizza(std::move(topping), std::move(dough));
}

}  // namespace pizza
