#include "pizzacut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pizza {

namespace {

// Uniform double in [0, 1) from the engine's raw 64-bit output; the mapping
// is fixed so generated fixtures are reproducible across platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Andrew monotone chain; returns the hull counterclockwise.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

ConvexPolygon square(double x0, double y0, double side) {
    return ConvexPolygon::from_vertices(
        {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}});
}

}  // namespace

ConvexPolygon make_regular_polygon(int m, double radius, Point2 center) {
    if (m < 3) throw InvalidInput("regular polygon requires at least 3 vertices");
    if (!(radius > 0.0)) throw InvalidInput("regular polygon requires positive radius");
    std::vector<Point2> verts;
    verts.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / m;
        verts.push_back({center.x + radius * std::cos(angle),
                         center.y + radius * std::sin(angle)});
    }
    return ConvexPolygon::from_vertices(std::move(verts));
}

Pizza make_disk_pair(double r, double R, int m) {
    if (!(r > 0.0 && r <= R)) throw InvalidInput("disk pair requires 0 < r <= R");
    if (m < 64) throw InvalidInput("disk pair requires at least 64 polygon vertices");
    return Pizza::make(make_regular_polygon(m, r), make_regular_polygon(m, R));
}

Pizza make_square_pair(double a, double b) {
    if (!(a > 0.0 && a <= b)) throw InvalidInput("square pair requires 0 < a <= b");
    const double offset = 0.5 * (b - a);
    return Pizza::make(square(offset, offset, a), square(0.0, 0.0, b));
}

Pizza make_offset_square(double a, double b) {
    if (!(a > 0.0 && a <= b)) throw InvalidInput("offset square requires 0 < a <= b");
    return Pizza::make(square(0.0, 0.0, a), square(0.0, 0.0, b));
}

Pizza make_random_pair(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // dough: hull of random points, rejected until it has >= 6 vertices
        std::vector<Point2> pts(20);
        for (Point2& p : pts) p = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        std::vector<Point2> hull = convex_hull(std::move(pts));
        if (hull.size() < 6) continue;
        ConvexPolygon dough = ConvexPolygon::from_vertices(std::move(hull));

        // topping: shrunk hull of points sampled inside the dough
        double xmin = dough.vertices()[0].x, xmax = xmin;
        double ymin = dough.vertices()[0].y, ymax = ymin;
        for (const Point2& v : dough.vertices()) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
        std::vector<Point2> inner;
        int guard = 0;
        while (inner.size() < 25 && guard < 100000) {
            ++guard;
            const Point2 p{uniform(rng, xmin, xmax), uniform(rng, ymin, ymax)};
            if (dough.contains(p, 0.0)) inner.push_back(p);
        }
        std::vector<Point2> top_hull = convex_hull(std::move(inner));
        if (top_hull.size() < 3) continue;
        Point2 c{0.0, 0.0};
        for (const Point2& p : top_hull) c = c + p;
        c = c * (1.0 / static_cast<double>(top_hull.size()));
        for (Point2& p : top_hull) p = c + 0.9 * (p - c);

        try {
            ConvexPolygon topping = ConvexPolygon::from_vertices(std::move(top_hull));
            return Pizza::make(std::move(topping), std::move(dough));
        } catch (const InvalidInput&) {
            continue;  // degenerate draw, try again
        }
    }
    throw NumericalFailure("make_random_pair failed to produce a valid pizza");
}

ConvexPolygon make_random_convex(std::uint64_t seed, int max_points) {
    if (max_points < 3) throw InvalidInput("random convex polygon requires max_points >= 3");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Point2> pts(static_cast<std::size_t>(max_points));
        for (Point2& p : pts) p = {uniform01(rng), uniform01(rng)};
        std::vector<Point2> hull = convex_hull(std::move(pts));
        if (hull.size() < 3) continue;
        try {
            return ConvexPolygon::from_vertices(std::move(hull));
        } catch (const InvalidInput&) {
            continue;
        }
    }
    throw NumericalFailure("make_random_convex failed to produce a valid polygon");
}

}  // namespace pizza
