#include "pizzacut/chain.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pizza {

namespace {

constexpr int kChainBisectMaxIter = 100;
constexpr int kCoverageSamples = 512;

std::vector<double> cumulative_edge_lengths(const ConvexPolygon& A) {
    const std::vector<Point2>& v = A.vertices();
    std::vector<double> cum(v.size() + 1, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        cum[i + 1] = cum[i] + distance(v[i], v[(i + 1) % v.size()]);
    }
    return cum;
}

// Halton low-discrepancy sequence, used for deterministic interior sampling.
double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

}  // namespace

BoundaryPoint boundary_point(const ConvexPolygon& A, std::size_t edge_index, double fraction) {
    const std::vector<Point2>& v = A.vertices();
    if (edge_index >= v.size()) {
        throw InvalidInput("boundary point edge index out of range");
    }
    if (!(fraction >= 0.0 && fraction < 1.0)) {
        throw InvalidInput("boundary point fraction must lie in [0, 1)");
    }
    const Point2 a = v[edge_index];
    const Point2 b = v[(edge_index + 1) % v.size()];
    return BoundaryPoint{edge_index, fraction, a + fraction * (b - a)};
}

BoundaryPoint boundary_point_at_arc(const ConvexPolygon& A, double s) {
    const std::vector<double> cum = cumulative_edge_lengths(A);
    const double perimeter = cum.back();
    s = std::fmod(s, perimeter);
    if (s < 0.0) s += perimeter;

    // locate the edge containing arc position s
    std::size_t edge = 0;
    while (edge + 1 < A.size() && cum[edge + 1] <= s) ++edge;
    const double len = cum[edge + 1] - cum[edge];
    double fraction = (s - cum[edge]) / len;
    if (fraction >= 1.0) fraction = std::nextafter(1.0, 0.0);
    return boundary_point(A, edge, fraction);
}

double arc_of(const ConvexPolygon& A, const BoundaryPoint& p) {
    const std::vector<double> cum = cumulative_edge_lengths(A);
    return cum[p.edge_index] + p.fraction * (cum[p.edge_index + 1] - cum[p.edge_index]);
}

std::pair<BoundaryPoint, OrientedLine> next_chain_point(const ConvexPolygon& A, double alpha,
                                                        const BoundaryPoint& x) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidInput("next_chain_point requires alpha in (0, 1)");
    }
    const double perimeter = A.perimeter();
    const double s_x = arc_of(A, x);

    // Advancing y counterclockwise from x sweeps the Delta^- cap area
    // monotonically from 0 to |A|.
    auto chord_line = [&](const BoundaryPoint& y) {
        const Point2 d = y.point - x.point;
        const double theta = std::atan2(d.y, d.x);
        const Point2 uperp{-std::sin(theta), std::cos(theta)};
        return OrientedLine(theta, dot(x.point, uperp));
    };

    double lo = 0.0, hi = perimeter;
    BoundaryPoint best = x;
    double best_residual = std::numeric_limits<double>::infinity();
    OrientedLine best_line(0.0, 0.0);
    for (int iter = 0; iter < kChainBisectMaxIter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const BoundaryPoint y = boundary_point_at_arc(A, s_x + mid);
        const OrientedLine line = chord_line(y);
        const double frac = section_fraction(line, A);
        const double residual = std::abs(frac - alpha);
        if (residual < best_residual) {
            best_residual = residual;
            best = y;
            best_line = line;
        }
        if (residual == 0.0) break;
        if (frac < alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-16 * perimeter) break;
    }
    if (best_residual > kEpsSection) {
        std::ostringstream msg;
        msg << "next_chain_point did not converge: residual " << best_residual << " for alpha "
            << alpha;
        throw NumericalFailure(msg.str());
    }
    return {best, best_line};
}

ChainReport build_chain(const ConvexPolygon& A, double alpha, const BoundaryPoint& x0, int n) {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw InvalidInput("build_chain requires alpha in (0, 1/2)");
    }
    if (n < 1) {
        throw InvalidInput("build_chain requires n >= 1");
    }
    const double member_tol = kEpsContainRel * A.scale();
    if (x0.edge_index >= A.size()) {
        throw InvalidInput("chain start point edge index out of range");
    }
    {
        // x0 must lie on its named edge
        const Point2 a = A.vertices()[x0.edge_index];
        const Point2 b = A.vertices()[(x0.edge_index + 1) % A.size()];
        const double len = distance(a, b);
        if (std::abs(cross(b - a, x0.point - a)) > member_tol * len ||
            dot(x0.point - a, b - a) < -member_tol * len ||
            dot(x0.point - b, a - b) < -member_tol * len) {
            throw InvalidInput("chain start point must lie on the boundary of A");
        }
    }

    ChainReport report;
    report.alpha = alpha;
    report.points.reserve(static_cast<std::size_t>(n) + 1);
    report.points.push_back(x0);
    for (int i = 0; i < n; ++i) {
        auto [y, line] = next_chain_point(A, alpha, report.points.back());
        std::optional<ConvexPolygon> cap = clip(A, line, Side::minus);
        if (!cap) {
            throw NumericalFailure("chain cap vanished");
        }
        report.points.push_back(y);
        report.lines.push_back(line);
        report.caps.push_back(Cap{line, std::move(*cap)});
    }
    report.closure_residual = distance(report.points.back().point, report.points.front().point);

    // Covering statistics: uniformly spaced boundary samples (offset by half
    // a step so they avoid the chain points, which sit exactly on cap
    // boundaries) and Halton interior samples.
    const double perimeter = A.perimeter();
    report.k = n + 1;
    for (int j = 0; j < kCoverageSamples; ++j) {
        const Point2 p =
            boundary_point_at_arc(A, perimeter * (j + 0.5) / kCoverageSamples).point;
        const int K = covering_number(report.caps, p, member_tol);
        report.boundary_samples.push_back(CoverageSample{p, K});
        report.k = std::min(report.k, K);
    }

    double xmin = A.vertices()[0].x, xmax = xmin, ymin = A.vertices()[0].y, ymax = ymin;
    for (const Point2& v : A.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    int index = 1;
    while (report.interior_samples.size() < static_cast<std::size_t>(kCoverageSamples)) {
        const Point2 p{xmin + (xmax - xmin) * halton(index, 2),
                       ymin + (ymax - ymin) * halton(index, 3)};
        ++index;
        if (!A.contains(p, 0.0)) continue;
        report.interior_samples.push_back(
            CoverageSample{p, covering_number(report.caps, p, member_tol)});
    }
    return report;
}

int covering_number(const std::vector<Cap>& caps, Point2 x, double tol) {
    int count = 0;
    for (const Cap& cap : caps) {
        if (side_of(cap.line, x) <= tol) ++count;
    }
    return count;
}

}  // namespace pizza
