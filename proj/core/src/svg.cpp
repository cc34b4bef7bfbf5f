#include "pizzacut/svg.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

namespace pizza {

namespace {

const char* kSlicePalette[] = {"#f4cf8e", "#e8b86b", "#f0dcae", "#dba858",
                               "#f7e3bd", "#e5c27f", "#edd19a", "#d9b06a"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string polygon_path(const std::vector<Point2>& verts) {
    std::ostringstream d;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        d << (i == 0 ? "M" : "L") << fmt(verts[i].x) << ' ' << fmt(verts[i].y);
    }
    d << 'Z';
    return d.str();
}

// The segment where the cut line crosses its piece: the extreme points of the
// Delta^- clip that lie on the line.
std::string cut_path(const ConvexPolygon& piece, const OrientedLine& line) {
    const double tol = 1e-9 * piece.scale();
    const Point2 u = direction_vectors(line.theta).first;
    const std::optional<ConvexPolygon> cap = clip(piece, line, Side::minus);
    const ConvexPolygon& poly = cap ? *cap : piece;
    bool found = false;
    double lo = 0.0, hi = 0.0;
    Point2 plo{}, phi{};
    for (const Point2& v : poly.vertices()) {
        if (std::abs(side_of(line, v)) > tol) continue;
        const double along = dot(v, u);
        if (!found) {
            found = true;
            lo = hi = along;
            plo = phi = v;
            continue;
        }
        if (along < lo) {
            lo = along;
            plo = v;
        }
        if (along > hi) {
            hi = along;
            phi = v;
        }
    }
    if (!found) return {};
    std::ostringstream d;
    d << 'M' << fmt(plo.x) << ' ' << fmt(plo.y) << 'L' << fmt(phi.x) << ' ' << fmt(phi.y);
    return d.str();
}

std::string svg_open(const ConvexPolygon& outline) {
    double xmin = outline.vertices()[0].x, xmax = xmin;
    double ymin = outline.vertices()[0].y, ymax = ymin;
    for (const Point2& v : outline.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    const double w = (xmax - xmin) + 2.0 * margin;
    const double h = (ymax - ymin) + 2.0 * margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"640\" viewBox=\"" << fmt(xmin - margin) << ' ' << fmt(-(ymax + margin))
        << ' ' << fmt(w) << ' ' << fmt(h) << "\">\n"
        << "<g transform=\"scale(1,-1)\" stroke-linejoin=\"round\">\n";
    return out.str();
}

constexpr const char* kSvgClose = "</g>\n</svg>\n";

}  // namespace

std::string partition_svg(const Pizza& pizza, const PartitionTree& tree) {
    std::ostringstream out;
    out << svg_open(pizza.dough());

    // dough outline, then topping
    out << "<path d=\"" << polygon_path(pizza.dough().vertices())
        << "\" fill=\"#f9f1df\" stroke=\"#6b4e2e\" stroke-width=\"0.012\"/>\n";
    out << "<path d=\"" << polygon_path(pizza.topping().vertices())
        << "\" fill=\"#d1533f\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";

    // slices, tinted from a fixed palette
    const std::vector<const PartitionNode*> leaves = tree.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        out << "<path d=\"" << polygon_path(leaves[i]->piece.vertices()) << "\" fill=\""
            << kSlicePalette[i % 8] << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
    }

    // cut segments, one path each, in preorder
    const std::function<void(const PartitionNode&)> walk = [&](const PartitionNode& node) {
        if (node.is_leaf()) return;
        out << "<path d=\"" << cut_path(node.piece, *node.cut)
            << "\" stroke=\"#2e2a26\" stroke-width=\"0.02\" fill=\"none\"/>\n";
        walk(*node.left);
        walk(*node.right);
    };
    walk(tree.root());

    out << kSvgClose;
    return out.str();
}

std::string chain_svg(const ConvexPolygon& A, const ChainReport& report) {
    std::ostringstream out;
    out << svg_open(A);

    out << "<path d=\"" << polygon_path(A.vertices())
        << "\" fill=\"#f9f1df\" stroke=\"#6b4e2e\" stroke-width=\"0.012\"/>\n";

    for (const Cap& cap : report.caps) {
        out << "<path d=\"" << polygon_path(cap.polygon.vertices())
            << "\" fill=\"#7a9bd1\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }
    for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
        const Point2 a = report.points[i].point;
        const Point2 b = report.points[i + 1].point;
        out << "<path d=\"M" << fmt(a.x) << ' ' << fmt(a.y) << 'L' << fmt(b.x) << ' '
            << fmt(b.y) << "\" stroke=\"#2e2a26\" stroke-width=\"0.015\" fill=\"none\"/>\n";
    }
    for (const BoundaryPoint& p : report.points) {
        out << "<circle cx=\"" << fmt(p.point.x) << "\" cy=\"" << fmt(p.point.y)
            << "\" r=\"0.02\" fill=\"#b3402e\"/>\n";
    }

    out << kSvgClose;
    return out.str();
}

}  // namespace pizza
