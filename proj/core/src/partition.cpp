#include "pizzacut/partition.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "pizzacut/generators.hpp"
#include "pizzacut/sections.hpp"

namespace pizza {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSubcaseScanSamples = 1024;
constexpr int kThetaBisectMaxIter = 200;

std::size_t count_leaves(const PartitionNode& node) {
    if (node.is_leaf()) return 1;
    return count_leaves(*node.left) + count_leaves(*node.right);
}

ConvexPolygon require_clip(const ConvexPolygon& piece, const OrientedLine& line, Side side,
                           const char* what) {
    std::optional<ConvexPolygon> result = clip(piece, line, side);
    if (!result) {
        std::ostringstream msg;
        msg << what << ": cut produced an empty piece";
        throw NumericalFailure(msg.str());
    }
    return std::move(*result);
}

// One recursion step of Theorem 2's construction. `piece` carries
// m/n_total of the dough and `topping` (= A intersected with piece) carries
// m/n_total of the topping, so a relatively fair split of the piece is an
// absolutely fair one.
std::unique_ptr<PartitionNode> partition_rec(ConvexPolygon piece,
                                             std::optional<ConvexPolygon> topping, int m) {
    if (m == 1) {
        return std::make_unique<PartitionNode>(std::move(piece));
    }
    if (!topping) {
        throw NumericalFailure("fair_partition: topping piece vanished during recursion");
    }

    const Pizza sub = Pizza::make(*topping, piece);

    if (m % 4 == 0 || m == 2) {
        // n = 2 and n = 4k share the halving step; halves recurse with m/2.
        const OrientedLine cut = find_halving_cut(sub);
        ConvexPolygon left_piece = require_clip(piece, cut, Side::minus, "fair_partition");
        ConvexPolygon right_piece = require_clip(piece, cut, Side::plus, "fair_partition");
        std::optional<ConvexPolygon> left_top = clip(*topping, cut, Side::minus);
        std::optional<ConvexPolygon> right_top = clip(*topping, cut, Side::plus);
        auto left = partition_rec(std::move(left_piece), std::move(left_top), m / 2);
        auto right = partition_rec(std::move(right_piece), std::move(right_top), m / 2);
        return std::make_unique<PartitionNode>(std::move(piece), cut, std::move(left),
                                               std::move(right));
    }

    // m = 4k + 2: alpha = 2k / (4k + 2)
    const int k = (m - 2) / 4;
    const double alpha = static_cast<double>(2 * k) / static_cast<double>(m);

    // Subcase 1: look for a direction where the alpha-section of the piece
    // also cuts off an alpha-fraction of the topping.
    auto h_at = [&](double theta) {
        const OrientedLine line = alpha_section(piece, alpha, theta);
        return std::make_pair(section_fraction(line, *topping) - alpha, line);
    };

    std::optional<OrientedLine> simultaneous;
    const double step = kTwoPi / kSubcaseScanSamples;
    std::vector<double> h(kSubcaseScanSamples);
    for (int j = 0; j < kSubcaseScanSamples && !simultaneous; ++j) {
        auto [hj, line] = h_at(step * j);
        h[static_cast<std::size_t>(j)] = hj;
        if (std::abs(hj) <= kEpsSection) simultaneous = line;
    }
    if (!simultaneous) {
        for (int j = 0; j < kSubcaseScanSamples && !simultaneous; ++j) {
            const double h0 = h[static_cast<std::size_t>(j)];
            const double h1 = h[static_cast<std::size_t>((j + 1) % kSubcaseScanSamples)];
            if ((h0 < 0.0) == (h1 < 0.0)) continue;
            double lo = step * j, hi = step * (j + 1);
            double sign_lo = h0;
            for (int iter = 0; iter < kThetaBisectMaxIter && !simultaneous; ++iter) {
                const double mid = 0.5 * (lo + hi);
                auto [hm, line] = h_at(mid);
                if (std::abs(hm) <= kEpsSection) {
                    simultaneous = line;
                } else if ((hm < 0.0) == (sign_lo < 0.0)) {
                    lo = mid;
                    sign_lo = hm;
                } else {
                    hi = mid;
                }
            }
            if (!simultaneous) {
                throw NumericalFailure(
                    "fair_partition: subcase-1 bisection exhausted its budget");
            }
        }
    }

    if (simultaneous) {
        // Delta^- piece has dough alpha|piece| and topping alpha|topping|;
        // it recurses with 2k, the complement with 2k + 2.
        const OrientedLine cut = *simultaneous;
        ConvexPolygon left_piece = require_clip(piece, cut, Side::minus, "fair_partition");
        ConvexPolygon right_piece = require_clip(piece, cut, Side::plus, "fair_partition");
        std::optional<ConvexPolygon> left_top = clip(*topping, cut, Side::minus);
        std::optional<ConvexPolygon> right_top = clip(*topping, cut, Side::plus);
        auto left = partition_rec(std::move(left_piece), std::move(left_top), 2 * k);
        auto right = partition_rec(std::move(right_piece), std::move(right_top), 2 * k + 2);
        return std::make_unique<PartitionNode>(std::move(piece), cut, std::move(left),
                                               std::move(right));
    }

    // Subcase 2: halve, then cut one fair slice from each half; the
    // remainders recurse with 2k slices each.
    const OrientedLine halving = find_halving_cut(sub);
    auto build_half = [&](Side side) {
        ConvexPolygon half = require_clip(piece, halving, side, "fair_partition");
        const FairSlice fs = fair_slice_from_half(sub, half, halving, m);
        std::optional<ConvexPolygon> half_top = clip(*topping, halving, side);
        std::optional<ConvexPolygon> rem_top =
            half_top ? clip(*half_top, fs.cut, Side::plus) : std::nullopt;
        auto slice_leaf = std::make_unique<PartitionNode>(fs.slice);
        auto rest = partition_rec(fs.remainder, std::move(rem_top), 2 * k);
        return std::make_unique<PartitionNode>(std::move(half), fs.cut, std::move(slice_leaf),
                                               std::move(rest));
    };
    auto left = build_half(Side::minus);
    auto right = build_half(Side::plus);
    return std::make_unique<PartitionNode>(std::move(piece), halving, std::move(left),
                                           std::move(right));
}

}  // namespace

PartitionTree::PartitionTree(std::unique_ptr<PartitionNode> root) : root_(std::move(root)) {
    if (!root_) throw InvalidInput("partition tree requires a root node");
    leaf_count_ = count_leaves(*root_);
}

std::vector<const PartitionNode*> PartitionTree::leaves() const {
    std::vector<const PartitionNode*> out;
    out.reserve(leaf_count_);
    const std::function<void(const PartitionNode&)> walk = [&](const PartitionNode& node) {
        if (node.is_leaf()) {
            out.push_back(&node);
            return;
        }
        walk(*node.left);
        walk(*node.right);
    };
    walk(*root_);
    return out;
}

PartitionTree fair_partition(const Pizza& pizza, int n) {
    if (n < 2) {
        throw InvalidInput("fair_partition requires n >= 2");
    }
    if (n % 2 != 0) {
        std::ostringstream msg;
        msg << "fair partition into " << n
            << " slices requested: such a partition may not exist for odd n";
        throw OddNError(msg.str());
    }
    auto root = partition_rec(pizza.dough(), pizza.topping(), n);
    return PartitionTree(std::move(root));
}

FairSlice fair_slice_from_half(const Pizza& pizza, const ConvexPolygon& half,
                               const OrientedLine& halving_cut, int n) {
    if (n < 6 || n % 4 != 2) {
        throw InvalidInput("fair_slice_from_half requires n = 4k + 2 with k >= 1");
    }
    const double target_dough = pizza.dough_area() / n;
    const double target_topping = pizza.topping_area() / n;

    // Topping inside the half. A is split by the halving cut, so clip on the
    // half's side of it.
    const bool half_is_minus = side_of(halving_cut, half.centroid()) < 0.0;
    const std::optional<ConvexPolygon> topping_half =
        clip(pizza.topping(), halving_cut, half_is_minus ? Side::minus : Side::plus);
    if (!topping_half) {
        throw NumericalFailure("fair_slice_from_half: half carries no topping");
    }

    // The candidate slice in direction theta is the cap of the half with
    // dough area exactly |B|/n.
    const double cap_fraction = target_dough / half.area();
    const double topping_half_area = topping_half->area();
    auto topping_of_cap = [&](double theta) {
        const OrientedLine line = alpha_section(half, cap_fraction, theta);
        return std::make_pair(section_fraction(line, *topping_half) * topping_half_area, line);
    };
    auto make_result = [&](const OrientedLine& line) {
        return FairSlice{require_clip(half, line, Side::minus, "fair_slice_from_half"),
                         require_clip(half, line, Side::plus, "fair_slice_from_half"), line};
    };
    const double tol = kEpsSection * pizza.topping_area();

    // Endpoint 1: the strip between the halving cut and a parallel line. Its
    // Delta^- side must contain the cut edge, which fixes the orientation.
    const double theta1 =
        half_is_minus ? halving_cut.theta + std::numbers::pi : halving_cut.theta;
    auto [f1, line1] = topping_of_cap(theta1);
    if (std::abs(f1 - target_topping) <= tol) return make_result(line1);

    // Endpoint 2: the corollary search gives a cap with topping fraction at
    // most the dough fraction.
    const Pizza half_pizza = Pizza::make(*topping_half, half);
    const SimultaneousSection corollary = find_corollary_section(half_pizza, cap_fraction);
    const double theta2 = corollary.line.theta;
    auto [f2, line2] = topping_of_cap(theta2);
    if (std::abs(f2 - target_topping) <= tol) return make_result(line2);

    if (!(f1 > target_topping && f2 < target_topping)) {
        std::ostringstream msg;
        msg << "fair_slice_from_half: bracket failed, topping(theta1) = " << f1
            << ", topping(theta2) = " << f2 << ", target = " << target_topping;
        throw NumericalFailure(msg.str());
    }

    // Bisect on the arc from theta1 to theta2 (increasing direction).
    double arc = std::fmod(theta2 - theta1, kTwoPi);
    if (arc < 0.0) arc += kTwoPi;
    double lo = 0.0, hi = arc;  // topping(lo) > target > topping(hi)
    for (int iter = 0; iter < kThetaBisectMaxIter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        auto [fm, line] = topping_of_cap(theta1 + mid);
        if (std::abs(fm - target_topping) <= tol) return make_result(line);
        if (fm > target_topping) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NumericalFailure("fair_slice_from_half: bisection exhausted its budget");
}

FairnessReport verify_partition(const Pizza& pizza, const PartitionTree& tree, double tol) {
    FairnessReport report;
    report.tolerance = tol;

    // Walk root-to-leaf paths, clipping the topping by each recorded cut.
    const std::function<void(const PartitionNode&, const std::optional<ConvexPolygon>&)> walk =
        [&](const PartitionNode& node, const std::optional<ConvexPolygon>& topping) {
            if (node.is_leaf()) {
                report.dough_areas.push_back(node.piece.area());
                report.topping_areas.push_back(topping ? topping->area() : 0.0);
                return;
            }
            const OrientedLine& cut = *node.cut;
            std::optional<ConvexPolygon> left_top, right_top;
            if (topping) {
                left_top = clip(*topping, cut, Side::minus);
                right_top = clip(*topping, cut, Side::plus);
            }
            walk(*node.left, left_top);
            walk(*node.right, right_top);
        };
    walk(tree.root(), pizza.topping());

    const double n = static_cast<double>(report.dough_areas.size());
    const double dough_target = pizza.dough_area() / n;
    const double topping_target = pizza.topping_area() / n;
    report.max_dough_deviation = 0.0;
    report.max_topping_deviation = 0.0;
    report.dough_total = 0.0;
    report.topping_total = 0.0;
    for (std::size_t i = 0; i < report.dough_areas.size(); ++i) {
        report.dough_total += report.dough_areas[i];
        report.topping_total += report.topping_areas[i];
        report.max_dough_deviation =
            std::max(report.max_dough_deviation,
                     std::abs(report.dough_areas[i] - dough_target) / dough_target);
        report.max_topping_deviation =
            std::max(report.max_topping_deviation,
                     std::abs(report.topping_areas[i] - topping_target) / topping_target);
    }
    report.fair = report.max_dough_deviation <= tol && report.max_topping_deviation <= tol;
    return report;
}

DeficiencyReport check_disk_deficiency(double r, double R, int m,
                                       const std::vector<double>& betas) {
    if (!(r > 0.0 && r <= R)) {
        throw InvalidInput("check_disk_deficiency requires 0 < r <= R");
    }
    if (m < 64) {
        throw InvalidInput("check_disk_deficiency requires at least 64 polygon vertices");
    }
    for (double beta : betas) {
        if (!(beta > 0.0 && beta < 0.5)) {
            throw InvalidInput("check_disk_deficiency requires every beta in (0, 1/2)");
        }
    }

    const ConvexPolygon topping = make_regular_polygon(m, r);
    const ConvexPolygon dough = make_regular_polygon(m, R);

    DeficiencyReport report;
    report.radius_topping = r;
    report.radius_dough = R;
    report.vertex_count = m;
    report.margin = 10.0 * (kTwoPi / m) * (kTwoPi / m);

    constexpr int kDirections = 256;
    const double step = kTwoPi / kDirections;
    for (double beta : betas) {
        DeficiencyEntry entry{beta, std::numeric_limits<double>::infinity(), 0.0, false};
        for (int j = 0; j < kDirections; ++j) {
            const OrientedLine line = alpha_section(dough, beta, step * j);
            const double frac = section_fraction(line, topping);
            entry.max_topping_fraction = std::max(entry.max_topping_fraction, frac);
            entry.min_slack = std::min(entry.min_slack, beta - frac);
        }
        entry.witness_holds = entry.min_slack > report.margin;
        if (entry.min_slack <= -report.margin) {
            std::ostringstream msg;
            msg << "disk deficiency witness failed for beta = " << beta
                << ": topping fraction " << entry.max_topping_fraction
                << " exceeds beta by more than the discretization margin " << report.margin;
            throw WitnessFailure(msg.str());
        }
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace pizza
