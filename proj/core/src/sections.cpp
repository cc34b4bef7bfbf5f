#include "pizzacut/sections.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace pizza {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kHalvingScanSamples = 256;  // intervals of [0, pi]
constexpr int kThetaBisectMaxIter = 200;

struct Candidate {
    double theta;
    double companion;  // fraction of the other body
};

// Golden-section refinement of the companion fraction around a bracketed
// extremum. Maximizes when sign = +1, minimizes when sign = -1. Returns the
// best evaluated candidate (never worse than the entry point).
Candidate golden_refine(const std::function<double(double)>& companion_at, double lo, double hi,
                        double sign, Candidate best) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = companion_at(x1);
    double f2 = companion_at(x2);
    auto consider = [&](double theta, double value) {
        if (sign * value > sign * best.companion) best = {theta, value};
    };
    consider(x1, f1);
    consider(x2, f2);
    while (b - a > 1e-12) {
        if (sign * f1 > sign * f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = companion_at(x1);
            consider(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = companion_at(x2);
            consider(x2, f2);
        }
    }
    return best;
}

SimultaneousSection search_extremum(const Pizza& pizza, double alpha, int samples,
                                    SectionedBody sectioned, double sign) {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw InvalidInput("simultaneous-section search requires alpha in (0, 1/2)");
    }
    if (samples < 16) {
        throw InvalidInput("simultaneous-section search requires at least 16 samples");
    }
    const ConvexPolygon& sect =
        sectioned == SectionedBody::topping ? pizza.topping() : pizza.dough();
    const ConvexPolygon& other =
        sectioned == SectionedBody::topping ? pizza.dough() : pizza.topping();

    auto companion_at = [&](double theta) {
        return section_fraction(alpha_section(sect, alpha, theta), other);
    };

    const double step = kTwoPi / samples;
    std::vector<double> values(static_cast<std::size_t>(samples));
    std::size_t best_idx = 0;
    double vmin = 2.0, vmax = -1.0;
    for (int j = 0; j < samples; ++j) {
        const double v = companion_at(step * j);
        values[static_cast<std::size_t>(j)] = v;
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
        if (sign * v > sign * values[best_idx]) best_idx = static_cast<std::size_t>(j);
    }

    Candidate best{step * static_cast<double>(best_idx), values[best_idx]};
    if (vmax - vmin > kEpsSection) {
        // refine within the bracket formed by the neighbors of the best sample
        const double center = step * static_cast<double>(best_idx);
        best = golden_refine(companion_at, center - step, center + step, sign, best);
    } else {
        // flat profile (e.g. identical bodies): deterministic tie-break on the
        // smallest sampled theta
        best = {0.0, values[0]};
    }

    const OrientedLine line = alpha_section(sect, alpha, best.theta);
    const double achieved = section_fraction(line, sect);
    const double beta = section_fraction(line, other);
    if (sign * beta < sign * alpha - kEpsTheorem) {
        std::ostringstream msg;
        msg << "section search failed the guaranteed bound: alpha " << alpha << ", best beta "
            << beta << " (" << (sign > 0 ? "expected beta >= alpha" : "expected beta <= alpha")
            << ")";
        throw TheoremViolation(msg.str());
    }
    return SimultaneousSection{line, achieved, beta, std::abs(achieved - alpha)};
}

}  // namespace

SectionProfile profile(const Pizza& pizza, double alpha, SectionedBody which, int samples) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidInput("profile requires alpha in (0, 1)");
    }
    if (samples < 16) {
        throw InvalidInput("profile requires at least 16 samples");
    }
    const ConvexPolygon& sect = which == SectionedBody::topping ? pizza.topping() : pizza.dough();
    const ConvexPolygon& other = which == SectionedBody::topping ? pizza.dough() : pizza.topping();

    SectionProfile result;
    result.alpha = alpha;
    result.body_tag = which;
    result.thetas.reserve(static_cast<std::size_t>(samples));
    result.offsets.reserve(static_cast<std::size_t>(samples));
    result.fractions.reserve(static_cast<std::size_t>(samples));

    const double step = kTwoPi / samples;
    for (int j = 0; j < samples; ++j) {
        const double theta = step * j;
        const OrientedLine line = alpha_section(sect, alpha, theta);
        result.thetas.push_back(theta);
        result.offsets.push_back(line.t);
        result.fractions.push_back(section_fraction(line, other));
    }
    return result;
}

SimultaneousSection find_simultaneous_section(const Pizza& pizza, double alpha, int samples) {
    return search_extremum(pizza, alpha, samples, SectionedBody::topping, +1.0);
}

SimultaneousSection find_corollary_section(const Pizza& pizza, double alpha, int samples) {
    return search_extremum(pizza, alpha, samples, SectionedBody::dough, -1.0);
}

OrientedLine find_halving_cut(const Pizza& pizza) {
    const ConvexPolygon& A = pizza.topping();
    const ConvexPolygon& B = pizza.dough();

    auto g_at = [&](double theta) {
        const OrientedLine line = alpha_section(B, 0.5, theta);
        return std::make_pair(section_fraction(line, A) - 0.5, line);
    };

    // g(theta + pi) = -g(theta): the same line with orientation reversed, so a
    // sign change is guaranteed on [0, pi].
    const double step = std::numbers::pi / kHalvingScanSamples;
    double prev_g = 0.0;
    double prev_theta = 0.0;
    for (int j = 0; j <= kHalvingScanSamples; ++j) {
        const double theta = step * j;
        auto [g, line] = g_at(theta);
        if (std::abs(g) <= kEpsSection) return line;
        if (j > 0 && (g < 0.0) != (prev_g < 0.0)) {
            // bisect the first sign-change bracket
            double lo = prev_theta, hi = theta;
            double g_lo = prev_g;
            for (int iter = 0; iter < kThetaBisectMaxIter; ++iter) {
                const double mid = 0.5 * (lo + hi);
                auto [gm, mline] = g_at(mid);
                if (std::abs(gm) <= kEpsSection) return mline;
                if ((gm < 0.0) == (g_lo < 0.0)) {
                    lo = mid;
                    g_lo = gm;
                } else {
                    hi = mid;
                }
            }
            std::ostringstream msg;
            msg << "halving cut bisection exhausted its budget in [" << lo << ", " << hi << "]";
            throw NumericalFailure(msg.str());
        }
        prev_g = g;
        prev_theta = theta;
    }
    throw NumericalFailure("halving cut scan found no sign change on [0, pi]");
}

}  // namespace pizza
