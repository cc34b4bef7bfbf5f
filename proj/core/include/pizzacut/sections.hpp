#pragma once

#include <vector>

#include "pizzacut/geom.hpp"

namespace pizza {

enum class SectionedBody { topping, dough };

/// Per-direction record of alpha-sections of one body and the companion
/// fraction they cut from the other body.
struct SectionProfile {
    double alpha;
    std::vector<double> thetas;     // strictly increasing, uniform step over [0, 2*pi)
    std::vector<double> offsets;    // t of the alpha-section at each theta
    std::vector<double> fractions;  // companion-body fraction at each theta
    SectionedBody body_tag;         // which body was sectioned
};

/// A line that is (within residual) an alpha-section of one body and a
/// beta-section of the other.
struct SimultaneousSection {
    OrientedLine line;
    double alpha;     // achieved fraction in the sectioned body
    double beta;      // fraction in the companion body
    double residual;  // |achieved alpha - requested alpha|
};

/// Samples the alpha-sections of one body over a uniform direction grid and
/// records the fraction of the other body on each line's Delta^- side.
SectionProfile profile(const Pizza& pizza, double alpha, SectionedBody which, int samples);

/// Finds an alpha-section of the topping A that is a beta-section of the
/// dough B with beta >= alpha (up to kEpsTheorem): scans beta(theta) on a
/// uniform grid, then refines the best bracket by golden-section search.
/// Throws TheoremViolation if even the refined maximum falls short.
SimultaneousSection find_simultaneous_section(const Pizza& pizza, double alpha,
                                              int samples = 1024);

/// Mirror search: an alpha-section of the dough B whose topping fraction is
/// at most alpha (up to kEpsTheorem), found by minimizing over directions.
SimultaneousSection find_corollary_section(const Pizza& pizza, double alpha, int samples = 1024);

/// A single line that halves both bodies simultaneously. g(theta) =
/// topping fraction of the dough's half-section minus 1/2 satisfies
/// g(theta + pi) = -g(theta), so a sign change exists on [0, pi]; it is
/// located by scan plus bisection.
OrientedLine find_halving_cut(const Pizza& pizza);

// Acceptance slack for the theorem searches, looser than kEpsSection to
// absorb polygonal-approximation error for disk inputs.
inline constexpr double kEpsTheorem = 1e-6;

}  // namespace pizza
