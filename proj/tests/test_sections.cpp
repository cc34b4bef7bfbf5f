#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pizzacut/generators.hpp"
#include "pizzacut/sections.hpp"
#include "support/oracles.hpp"

using namespace pizza;

namespace {

Pizza offset_squares() { return make_offset_square(1.0, 2.0); }

}  // namespace

TEST_CASE("profile on concentric disks is rotation invariant") {
    // alpha-sections of A (r=1) at alpha=0.25 cut the same fraction of B
    // (R=2) in every direction; oracle: circular-segment formula
    const Pizza disks = make_disk_pair(1.0, 2.0, 1024);
    const SectionProfile prof = profile(disks, 0.25, SectionedBody::topping, 64);
    const double d = oracle::disk_chord_distance(0.25);
    const double expected = oracle::disk_segment_fraction(d / 2.0);
    CHECK(expected == doctest::Approx(0.372291279091126).epsilon(1e-12));
    for (double f : prof.fractions) {
        CHECK(f == doctest::Approx(expected).epsilon(1e-4));
    }
}

TEST_CASE("profile on identical bodies returns alpha everywhere") {
    const ConvexPolygon sq = ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Pizza same = Pizza::make(sq, sq);
    for (double alpha : {0.1, 0.3, 0.45}) {
        const SectionProfile prof = profile(same, alpha, SectionedBody::topping, 32);
        for (double f : prof.fractions) {
            CHECK(std::abs(f - alpha) <= 1e-12);
        }
    }
}

TEST_CASE("profile fraction at a known direction") {
    // B = [0,2]^2, A = [0,1]^2, alpha = 0.25 on A, theta = 0: the section is
    // y = 0.25, and B's slab below it has area 0.5 of 4
    const SectionProfile prof = profile(offset_squares(), 0.25, SectionedBody::topping, 16);
    CHECK(prof.thetas[0] == 0.0);
    CHECK(prof.fractions[0] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(prof.offsets[0] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("profile structure invariants") {
    const SectionProfile prof = profile(offset_squares(), 0.3, SectionedBody::dough, 64);
    REQUIRE(prof.thetas.size() == 64);
    const double step = 2.0 * std::numbers::pi / 64;
    for (std::size_t j = 0; j < prof.thetas.size(); ++j) {
        CHECK(prof.thetas[j] == doctest::Approx(step * j).epsilon(1e-15));
        CHECK(prof.fractions[j] >= 0.0);
        CHECK(prof.fractions[j] <= 1.0);
    }
    CHECK_THROWS_AS(profile(offset_squares(), 0.3, SectionedBody::dough, 8), InvalidInput);
}

TEST_CASE("find_simultaneous_section on identical bodies") {
    const ConvexPolygon sq = ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Pizza same = Pizza::make(sq, sq);
    const SimultaneousSection s = find_simultaneous_section(same, 0.3);
    CHECK(s.beta == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(s.residual <= kEpsSection);
    // flat profile ties break to the smallest sampled direction
    CHECK(s.line.theta == 0.0);
}

TEST_CASE("find_simultaneous_section on concentric disks") {
    const Pizza disks = make_disk_pair(1.0, 2.0, 1024);
    const SimultaneousSection s = find_simultaneous_section(disks, 0.25);
    CHECK(s.beta == doctest::Approx(0.372291279091126).epsilon(1e-4));
    CHECK(s.beta >= 0.25);
    CHECK(s.residual <= kEpsSection);
}

TEST_CASE("find_simultaneous_section on offset squares") {
    // the witness at theta = pi reaches 0.625; the global maximum is the
    // diagonal direction with beta = 1 - (2 - 1/sqrt(2))^2 / 8
    const SimultaneousSection s = find_simultaneous_section(offset_squares(), 0.25);
    const double best = 1.0 - std::pow(2.0 - 1.0 / std::sqrt(2.0), 2) / 8.0;
    CHECK(s.beta >= 0.625 - 1e-9);
    CHECK(s.beta == doctest::Approx(best).epsilon(1e-9));
    CHECK(s.residual <= kEpsSection);
}

TEST_CASE("find_corollary_section basics") {
    const ConvexPolygon sq = ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Pizza same = Pizza::make(sq, sq);
    const SimultaneousSection s0 = find_corollary_section(same, 0.3);
    CHECK(s0.beta == doctest::Approx(0.3).epsilon(1e-12));

    // concentric disks at alpha = 1/3: the topping fraction drops to the
    // segment-formula value, strictly below 1/3
    const Pizza disks = make_disk_pair(1.0, 2.0, 1024);
    const SimultaneousSection s1 = find_corollary_section(disks, 1.0 / 3.0);
    CHECK(s1.beta == doctest::Approx(0.179204452470027).epsilon(1e-4));
    CHECK(s1.beta < 1.0 / 3.0);

    // offset squares at alpha = 0.25: sections from the far side miss the
    // topping entirely
    const SimultaneousSection s2 = find_corollary_section(offset_squares(), 0.25);
    CHECK(s2.beta <= 1e-9);
    CHECK(s2.residual <= kEpsSection);
}

TEST_CASE("find_halving_cut") {
    SUBCASE("concentric disks: any diameter works, theta = 0 returned") {
        const Pizza disks = make_disk_pair(1.0, 2.0, 512);
        const OrientedLine cut = find_halving_cut(disks);
        CHECK(cut.theta == 0.0);
        CHECK(std::abs(section_fraction(cut, disks.dough()) - 0.5) <= 1e-9);
        CHECK(std::abs(section_fraction(cut, disks.topping()) - 0.5) <= 1e-9);
    }
    SUBCASE("offset squares: the main diagonal halves both") {
        const Pizza p = offset_squares();
        const OrientedLine cut = find_halving_cut(p);
        CHECK(std::abs(section_fraction(cut, p.dough()) - 0.5) <= 1e-9);
        CHECK(std::abs(section_fraction(cut, p.topping()) - 0.5) <= 1e-9);
        CHECK(cut.theta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
    }
    SUBCASE("identical squares: first sampled direction already works") {
        const ConvexPolygon sq =
            ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        const Pizza same = Pizza::make(sq, sq);
        const OrientedLine cut = find_halving_cut(same);
        CHECK(cut.theta == 0.0);
        CHECK(std::abs(section_fraction(cut, sq) - 0.5) <= 1e-9);
    }
}

TEST_CASE("theorem battery on random pizzas") {
    for (int i = 0; i < 20; ++i) {
        const Pizza p = make_random_pair(100 + i);
        for (double alpha : {0.1, 0.25, 0.45}) {
            const SimultaneousSection s = find_simultaneous_section(p, alpha);
            CHECK(s.beta >= alpha - 1e-6);
            CHECK(s.residual <= kEpsSection);
            const SimultaneousSection c = find_corollary_section(p, alpha);
            CHECK(c.beta <= alpha + 1e-6);
            CHECK(c.residual <= kEpsSection);
        }
        const OrientedLine cut = find_halving_cut(p);
        CHECK(std::abs(section_fraction(cut, p.dough()) - 0.5) <= 1e-9);
        CHECK(std::abs(section_fraction(cut, p.topping()) - 0.5) <= 1e-9);
    }
}

TEST_CASE("halving g is antisymmetric under direction reversal") {
    const Pizza p = make_random_pair(55);
    for (int j = 0; j < 64; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / 64;
        const double g0 =
            section_fraction(alpha_section(p.dough(), 0.5, theta), p.topping()) - 0.5;
        const double g1 = section_fraction(
                              alpha_section(p.dough(), 0.5, theta + std::numbers::pi),
                              p.topping()) -
                          0.5;
        CHECK(std::abs(g0 + g1) <= kEpsSection);
    }
}

TEST_CASE("profile continuity bound") {
    const Pizza p = make_random_pair(77);
    const int samples = 1024;
    const SectionProfile prof = profile(p, 0.25, SectionedBody::topping, samples);
    const double diam = p.dough().scale();
    const double bound = 10.0 * (2.0 * std::numbers::pi / samples) * diam * diam /
                         p.dough().area();
    double max_jump = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double next = prof.fractions[static_cast<std::size_t>((j + 1) % samples)];
        max_jump = std::max(max_jump, std::abs(next - prof.fractions[static_cast<std::size_t>(j)]));
    }
    CHECK(max_jump <= bound);
}
