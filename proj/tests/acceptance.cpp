// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include "pizzacut/chain.hpp"
#include "pizzacut/generators.hpp"
#include "pizzacut/io.hpp"
#include "pizzacut/partition.hpp"
#include "pizzacut/sections.hpp"
#include "support/oracles.hpp"
#include "support/xml_check.hpp"

using namespace pizza;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

// ---------------------------------------------------------------------------
// 1. Theorem 1 battery: beta >= alpha - 1e-6 on 100 seeded random pizzas.
Outcome criterion1() {
    const auto start = Clock::now();
    double worst_margin = 1.0;
    for (int i = 0; i < 100; ++i) {
        const Pizza p = make_random_pair(1000 + i);
        for (int ai = 1; ai <= 9; ++ai) {
            const double alpha = 0.05 * ai;
            const SimultaneousSection s = find_simultaneous_section(p, alpha);
            worst_margin = std::min(worst_margin, s.beta - alpha);
            if (s.beta < alpha - 1e-6) {
                std::ostringstream msg;
                msg << "seed " << 1000 + i << " alpha " << alpha << ": beta " << s.beta;
                return {false, msg.str()};
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream msg;
    msg << "900 searches, min(beta - alpha) = " << worst_margin << ", " << elapsed << " s";
    return {elapsed < 60.0, msg.str()};
}

// ---------------------------------------------------------------------------
// 2. Corollary 1 battery: beta <= alpha + 1e-6 on the same inputs.
Outcome criterion2() {
    const auto start = Clock::now();
    double worst_margin = 1.0;
    for (int i = 0; i < 100; ++i) {
        const Pizza p = make_random_pair(1000 + i);
        for (int ai = 1; ai <= 9; ++ai) {
            const double alpha = 0.05 * ai;
            const SimultaneousSection s = find_corollary_section(p, alpha);
            worst_margin = std::min(worst_margin, alpha - s.beta);
            if (s.beta > alpha + 1e-6) {
                std::ostringstream msg;
                msg << "seed " << 1000 + i << " alpha " << alpha << ": beta " << s.beta;
                return {false, msg.str()};
            }
        }
    }
    std::ostringstream msg;
    msg << "900 searches, min(alpha - beta) = " << worst_margin << ", "
        << seconds_since(start) << " s";
    return {true, msg.str()};
}

// ---------------------------------------------------------------------------
// 3. Fair partitions across the fixture set for every even n up to 12.
Outcome criterion3() {
    const auto start = Clock::now();
    std::vector<Pizza> fixtures;
    fixtures.push_back(make_disk_pair(1.0, 2.0, 512));
    fixtures.push_back(make_square_pair(1.0, 2.0));
    fixtures.push_back(make_offset_square(1.0, 2.0));
    for (int i = 0; i < 50; ++i) fixtures.push_back(make_random_pair(2000 + i));

    double worst = 0.0;
    for (std::size_t f = 0; f < fixtures.size(); ++f) {
        for (int n : {2, 4, 6, 8, 10, 12}) {
            const PartitionTree tree = fair_partition(fixtures[f], n);
            const FairnessReport report = verify_partition(fixtures[f], tree, 1e-6);
            const double dev =
                std::max(report.max_dough_deviation, report.max_topping_deviation);
            worst = std::max(worst, dev);
            if (!report.fair || tree.leaf_count() != static_cast<std::size_t>(n)) {
                std::ostringstream msg;
                msg << "fixture " << f << " n " << n << ": max deviation " << dev;
                return {false, msg.str()};
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream msg;
    msg << fixtures.size() << " fixtures x 6 slice counts, worst deviation = " << worst
        << ", " << elapsed << " s";
    return {elapsed < 300.0, msg.str()};
}

// ---------------------------------------------------------------------------
// 4. Concentric-disk witness: strictly positive deficiency slack, and the
//    beta = 1/4 topping fraction matches the segment-formula oracle.
Outcome criterion4() {
    const DeficiencyReport report =
        check_disk_deficiency(1.0, 2.0, 512, {1.0 / 3.0, 1.0 / 5.0, 2.0 / 5.0});
    double min_slack = 1.0;
    for (const DeficiencyEntry& e : report.entries) {
        min_slack = std::min(min_slack, e.min_slack);
        if (!(e.min_slack > 0.0)) {
            std::ostringstream msg;
            msg << "beta " << e.beta << ": min slack " << e.min_slack;
            return {false, msg.str()};
        }
    }

    // oracle: chord of the beta = 1/4 section of B, fraction in A from the
    // circular-segment formula
    const ConvexPolygon A = make_regular_polygon(512, 1.0);
    const ConvexPolygon B = make_regular_polygon(512, 2.0);
    const double expected =
        oracle::disk_segment_fraction(2.0 * oracle::disk_chord_distance(0.25));
    double worst_err = 0.0;
    for (double theta : {0.0, 0.7, 2.1, 4.9}) {
        const OrientedLine line = alpha_section(B, 0.25, theta);
        worst_err = std::max(worst_err, std::abs(section_fraction(line, A) - expected));
    }
    std::ostringstream msg;
    msg << "min slack = " << min_slack << ", beta=1/4 oracle error = " << worst_err;
    return {worst_err <= 1e-4, msg.str()};
}

// ---------------------------------------------------------------------------
// 5. Chain covering invariants across the battery.
Outcome criterion5() {
    const auto start = Clock::now();
    for (int seed : {41, 42, 43}) {
        const ConvexPolygon A = make_random_convex(seed);
        for (double alpha : {0.1, 0.2, 0.3}) {
            for (int n : {10, 25, 50}) {
                const ChainReport r = build_chain(A, alpha, boundary_point(A, 0, 0.0), n);
                for (const CoverageSample& s : r.boundary_samples) {
                    if (s.count < r.k || s.count > r.k + 1) {
                        std::ostringstream msg;
                        msg << "seed " << seed << " alpha " << alpha << " n " << n
                            << ": boundary K(x) " << s.count << " outside [k, k+1], k = "
                            << r.k;
                        return {false, msg.str()};
                    }
                }
                for (const CoverageSample& s : r.interior_samples) {
                    if (s.count > r.k + 1) {
                        std::ostringstream msg;
                        msg << "seed " << seed << ": interior K(x) " << s.count << " > k+1 = "
                            << r.k + 1;
                        return {false, msg.str()};
                    }
                }
                double cap_sum = 0.0;
                for (const Cap& cap : r.caps) cap_sum += cap.polygon.area();
                if (cap_sum > (r.k + 1 + 1e-6) * A.area()) {
                    return {false, "cap-area sum exceeds (k + 1)|A|"};
                }
                if (n * alpha > r.k + 1 + 1e-3) {
                    std::ostringstream msg;
                    msg << "n alpha = " << n * alpha << " exceeds k + 1 = " << r.k + 1;
                    return {false, msg.str()};
                }
            }
        }
    }
    std::ostringstream msg;
    msg << "27 chains checked, " << seconds_since(start) << " s";
    return {true, msg.str()};
}

// ---------------------------------------------------------------------------
// 6. Disk chain closure: six 60-degree steps return to the start.
Outcome criterion6() {
    const ConvexPolygon disk = make_regular_polygon(1024, 1.0);
    const double psi = std::numbers::pi / 6.0;
    const double alpha = (psi - std::sin(psi) * std::cos(psi)) / std::numbers::pi;
    const ChainReport r = build_chain(disk, alpha, boundary_point(disk, 0, 0.0), 6);
    std::ostringstream msg;
    msg << "closure residual = " << r.closure_residual << " (bound "
        << 1e-3 * disk.scale() << ")";
    return {r.closure_residual <= 1e-3 * disk.scale(), msg.str()};
}

// ---------------------------------------------------------------------------
// 7. Geometry oracles: clip additivity and Monte Carlo fraction agreement.
Outcome criterion7() {
    std::mt19937_64 rng(4242);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    double worst_add = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ConvexPolygon P = make_random_convex(5000 + i);
        const double theta = 2.0 * std::numbers::pi * unit();
        const Point2 uperp{-std::sin(theta), std::cos(theta)};
        double lo = dot(P.vertices()[0], uperp), hi = lo;
        for (const Point2& v : P.vertices()) {
            lo = std::min(lo, dot(v, uperp));
            hi = std::max(hi, dot(v, uperp));
        }
        const OrientedLine L(theta, lo + (hi - lo) * unit());
        auto cl = clip(P, L, Side::minus);
        auto cr = clip(P, L, Side::plus);
        const double sum = (cl ? cl->area() : 0.0) + (cr ? cr->area() : 0.0);
        worst_add = std::max(worst_add, std::abs(sum - P.area()) / P.area());
    }
    if (worst_add > 1e-9) {
        std::ostringstream msg;
        msg << "clip additivity worst relative error " << worst_add;
        return {false, msg.str()};
    }

    double worst_mc = 0.0;
    for (int i = 0; i < 20; ++i) {
        const ConvexPolygon P = make_random_convex(6000 + i);
        const double theta = 2.0 * std::numbers::pi * unit();
        const Point2 uperp{-std::sin(theta), std::cos(theta)};
        double lo = dot(P.vertices()[0], uperp), hi = lo;
        for (const Point2& v : P.vertices()) {
            lo = std::min(lo, dot(v, uperp));
            hi = std::max(hi, dot(v, uperp));
        }
        const OrientedLine L(theta, lo + (hi - lo) * unit());
        const double mc =
            oracle::monte_carlo_fraction(P.vertices(), L.theta, L.t, 1000000, 9000 + i);
        worst_mc = std::max(worst_mc, std::abs(section_fraction(L, P) - mc));
    }
    std::ostringstream msg;
    msg << "additivity worst = " << worst_add << ", Monte Carlo worst = " << worst_mc;
    return {worst_mc <= 3e-3, msg.str()};
}

// ---------------------------------------------------------------------------
// 8. CLI contract: odd-n exit code, byte-for-byte determinism, SVG as XML.
#ifdef PIZZACUT_CLI_PATH
int run_cli(const std::string& args) {
    const std::string cmd = std::string(PIZZACUT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
#ifdef __unix__
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
#else
    return status;
#endif
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion8() {
    const fs::path work = fs::path("acceptance-workdir");
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string w = work.string();

    if (run_cli("generate --kind random_pair --seed 123 --output-dir " + w +
                " --name pie") != 0) {
        return {false, "generate failed"};
    }
    const std::string input = (work / "pie.json").string();

    // odd n: exit code 3 and a machine-readable error payload
    const int odd_rc = run_cli("partition --input " + input + " --n 3 --output-dir " + w +
                               "/odd");
    if (odd_rc != 3) {
        return {false, "odd-n exit code was " + std::to_string(odd_rc) + ", expected 3"};
    }
    if (!fs::exists(work / "odd" / "error.json")) {
        return {false, "odd-n run left no error.json"};
    }

    // determinism: identical seeds and configs give byte-identical outputs
    for (const char* dir : {"a", "b"}) {
        const std::string d = (work / dir).string();
        if (run_cli("generate --kind random_pair --seed 123 --output-dir " + d +
                    " --name pie") != 0 ||
            run_cli("partition --input " + d + "/pie.json --n 6 --svg --output-dir " + d) !=
                0 ||
            run_cli("profile --input " + d + "/pie.json --alpha 0.3 --theta-samples 256 "
                    "--output-dir " + d) != 0 ||
            run_cli("theorem1 --input " + d + "/pie.json --alpha 0.2 --output-dir " + d) !=
                0) {
            return {false, std::string("pipeline failed in ") + dir};
        }
    }
    for (const char* file :
         {"pie.json", "partition.json", "fairness.json", "partition.svg", "profile.csv",
          "theorem1.json"}) {
        if (slurp(work / "a" / file) != slurp(work / "b" / file)) {
            return {false, std::string(file) + " differs between identical runs"};
        }
        if (slurp(work / "a" / file).empty()) {
            return {false, std::string(file) + " is empty"};
        }
    }

    // SVG well-formedness
    if (!testsupport::xml_well_formed(slurp(work / "a" / "partition.svg"))) {
        return {false, "partition.svg is not well-formed XML"};
    }
    return {true, "exit codes, determinism and SVG checked"};
}
#else
Outcome criterion8() { return {false, "CLI binary not built"}; }
#endif

}  // namespace

int main() {
    const struct {
        const char* label;
        std::function<Outcome()> run;
    } criteria[] = {
        {"criterion 1: theorem-1 battery (beta >= alpha - 1e-6)", criterion1},
        {"criterion 2: corollary-1 battery (beta <= alpha + 1e-6)", criterion2},
        {"criterion 3: fair partitions, even n in {2..12}, deviation <= 1e-6", criterion3},
        {"criterion 4: concentric-disk deficiency witness + segment oracle", criterion4},
        {"criterion 5: chain covering invariants", criterion5},
        {"criterion 6: disk chain closure within 1e-3 diameter", criterion6},
        {"criterion 7: clip additivity 1e-9 + Monte Carlo 3e-3", criterion7},
        {"criterion 8: CLI contract (exit codes, determinism, SVG)", criterion8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome{false, "unhandled exception"};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.label << " — "
                  << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
