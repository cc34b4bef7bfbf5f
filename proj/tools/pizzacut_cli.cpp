// pizzacut: fair pizza partitions, simultaneous sections, and boundary-chain
// instrumentation for nested convex bodies.
//
// Exit codes: 0 success/fair, 2 invalid input, 3 odd n, 4 numerical failure,
// 5 theorem-violation diagnostic.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pizzacut/chain.hpp"
#include "pizzacut/generators.hpp"
#include "pizzacut/geom.hpp"
#include "pizzacut/io.hpp"
#include "pizzacut/partition.hpp"
#include "pizzacut/sections.hpp"
#include "pizzacut/svg.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pizza::InvalidInput("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw pizza::InvalidInput("cannot write output file: " + path.string());
    }
    out << content;
}

fs::path prepare_output_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) {
        throw pizza::InvalidInput("cannot create output directory: " + dir);
    }
    return p;
}

pizza::Pizza load_pizza(const std::string& input_path) {
    return pizza::parse_pizza_document(read_file(input_path)).to_pizza();
}

struct CommonOpts {
    std::string input;
    std::string output_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
    if (needs_input) {
        cmd->add_option("--input", opts.input, "pizza document JSON")->required();
    }
    cmd->add_option("--output-dir", opts.output_dir, "directory for output files");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair partitions of nested planar convex bodies"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "write a pizza document");
    std::string kind_name;
    pizza::GenerateParams gen_params;
    std::string gen_output_dir = ".";
    std::string gen_name = "pizza";
    gen_cmd->add_option("--kind", kind_name, "disk_pair | square_pair | offset_square | random_pair")
        ->required()
        ->check(CLI::IsMember({"disk_pair", "square_pair", "offset_square", "random_pair"}));
    gen_cmd->add_option("--r", gen_params.r, "topping disk radius");
    gen_cmd->add_option("--R", gen_params.R, "dough disk radius");
    gen_cmd->add_option("--a", gen_params.a, "topping square side");
    gen_cmd->add_option("--b", gen_params.b, "dough square side");
    gen_cmd->add_option("--disk-vertices", gen_params.disk_vertices, "polygon vertices per disk")
        ->check(CLI::Range(64, 1 << 20));
    gen_cmd->add_option("--seed", gen_params.seed, "random_pair seed");
    gen_cmd->add_option("--name", gen_name, "document name and output file stem");
    gen_cmd->add_option("--output-dir", gen_output_dir, "directory for output files");

    // partition
    auto* part_cmd = app.add_subcommand("partition", "fair partition into n slices");
    CommonOpts part_opts;
    int part_n = 2;
    double part_tol = pizza::kEpsFair;
    bool part_svg = false;
    add_common(part_cmd, part_opts);
    part_cmd->add_option("--n", part_n, "number of slices (even)")->required();
    part_cmd->add_option("--tol", part_tol, "fairness tolerance (relative)");
    part_cmd->add_flag("--svg", part_svg, "also write partition.svg");

    // profile
    auto* prof_cmd = app.add_subcommand("profile", "per-direction section profile CSV");
    CommonOpts prof_opts;
    double prof_alpha = 0.25;
    int prof_samples = 1024;
    std::string prof_which = "sectionA";
    add_common(prof_cmd, prof_opts);
    prof_cmd->add_option("--alpha", prof_alpha, "section fraction in (0,1)")->required();
    prof_cmd->add_option("--theta-samples", prof_samples, "direction samples")
        ->check(CLI::Range(16, 1 << 24));
    prof_cmd->add_option("--which", prof_which, "sectionA (topping) or sectionB (dough)")
        ->check(CLI::IsMember({"sectionA", "sectionB"}));

    // theorem1
    auto* thm_cmd = app.add_subcommand(
        "theorem1", "find an alpha-section of A that is a beta-section of B, beta >= alpha");
    CommonOpts thm_opts;
    double thm_alpha = 0.25;
    int thm_samples = 1024;
    bool thm_corollary = false;
    add_common(thm_cmd, thm_opts);
    thm_cmd->add_option("--alpha", thm_alpha, "section fraction in (0,1/2)")->required();
    thm_cmd->add_option("--theta-samples", thm_samples, "scan samples")
        ->check(CLI::Range(16, 1 << 24));
    thm_cmd->add_flag("--corollary", thm_corollary,
                      "search the mirror statement instead (alpha-section of B, beta <= alpha)");

    // chain
    auto* chain_cmd = app.add_subcommand("chain", "consecutive alpha-section chain on the topping");
    CommonOpts chain_opts;
    double chain_alpha = 0.1;
    int chain_n = 10;
    std::size_t chain_x0_edge = 0;
    double chain_x0_fraction = 0.0;
    bool chain_svg_out = false;
    add_common(chain_cmd, chain_opts);
    chain_cmd->add_option("--alpha", chain_alpha, "cap fraction in (0,1/2)")->required();
    chain_cmd->add_option("--n", chain_n, "number of chain steps")->check(CLI::PositiveNumber);
    chain_cmd->add_option("--x0-edge", chain_x0_edge, "start point edge index");
    chain_cmd->add_option("--x0-fraction", chain_x0_fraction, "start point position on edge");
    chain_cmd->add_flag("--svg", chain_svg_out, "also write chain.svg");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "re-check a partition tree's fairness");
    CommonOpts verify_opts;
    std::string verify_tree;
    double verify_tol = pizza::kEpsFair;
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--tree", verify_tree, "partition tree JSON")->required();
    verify_cmd->add_option("--tol", verify_tol, "fairness tolerance (relative)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string output_dir = ".";
    try {
        if (*gen_cmd) {
            output_dir = gen_output_dir;
            const fs::path dir = prepare_output_dir(gen_output_dir);
            static const std::map<std::string, pizza::PizzaKind> kinds{
                {"disk_pair", pizza::PizzaKind::disk_pair},
                {"square_pair", pizza::PizzaKind::square_pair},
                {"offset_square", pizza::PizzaKind::offset_square},
                {"random_pair", pizza::PizzaKind::random_pair}};
            gen_params.name = gen_name;
            const pizza::PizzaDocument doc = pizza::generate(kinds.at(kind_name), gen_params);
            write_file(dir / (gen_name + ".json"), pizza::serialize(doc));
        } else if (*part_cmd) {
            output_dir = part_opts.output_dir;
            const fs::path dir = prepare_output_dir(part_opts.output_dir);
            const pizza::Pizza pie = load_pizza(part_opts.input);
            const pizza::PartitionTree tree = pizza::fair_partition(pie, part_n);
            const pizza::FairnessReport report = pizza::verify_partition(pie, tree, part_tol);
            write_file(dir / "partition.json", pizza::partition_tree_to_json(tree));
            write_file(dir / "fairness.json", pizza::fairness_report_to_json(report));
            if (part_svg) {
                write_file(dir / "partition.svg", pizza::partition_svg(pie, tree));
            }
            if (!report.fair) {
                std::cerr << "partition is not fair at tolerance " << part_tol << "\n";
                return 4;
            }
        } else if (*prof_cmd) {
            output_dir = prof_opts.output_dir;
            const fs::path dir = prepare_output_dir(prof_opts.output_dir);
            const pizza::Pizza pie = load_pizza(prof_opts.input);
            const pizza::SectionedBody which = prof_which == "sectionA"
                                                   ? pizza::SectionedBody::topping
                                                   : pizza::SectionedBody::dough;
            const pizza::SectionProfile prof =
                pizza::profile(pie, prof_alpha, which, prof_samples);
            write_file(dir / "profile.csv", pizza::profile_to_csv(prof));
        } else if (*thm_cmd) {
            output_dir = thm_opts.output_dir;
            const fs::path dir = prepare_output_dir(thm_opts.output_dir);
            const pizza::Pizza pie = load_pizza(thm_opts.input);
            const pizza::SimultaneousSection witness =
                thm_corollary ? pizza::find_corollary_section(pie, thm_alpha, thm_samples)
                              : pizza::find_simultaneous_section(pie, thm_alpha, thm_samples);
            const char* file = thm_corollary ? "corollary1.json" : "theorem1.json";
            write_file(dir / file, pizza::simultaneous_section_to_json(witness));
        } else if (*chain_cmd) {
            output_dir = chain_opts.output_dir;
            const fs::path dir = prepare_output_dir(chain_opts.output_dir);
            const pizza::Pizza pie = load_pizza(chain_opts.input);
            const pizza::BoundaryPoint x0 =
                pizza::boundary_point(pie.topping(), chain_x0_edge, chain_x0_fraction);
            const pizza::ChainReport report =
                pizza::build_chain(pie.topping(), chain_alpha, x0, chain_n);
            write_file(dir / "chain.json", pizza::chain_report_to_json(report));
            if (chain_svg_out) {
                write_file(dir / "chain.svg", pizza::chain_svg(pie.topping(), report));
            }
        } else if (*verify_cmd) {
            output_dir = verify_opts.output_dir;
            const fs::path dir = prepare_output_dir(verify_opts.output_dir);
            const pizza::Pizza pie = load_pizza(verify_opts.input);
            const pizza::PartitionTree tree =
                pizza::partition_tree_from_json(read_file(verify_tree), pie.dough());
            const pizza::FairnessReport report = pizza::verify_partition(pie, tree, verify_tol);
            write_file(dir / "fairness.json", pizza::fairness_report_to_json(report));
            if (!report.fair) {
                std::cerr << "partition is not fair at tolerance " << verify_tol << "\n";
                return 4;
            }
        }
    } catch (const pizza::Error& e) {
        const std::string payload = pizza::error_to_json(e.exit_code(), e.kind(), e.what());
        std::cerr << payload;
        try {
            write_file(prepare_output_dir(output_dir) / "error.json", payload);
        } catch (...) {
            // error report is best-effort
        }
        return e.exit_code();
    } catch (const std::exception& e) {
        const std::string payload = pizza::error_to_json(4, "internal_error", e.what());
        std::cerr << payload;
        return 4;
    }
    return 0;
}
