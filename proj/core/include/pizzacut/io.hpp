#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pizzacut/chain.hpp"
#include "pizzacut/geom.hpp"
#include "pizzacut/partition.hpp"
#include "pizzacut/sections.hpp"

namespace pizza {

/// On-disk pizza description: two vertex lists plus optional metadata.
/// Geometry invariants are enforced by to_pizza(), not at parse time, so a
/// document can be inspected even when it is invalid.
struct PizzaDocument {
    std::string format_version = "1";
    std::vector<Point2> topping;
    std::vector<Point2> dough;
    std::optional<std::string> name;
    std::optional<std::string> generator;
    std::optional<std::uint64_t> seed;

    /// Validates and builds the Pizza; throws InvalidInput with an actionable
    /// message naming the offending body.
    Pizza to_pizza() const;

    static PizzaDocument from_pizza(const Pizza& pizza);
};

PizzaDocument parse_pizza_document(const std::string& json_text);
std::string serialize(const PizzaDocument& doc);

enum class PizzaKind { disk_pair, square_pair, offset_square, random_pair };

struct GenerateParams {
    double r = 1.0, R = 2.0;      // disk_pair radii
    double a = 1.0, b = 2.0;      // square side lengths
    int disk_vertices = 512;
    std::uint64_t seed = 0;       // random_pair
    std::optional<std::string> name;
};

/// Builds a generated pizza document; deterministic for a given seed.
PizzaDocument generate(PizzaKind kind, const GenerateParams& params);

/// Partition tree JSON: nodes are {"cut": {"theta", "t"}, "left", "right"}
/// or {"slice": [[x, y], ...]}; "left" is the Delta^- side.
std::string partition_tree_to_json(const PartitionTree& tree);

/// Rebuilds a tree from JSON by re-deriving every piece from the dough via
/// the recorded cuts; re-checks that stored leaf slices match the
/// reconstruction. Throws InvalidInput on mismatch.
PartitionTree partition_tree_from_json(const std::string& json_text, const ConvexPolygon& dough);

std::string fairness_report_to_json(const FairnessReport& report);
std::string simultaneous_section_to_json(const SimultaneousSection& section);
std::string chain_report_to_json(const ChainReport& report);

/// CSV with header `theta,t,fraction`, one row per sampled direction.
std::string profile_to_csv(const SectionProfile& profile);

/// Machine-readable error payload written next to other outputs on failure.
std::string error_to_json(int code, const std::string& kind, const std::string& message);

}  // namespace pizza
