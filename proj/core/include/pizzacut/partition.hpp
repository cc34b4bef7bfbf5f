#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pizzacut/geom.hpp"

namespace pizza {

/// Binary tree of cuts under the cutting rule: each internal node records the
/// piece that was cut and the cutting line; `left` holds the Delta^- clip,
/// `right` the Delta^+ clip. Leaves are the final slices.
struct PartitionNode {
    ConvexPolygon piece;
    std::optional<OrientedLine> cut;
    std::unique_ptr<PartitionNode> left;   // Delta^- side
    std::unique_ptr<PartitionNode> right;  // Delta^+ side

    explicit PartitionNode(ConvexPolygon slice) : piece(std::move(slice)) {}
    PartitionNode(ConvexPolygon piece_in, OrientedLine cut_in, std::unique_ptr<PartitionNode> l,
                  std::unique_ptr<PartitionNode> r)
        : piece(std::move(piece_in)), cut(cut_in), left(std::move(l)), right(std::move(r)) {}

    bool is_leaf() const noexcept { return !cut.has_value(); }
};

class PartitionTree {
public:
    explicit PartitionTree(std::unique_ptr<PartitionNode> root);

    const PartitionNode& root() const noexcept { return *root_; }
    std::size_t leaf_count() const noexcept { return leaf_count_; }

    /// Leaves in left-to-right order.
    std::vector<const PartitionNode*> leaves() const;

private:
    std::unique_ptr<PartitionNode> root_;
    std::size_t leaf_count_;
};

struct FairnessReport {
    std::vector<double> dough_areas;
    std::vector<double> topping_areas;
    double max_dough_deviation;    // relative to |B|/n
    double max_topping_deviation;  // relative to |A|/n
    bool fair;
    double tolerance;
    double dough_total;
    double topping_total;
};

// Relative fairness tolerance for final slices; looser than kEpsSection to
// absorb accumulation across up to n-1 cuts.
inline constexpr double kEpsFair = 1e-6;

/// Fair partition of the pizza into n slices under the cutting rule (n even).
/// Every leaf has dough area |B|/n and topping area |A|/n within kEpsFair.
/// Throws OddNError for odd n and NumericalFailure if a root-find exhausts
/// its budget.
PartitionTree fair_partition(const Pizza& pizza, int n);

struct FairSlice {
    ConvexPolygon slice;      // C: dough |B|/n, topping |A|/n
    ConvexPolygon remainder;  // half minus C
    OrientedLine cut;         // C is the Delta^- side
};

/// Extracts one fair slice from a fair half by a single cut (n = 4k+2 route):
/// bisects on the direction arc between the strip parallel to the halving cut
/// (topping excess) and the corollary-search direction (topping deficit).
FairSlice fair_slice_from_half(const Pizza& pizza, const ConvexPolygon& half,
                               const OrientedLine& halving_cut, int n);

/// Recomputes every leaf's dough and topping area from the recorded cuts and
/// reports deviations from the fair targets. Never throws; verification
/// failure shows up in the report.
FairnessReport verify_partition(const Pizza& pizza, const PartitionTree& tree, double tol);

struct DeficiencyEntry {
    double beta;
    double min_slack;             // min over directions of beta - topping fraction
    double max_topping_fraction;  // max over directions
    bool witness_holds;           // min_slack > margin
};

struct DeficiencyReport {
    double radius_topping;
    double radius_dough;
    int vertex_count;
    double margin;  // discretization margin for the m-gon approximation
    std::vector<DeficiencyEntry> entries;
};

/// Concentric-disk witness for the odd-n impossibility: for each beta and 256
/// directions, checks that the beta-section of the dough disk cuts off
/// strictly less than a beta-fraction of the topping disk. Throws
/// WitnessFailure only if some cut exceeds the beta bound by more than the
/// discretization margin; equality cases (r = R, beta near 1/2) are reported,
/// not thrown.
DeficiencyReport check_disk_deficiency(double r, double R, int m,
                                       const std::vector<double>& betas);

}  // namespace pizza
