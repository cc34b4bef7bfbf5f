#include "pizzacut/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pizzacut/generators.hpp"

namespace pizza {

namespace {

using nlohmann::json;

json vertices_to_json(const std::vector<Point2>& verts) {
    json arr = json::array();
    for (const Point2& v : verts) arr.push_back(json::array({v.x, v.y}));
    return arr;
}

std::vector<Point2> vertices_from_json(const json& arr, const char* body) {
    if (!arr.is_array()) {
        throw InvalidInput(std::string(body) + ": expected an array of [x, y] vertices");
    }
    std::vector<Point2> verts;
    verts.reserve(arr.size());
    for (const json& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number()) {
            throw InvalidInput(std::string(body) + ": each vertex must be a [x, y] number pair");
        }
        verts.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return verts;
}

json line_to_json(const OrientedLine& line) {
    return json{{"theta", line.theta}, {"t", line.t}};
}

OrientedLine line_from_json(const json& obj) {
    if (!obj.is_object() || !obj.contains("theta") || !obj.contains("t") ||
        !obj["theta"].is_number() || !obj["t"].is_number()) {
        throw InvalidInput("cut: expected an object with numeric \"theta\" and \"t\"");
    }
    return OrientedLine(obj["theta"].get<double>(), obj["t"].get<double>());
}

json node_to_json(const PartitionNode& node) {
    if (node.is_leaf()) {
        return json{{"slice", vertices_to_json(node.piece.vertices())}};
    }
    return json{{"cut", line_to_json(*node.cut)},
                {"left", node_to_json(*node.left)},
                {"right", node_to_json(*node.right)}};
}

// True when the two polygons describe the same region: equal areas and each
// vertex of one inside the other, all within tolerance.
bool same_region(const ConvexPolygon& a, const ConvexPolygon& b) {
    const double scale = std::max(a.scale(), b.scale());
    const double tol = 1e-9 * scale;
    if (std::abs(a.area() - b.area()) > 1e-9 * std::max(a.area(), b.area())) return false;
    for (const Point2& v : a.vertices()) {
        if (!b.contains(v, tol)) return false;
    }
    for (const Point2& v : b.vertices()) {
        if (!a.contains(v, tol)) return false;
    }
    return true;
}

std::unique_ptr<PartitionNode> node_from_json(const json& obj, ConvexPolygon piece) {
    if (!obj.is_object()) {
        throw InvalidInput("partition tree: node must be an object");
    }
    if (obj.contains("slice")) {
        const ConvexPolygon stored =
            ConvexPolygon::from_vertices(vertices_from_json(obj["slice"], "slice"));
        if (!same_region(stored, piece)) {
            throw InvalidInput(
                "partition tree: stored leaf slice does not match the cut reconstruction");
        }
        return std::make_unique<PartitionNode>(std::move(piece));
    }
    if (!obj.contains("cut") || !obj.contains("left") || !obj.contains("right")) {
        throw InvalidInput("partition tree: node requires \"cut\", \"left\" and \"right\"");
    }
    const OrientedLine cut = line_from_json(obj["cut"]);
    std::optional<ConvexPolygon> left_piece = clip(piece, cut, Side::minus);
    std::optional<ConvexPolygon> right_piece = clip(piece, cut, Side::plus);
    if (!left_piece || !right_piece) {
        throw InvalidInput("partition tree: a recorded cut misses its piece");
    }
    auto left = node_from_json(obj["left"], std::move(*left_piece));
    auto right = node_from_json(obj["right"], std::move(*right_piece));
    return std::make_unique<PartitionNode>(std::move(piece), cut, std::move(left),
                                           std::move(right));
}

json parse_text(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw InvalidInput(std::string(what) + ": not valid JSON");
    }
    return doc;
}

}  // namespace

Pizza PizzaDocument::to_pizza() const {
    if (format_version != "1") {
        throw InvalidInput("unsupported pizza document format_version \"" + format_version +
                           "\" (expected \"1\")");
    }
    ConvexPolygon top = [&] {
        try {
            return ConvexPolygon::from_vertices(topping);
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string("topping: ") + e.what());
        }
    }();
    ConvexPolygon dgh = [&] {
        try {
            return ConvexPolygon::from_vertices(dough);
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string("dough: ") + e.what());
        }
    }();
    return Pizza::make(std::move(top), std::move(dgh));
}

PizzaDocument PizzaDocument::from_pizza(const Pizza& pizza) {
    PizzaDocument doc;
    doc.topping = pizza.topping().vertices();
    doc.dough = pizza.dough().vertices();
    return doc;
}

PizzaDocument parse_pizza_document(const std::string& json_text) {
    const json doc = parse_text(json_text, "pizza document");
    if (!doc.is_object()) {
        throw InvalidInput("pizza document: expected a JSON object");
    }
    if (!doc.contains("format_version") || !doc["format_version"].is_string()) {
        throw InvalidInput("pizza document: missing string \"format_version\"");
    }
    if (!doc.contains("topping") || !doc.contains("dough")) {
        throw InvalidInput("pizza document: requires \"topping\" and \"dough\" vertex arrays");
    }
    PizzaDocument result;
    result.format_version = doc["format_version"].get<std::string>();
    result.topping = vertices_from_json(doc["topping"], "topping");
    result.dough = vertices_from_json(doc["dough"], "dough");
    if (doc.contains("metadata") && doc["metadata"].is_object()) {
        const json& meta = doc["metadata"];
        if (meta.contains("name") && meta["name"].is_string()) {
            result.name = meta["name"].get<std::string>();
        }
        if (meta.contains("generator") && meta["generator"].is_string()) {
            result.generator = meta["generator"].get<std::string>();
        }
        if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
            result.seed = meta["seed"].get<std::uint64_t>();
        }
    }
    return result;
}

std::string serialize(const PizzaDocument& doc) {
    json out{{"format_version", doc.format_version},
             {"topping", vertices_to_json(doc.topping)},
             {"dough", vertices_to_json(doc.dough)}};
    if (doc.name || doc.generator || doc.seed) {
        json meta = json::object();
        if (doc.name) meta["name"] = *doc.name;
        if (doc.generator) meta["generator"] = *doc.generator;
        if (doc.seed) meta["seed"] = *doc.seed;
        out["metadata"] = meta;
    }
    return out.dump(2) + "\n";
}

PizzaDocument generate(PizzaKind kind, const GenerateParams& params) {
    PizzaDocument doc;
    switch (kind) {
        case PizzaKind::disk_pair: {
            const Pizza p = make_disk_pair(params.r, params.R, params.disk_vertices);
            doc = PizzaDocument::from_pizza(p);
            doc.generator = "disk_pair";
            break;
        }
        case PizzaKind::square_pair: {
            const Pizza p = make_square_pair(params.a, params.b);
            doc = PizzaDocument::from_pizza(p);
            doc.generator = "square_pair";
            break;
        }
        case PizzaKind::offset_square: {
            const Pizza p = make_offset_square(params.a, params.b);
            doc = PizzaDocument::from_pizza(p);
            doc.generator = "offset_square";
            break;
        }
        case PizzaKind::random_pair: {
            const Pizza p = make_random_pair(params.seed);
            doc = PizzaDocument::from_pizza(p);
            doc.generator = "random_pair";
            doc.seed = params.seed;
            break;
        }
    }
    doc.name = params.name;
    return doc;
}

std::string partition_tree_to_json(const PartitionTree& tree) {
    json out{{"format_version", "1"},
             {"leaf_count", tree.leaf_count()},
             {"root", node_to_json(tree.root())}};
    return out.dump(2) + "\n";
}

PartitionTree partition_tree_from_json(const std::string& json_text,
                                       const ConvexPolygon& dough) {
    const json doc = parse_text(json_text, "partition tree");
    if (!doc.is_object() || !doc.contains("root")) {
        throw InvalidInput("partition tree: expected an object with \"root\"");
    }
    return PartitionTree(node_from_json(doc["root"], dough));
}

std::string fairness_report_to_json(const FairnessReport& report) {
    json out{{"format_version", "1"},
             {"n", report.dough_areas.size()},
             {"dough_areas", report.dough_areas},
             {"topping_areas", report.topping_areas},
             {"max_dough_deviation", report.max_dough_deviation},
             {"max_topping_deviation", report.max_topping_deviation},
             {"fair", report.fair},
             {"tolerance", report.tolerance},
             {"dough_total", report.dough_total},
             {"topping_total", report.topping_total}};
    return out.dump(2) + "\n";
}

std::string simultaneous_section_to_json(const SimultaneousSection& section) {
    json out{{"format_version", "1"},
             {"line", line_to_json(section.line)},
             {"alpha", section.alpha},
             {"beta", section.beta},
             {"residual", section.residual}};
    return out.dump(2) + "\n";
}

std::string chain_report_to_json(const ChainReport& report) {
    json points = json::array();
    for (const BoundaryPoint& p : report.points) {
        points.push_back(json{{"edge_index", p.edge_index},
                              {"fraction", p.fraction},
                              {"point", json::array({p.point.x, p.point.y})}});
    }
    json lines = json::array();
    json caps = json::array();
    for (const Cap& cap : report.caps) {
        lines.push_back(line_to_json(cap.line));
        caps.push_back(vertices_to_json(cap.polygon.vertices()));
    }
    auto samples_to_json = [](const std::vector<CoverageSample>& samples) {
        json arr = json::array();
        for (const CoverageSample& s : samples) {
            arr.push_back(json{{"point", json::array({s.point.x, s.point.y})},
                               {"count", s.count}});
        }
        return arr;
    };
    json out{{"format_version", "1"},
             {"alpha", report.alpha},
             {"n", report.lines.size()},
             {"points", points},
             {"lines", lines},
             {"caps", caps},
             {"k", report.k},
             {"closure_residual", report.closure_residual},
             {"covering",
              json{{"boundary", samples_to_json(report.boundary_samples)},
                   {"interior", samples_to_json(report.interior_samples)}}}};
    return out.dump(2) + "\n";
}

std::string profile_to_csv(const SectionProfile& profile) {
    std::ostringstream out;
    out << "theta,t,fraction\n";
    char buf[128];
    for (std::size_t i = 0; i < profile.thetas.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", profile.thetas[i],
                      profile.offsets[i], profile.fractions[i]);
        out << buf;
    }
    return out.str();
}

std::string error_to_json(int code, const std::string& kind, const std::string& message) {
    json out{{"error", json{{"code", code}, {"kind", kind}, {"message", message}}}};
    return out.dump(2) + "\n";
}

}  // namespace pizza
