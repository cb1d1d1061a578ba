#include "bkpvc/forest_io.hpp"

#include <fstream>
#include <sstream>

#include "bkpvc/error.hpp"

namespace bkpvc {

using nlohmann::json;

json to_json(const UndirectedForest& forest) {
    json edges = json::array();
    for (const auto& [u, v] : forest.edges()) edges.push_back({u, v});
    return {{"kind", "undirected"}, {"n", forest.size()}, {"edges", std::move(edges)}};
}

json to_json(const RootedDirectedForest& forest) {
    json parent = json::array();
    for (const auto& p : forest.parents()) {
        if (p) {
            parent.push_back(*p);
        } else {
            parent.push_back(nullptr);
        }
    }
    return {{"kind", "directed"}, {"n", forest.size()}, {"parent", std::move(parent)}};
}

json to_json(const AnyForest& forest) {
    return std::visit([](const auto& f) { return to_json(f); }, forest);
}

namespace {

Vertex read_vertex(const json& value, const char* what) {
    if (!value.is_number_integer()) throw Error(Errc::parse_error, std::string(what) + " must be an integer");
    const auto id = value.get<std::int64_t>();
    if (id < 0 || id > static_cast<std::int64_t>(UINT32_MAX)) {
        throw Error(Errc::invalid_vertex, std::string(what) + " " + std::to_string(id) + " is out of range");
    }
    return static_cast<Vertex>(id);
}

}  // namespace

AnyForest forest_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(Errc::parse_error, "forest document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) throw Error(Errc::parse_error, "missing string field \"kind\"");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0) {
        throw Error(Errc::parse_error, "missing non-negative integer field \"n\"");
    }
    const auto n = doc["n"].get<std::size_t>();
    const auto kind = doc["kind"].get<std::string>();

    if (kind == "undirected") {
        if (!doc.contains("edges") || !doc["edges"].is_array()) throw Error(Errc::parse_error, "missing array \"edges\"");
        std::vector<Edge> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) throw Error(Errc::parse_error, "each edge must be a pair [u,v]");
            edges.emplace_back(read_vertex(e[0], "edge endpoint"), read_vertex(e[1], "edge endpoint"));
        }
        return UndirectedForest::build(n, edges);
    }
    if (kind == "directed") {
        if (!doc.contains("parent") || !doc["parent"].is_array()) throw Error(Errc::parse_error, "missing array \"parent\"");
        const auto& raw = doc["parent"];
        if (raw.size() != n) throw Error(Errc::parse_error, "\"parent\" must have exactly n entries");
        std::vector<std::optional<Vertex>> parent;
        parent.reserve(n);
        for (const auto& p : raw) {
            if (p.is_null()) {
                parent.emplace_back();
            } else {
                parent.emplace_back(read_vertex(p, "parent"));
            }
        }
        return RootedDirectedForest::build(parent);
    }
    throw Error(Errc::parse_error, "unknown forest kind \"" + kind + "\"");
}

AnyForest read_forest_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, path.string() + ": " + e.what());
    }
    return forest_from_json(doc);
}

namespace {

void write_vertices(std::ostringstream& out, std::span<const VertexKind> classes) {
    for (std::size_t v = 0; v < classes.size(); ++v) {
        out << "  " << v;
        if (classes[v] == VertexKind::leaf) out << " [shape=box]";
        if (classes[v] == VertexKind::branching) out << " [shape=diamond]";
        out << ";\n";
    }
}

}  // namespace

std::string to_dot(const UndirectedForest& forest) {
    std::ostringstream out;
    out << "graph forest {\n";
    write_vertices(out, classify(forest));
    for (const auto& [u, v] : forest.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const RootedDirectedForest& forest) {
    std::ostringstream out;
    out << "digraph forest {\n";
    write_vertices(out, classify(forest));
    for (Vertex v = 0; v < forest.size(); ++v) {
        for (Vertex c : forest.children(v)) out << "  " << v << " -> " << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const AnyForest& forest) {
    return std::visit([](const auto& f) { return to_dot(f); }, forest);
}

}  // namespace bkpvc
