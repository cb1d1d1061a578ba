#ifndef BKPVC_FOREST_HPP
#define BKPVC_FOREST_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace bkpvc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class ForestKind { directed, undirected };

const char* to_string(ForestKind kind) noexcept;

enum class VertexKind : std::uint8_t { leaf, internal_plain, branching };

/// Acyclic simple undirected graph on vertices 0..n-1, possibly disconnected.
/// Immutable once built; adjacency lists are sorted ascending.
class UndirectedForest {
   public:
    UndirectedForest() = default;

    /// Throws Error with InvalidVertex, SelfLoop, DuplicateEdge or
    /// CycleDetected, checked edge by edge in input order.
    static UndirectedForest build(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

    /// Edges normalized to (min, max), sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t component_count() const noexcept { return component_count_; }

    /// Component index of every vertex; components are numbered by their
    /// smallest vertex, in ascending order.
    const std::vector<std::size_t>& component_of() const noexcept { return component_of_; }

    bool operator==(const UndirectedForest& other) const { return adjacency_ == other.adjacency_; }

   private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> component_of_;
    std::size_t component_count_ = 0;
};

/// Rooted forest with arcs oriented parent -> child.
class RootedDirectedForest {
   public:
    RootedDirectedForest() = default;

    /// Throws Error with InvalidVertex or CycleDetected.
    static RootedDirectedForest build(std::span<const std::optional<Vertex>> parent);

    std::size_t size() const noexcept { return parent_.size(); }
    std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
    const std::vector<std::optional<Vertex>>& parents() const noexcept { return parent_; }
    std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
    std::size_t out_degree(Vertex v) const { return children_.at(v).size(); }
    bool is_root(Vertex v) const { return !parent_.at(v).has_value(); }

    /// Roots in ascending order.
    const std::vector<Vertex>& roots() const noexcept { return roots_; }

    /// Arc distance from the root of the vertex's component.
    std::size_t depth(Vertex v) const { return depth_.at(v); }

    bool operator==(const RootedDirectedForest& other) const { return parent_ == other.parent_; }

   private:
    std::vector<std::optional<Vertex>> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> roots_;
    std::vector<std::size_t> depth_;
};

using AnyForest = std::variant<UndirectedForest, RootedDirectedForest>;

ForestKind kind_of(const AnyForest& forest) noexcept;
std::size_t size_of(const AnyForest& forest) noexcept;

// leaf: degree <= 1 (isolated vertices included); branching: degree >= 3.
std::vector<VertexKind> classify(const UndirectedForest& forest);
// leaf: out-degree 0; branching: out-degree >= 2.
std::vector<VertexKind> classify(const RootedDirectedForest& forest);
std::vector<VertexKind> classify(const AnyForest& forest);

struct ClassCounts {
    std::size_t leaves = 0;
    std::size_t internal_plain = 0;
    std::size_t branching = 0;
};

ClassCounts count_classes(std::span<const VertexKind> classes) noexcept;

}  // namespace bkpvc

#endif
