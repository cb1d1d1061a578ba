#include "bkpvc/forest.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bkpvc/error.hpp"

namespace bkpvc {

namespace {

class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

   private:
    std::vector<std::size_t> parent_;
};

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

const char* to_string(ForestKind kind) noexcept {
    return kind == ForestKind::directed ? "directed" : "undirected";
}

UndirectedForest UndirectedForest::build(std::size_t n, std::span<const Edge> edges) {
    UndirectedForest forest;
    forest.adjacency_.resize(n);
    DisjointSets sets(n);
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        if (e.first >= n || e.second >= n) {
            throw Error(Errc::invalid_vertex, "edge " + edge_text(e) + " has an endpoint >= n=" + std::to_string(n));
        }
        if (e.first == e.second) throw Error(Errc::self_loop, "edge " + edge_text(e));
        const Edge normalized{std::min(e.first, e.second), std::max(e.first, e.second)};
        if (!seen.insert(normalized).second) throw Error(Errc::duplicate_edge, "edge " + edge_text(e));
        if (!sets.unite(e.first, e.second)) throw Error(Errc::cycle_detected, "edge " + edge_text(e) + " closes a cycle");
        forest.adjacency_[e.first].push_back(e.second);
        forest.adjacency_[e.second].push_back(e.first);
    }
    for (auto& list : forest.adjacency_) std::sort(list.begin(), list.end());
    forest.edges_.assign(seen.begin(), seen.end());

    forest.component_of_.assign(n, 0);
    std::vector<std::size_t> index_of_root(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = sets.find(v);  // smallest vertex of the component
        if (index_of_root[root] == n) index_of_root[root] = forest.component_count_++;
        forest.component_of_[v] = index_of_root[root];
    }
    return forest;
}

RootedDirectedForest RootedDirectedForest::build(std::span<const std::optional<Vertex>> parent) {
    const std::size_t n = parent.size();
    RootedDirectedForest forest;
    forest.parent_.assign(parent.begin(), parent.end());
    forest.children_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!parent[v]) {
            forest.roots_.push_back(static_cast<Vertex>(v));
            continue;
        }
        if (*parent[v] >= n) {
            throw Error(Errc::invalid_vertex, "parent of " + std::to_string(v) + " is " + std::to_string(*parent[v]) +
                                                  " >= n=" + std::to_string(n));
        }
        forest.children_[*parent[v]].push_back(static_cast<Vertex>(v));
    }

    // Walk parent chains; 0 = unvisited, 1 = on the current chain, 2 = done.
    std::vector<std::uint8_t> state(n, 0);
    forest.depth_.assign(n, 0);
    std::vector<Vertex> chain;
    for (std::size_t start = 0; start < n; ++start) {
        chain.clear();
        std::size_t v = start;
        while (state[v] == 0) {
            state[v] = 1;
            chain.push_back(static_cast<Vertex>(v));
            if (!parent[v]) break;
            v = *parent[v];
        }
        if (state[v] == 1 && parent[v]) {
            throw Error(Errc::cycle_detected, "parent chain from " + std::to_string(start) + " revisits " + std::to_string(v));
        }
        // Assign depths from the top of the chain downwards.
        std::size_t depth = state[v] == 2 ? forest.depth_[v] + 1 : 0;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            if (state[*it] == 2) continue;
            forest.depth_[*it] = depth++;
            state[*it] = 2;
        }
    }
    return forest;
}

ForestKind kind_of(const AnyForest& forest) noexcept {
    return std::holds_alternative<RootedDirectedForest>(forest) ? ForestKind::directed : ForestKind::undirected;
}

std::size_t size_of(const AnyForest& forest) noexcept {
    return std::visit([](const auto& f) { return f.size(); }, forest);
}

std::vector<VertexKind> classify(const UndirectedForest& forest) {
    std::vector<VertexKind> classes(forest.size());
    for (Vertex v = 0; v < forest.size(); ++v) {
        const std::size_t d = forest.degree(v);
        classes[v] = d <= 1 ? VertexKind::leaf : d == 2 ? VertexKind::internal_plain : VertexKind::branching;
    }
    return classes;
}

std::vector<VertexKind> classify(const RootedDirectedForest& forest) {
    std::vector<VertexKind> classes(forest.size());
    for (Vertex v = 0; v < forest.size(); ++v) {
        const std::size_t d = forest.out_degree(v);
        classes[v] = d == 0 ? VertexKind::leaf : d == 1 ? VertexKind::internal_plain : VertexKind::branching;
    }
    return classes;
}

std::vector<VertexKind> classify(const AnyForest& forest) {
    return std::visit([](const auto& f) { return classify(f); }, forest);
}

ClassCounts count_classes(std::span<const VertexKind> classes) noexcept {
    ClassCounts counts;
    for (VertexKind c : classes) {
        switch (c) {
            case VertexKind::leaf: ++counts.leaves; break;
            case VertexKind::internal_plain: ++counts.internal_plain; break;
            case VertexKind::branching: ++counts.branching; break;
        }
    }
    return counts;
}

}  // namespace bkpvc
