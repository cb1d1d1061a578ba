#include "bkpvc/cover.hpp"

#include <algorithm>
#include <string>

#include "bkpvc/error.hpp"

namespace bkpvc {

CoverSet::CoverSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CoverSet CoverSet::all(std::size_t n) {
    std::vector<Vertex> members(n);
    for (std::size_t v = 0; v < n; ++v) members[v] = static_cast<Vertex>(v);
    return CoverSet(std::move(members));
}

bool CoverSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::vector<bool> CoverSet::mask(std::size_t n) const {
    std::vector<bool> in(n, false);
    for (Vertex v : members_) {
        if (v >= n) throw Error(Errc::invalid_vertex, "cover member " + std::to_string(v) + " >= n=" + std::to_string(n));
        in[v] = true;
    }
    return in;
}

const char* to_string(Violation::Kind kind) noexcept {
    return kind == Violation::Kind::uncovered_leaf ? "uncovered-leaf" : "uncovered-path";
}

namespace {

void check_arguments(std::size_t n, std::size_t k) {
    if (k < 2) throw Error(Errc::invalid_k, "k must be at least 2, got " + std::to_string(k));
    if (n == 0) throw Error(Errc::empty_forest, "forest has no vertices");
}

std::optional<Violation> uncovered_leaf(std::span<const VertexKind> classes, const std::vector<bool>& in_cover) {
    for (std::size_t v = 0; v < classes.size(); ++v) {
        if (classes[v] == VertexKind::leaf && !in_cover[v]) {
            return Violation{Violation::Kind::uncovered_leaf, {static_cast<Vertex>(v)}};
        }
    }
    return std::nullopt;
}

// Walks simple paths from the back of `path`; `next` yields the successors
// of a vertex, `accept` filters complete k-vertex paths before the cover test.
template <typename Next, typename Accept>
bool find_bare_path(std::vector<Vertex>& path, std::size_t k, std::span<const VertexKind> classes,
                    const std::vector<bool>& in_cover, Next&& next, Accept&& accept) {
    const Vertex last = path.back();
    if (path.size() == k) {
        if (!accept(path)) return false;
        return std::none_of(path.begin(), path.end(), [&](Vertex v) {
            return in_cover[v] || classes[v] == VertexKind::branching;
        });
    }
    for (Vertex w : next(last)) {
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        if (find_bare_path(path, k, classes, in_cover, next, accept)) return true;
        path.pop_back();
    }
    return false;
}

BareSegment walk_segment(Vertex start, std::span<const VertexKind> classes, std::vector<bool>& visited,
                         auto&& successor) {
    BareSegment segment;
    std::optional<Vertex> current = start;
    while (current) {
        const Vertex v = *current;
        visited[v] = true;
        if (classes[v] == VertexKind::leaf) segment.forced.push_back(segment.vertices.size());
        segment.vertices.push_back(v);
        current = successor(v);
    }
    return segment;
}

VerifyResult check_windows(const BareSegmentDecomposition& decomposition, std::size_t k,
                           const std::vector<bool>& in_cover) {
    for (const auto& segment : decomposition.segments) {
        std::size_t run = 0;
        for (std::size_t i = 0; i < segment.vertices.size(); ++i) {
            run = in_cover[segment.vertices[i]] ? 0 : run + 1;
            if (run == k) {
                const auto first = segment.vertices.begin() + static_cast<std::ptrdiff_t>(i + 1 - k);
                return {Violation{Violation::Kind::uncovered_path, std::vector<Vertex>(first, first + k)}};
            }
        }
    }
    return {};
}

}  // namespace

BareSegmentDecomposition decompose_bare_segments(const UndirectedForest& forest) {
    const std::size_t n = forest.size();
    if (n == 0) throw Error(Errc::empty_forest, "forest has no vertices");
    const auto classes = classify(forest);
    auto bare_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : forest.neighbors(v)) {
            if (classes[w] != VertexKind::branching) out.push_back(w);
        }
        return out;
    };

    BareSegmentDecomposition result;
    std::vector<bool> visited(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (visited[v] || classes[v] == VertexKind::branching || bare_neighbors(v).size() > 1) continue;
        // v is an endpoint of its segment, and the smaller one since the
        // other endpoint has not been visited yet.
        std::optional<Vertex> previous;
        result.segments.push_back(walk_segment(v, classes, visited, [&](Vertex u) -> std::optional<Vertex> {
            for (Vertex w : bare_neighbors(u)) {
                if (w != previous) {
                    previous = u;
                    return w;
                }
            }
            return std::nullopt;
        }));
    }
    return result;
}

BareSegmentDecomposition decompose_bare_segments(const RootedDirectedForest& forest) {
    const std::size_t n = forest.size();
    if (n == 0) throw Error(Errc::empty_forest, "forest has no vertices");
    const auto classes = classify(forest);

    BareSegmentDecomposition result;
    std::vector<bool> visited(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (classes[v] == VertexKind::branching) continue;
        const auto parent = forest.parent(v);
        if (parent && classes[*parent] != VertexKind::branching) continue;  // not a segment head
        result.segments.push_back(walk_segment(v, classes, visited, [&](Vertex u) -> std::optional<Vertex> {
            if (forest.out_degree(u) != 1) return std::nullopt;
            const Vertex child = forest.children(u).front();
            if (classes[child] == VertexKind::branching) return std::nullopt;
            return child;
        }));
    }
    return result;
}

BareSegmentDecomposition decompose_bare_segments(const AnyForest& forest) {
    return std::visit([](const auto& f) { return decompose_bare_segments(f); }, forest);
}

VerifyResult verify_naive(const UndirectedForest& forest, std::size_t k, const CoverSet& cover) {
    check_arguments(forest.size(), k);
    const auto in_cover = cover.mask(forest.size());
    const auto classes = classify(forest);
    if (auto leaf = uncovered_leaf(classes, in_cover)) return {std::move(leaf)};

    auto next = [&](Vertex v) { return forest.neighbors(v); };
    // Each undirected path is visited from both ends; keep one orientation.
    auto accept = [](const std::vector<Vertex>& path) { return path.front() < path.back(); };
    std::vector<Vertex> path;
    for (Vertex start = 0; start < forest.size(); ++start) {
        path.assign(1, start);
        if (find_bare_path(path, k, classes, in_cover, next, accept)) {
            return {Violation{Violation::Kind::uncovered_path, path}};
        }
    }
    return {};
}

VerifyResult verify_naive(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover) {
    check_arguments(forest.size(), k);
    const auto in_cover = cover.mask(forest.size());
    const auto classes = classify(forest);
    if (auto leaf = uncovered_leaf(classes, in_cover)) return {std::move(leaf)};

    auto next = [&](Vertex v) { return forest.children(v); };
    auto accept = [](const std::vector<Vertex>&) { return true; };
    std::vector<Vertex> path;
    for (Vertex start = 0; start < forest.size(); ++start) {
        path.assign(1, start);
        if (find_bare_path(path, k, classes, in_cover, next, accept)) {
            return {Violation{Violation::Kind::uncovered_path, path}};
        }
    }
    return {};
}

VerifyResult verify_naive(const AnyForest& forest, std::size_t k, const CoverSet& cover) {
    return std::visit([&](const auto& f) { return verify_naive(f, k, cover); }, forest);
}

namespace {

template <typename Forest>
VerifyResult verify_fast_impl(const Forest& forest, std::size_t k, const CoverSet& cover) {
    check_arguments(forest.size(), k);
    const auto in_cover = cover.mask(forest.size());
    if (auto leaf = uncovered_leaf(classify(forest), in_cover)) return {std::move(leaf)};
    return check_windows(decompose_bare_segments(forest), k, in_cover);
}

}  // namespace

VerifyResult verify_fast(const UndirectedForest& forest, std::size_t k, const CoverSet& cover) {
    return verify_fast_impl(forest, k, cover);
}

VerifyResult verify_fast(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover) {
    return verify_fast_impl(forest, k, cover);
}

VerifyResult verify_fast(const AnyForest& forest, std::size_t k, const CoverSet& cover) {
    return std::visit([&](const auto& f) { return verify_fast(f, k, cover); }, forest);
}

}  // namespace bkpvc
