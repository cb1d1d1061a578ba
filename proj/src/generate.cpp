#include "bkpvc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "bkpvc/error.hpp"

namespace bkpvc {

namespace {

void check_family(std::size_t i, std::size_t k) {
    if (i < 1) throw Error(Errc::invalid_params, "family index must be at least 1");
    if (k < 2) throw Error(Errc::invalid_params, "k must be at least 2");
}

// Parent array with parent < child, before relabelling.
std::vector<std::optional<Vertex>> random_parents(std::size_t n, std::mt19937_64& rng, double component_bias) {
    if (n < 1) throw Error(Errc::invalid_params, "n must be at least 1");
    if (!(component_bias >= 0.0 && component_bias <= 1.0)) {
        throw Error(Errc::invalid_params, "component bias must lie in [0,1]");
    }
    // Per-forest mix between path-like and bushy attachment, so that
    // campaigns see both long bare segments and many branching vertices.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double chain_bias = unit(rng);

    std::vector<std::optional<Vertex>> parent(n);
    for (std::size_t v = 1; v < n; ++v) {
        if (unit(rng) < component_bias) continue;
        if (unit(rng) < chain_bias) {
            parent[v] = static_cast<Vertex>(v - 1);
        } else {
            parent[v] = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        }
    }
    return parent;
}

std::vector<Vertex> random_labels(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    std::shuffle(label.begin(), label.end(), rng);
    return label;
}

}  // namespace

RootedDirectedForest gen_directed_extremal(std::size_t i, std::size_t k) {
    check_family(i, k);
    const std::size_t n = k * (2 * i - 1);
    std::vector<std::optional<Vertex>> parent(n);
    // Level j (0-based, outermost first) occupies ids [2kj, 2kj + 2k); the
    // innermost level is the bare k-path of F_1.
    for (std::size_t level = 0; level + 1 < i; ++level) {
        const std::size_t base = 2 * k * level;
        for (std::size_t j = 1; j < 2 * k; ++j) parent[base + j] = static_cast<Vertex>(base + j - 1);
        parent[base + 2 * k] = static_cast<Vertex>(base + k - 1);
    }
    const std::size_t inner = 2 * k * (i - 1);
    for (std::size_t j = 1; j < k; ++j) parent[inner + j] = static_cast<Vertex>(inner + j - 1);
    return RootedDirectedForest::build(parent);
}

UndirectedForest gen_undirected_extremal(std::size_t i, std::size_t k) {
    check_family(i, k);
    std::vector<Edge> edges;
    std::vector<std::size_t> degree(k + 1, 0);
    auto add_edge = [&](std::size_t a, std::size_t b) {
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        ++degree[a];
        ++degree[b];
    };
    for (std::size_t v = 0; v < k; ++v) add_edge(v, v + 1);

    for (std::size_t step = 1; step < i; ++step) {
        std::size_t u = degree.size() - 1;
        while (degree[u] > 1) --u;  // highest-id leaf
        for (int copy = 0; copy < 2; ++copy) {
            const std::size_t first = degree.size();
            degree.resize(first + k, 0);
            add_edge(u, first);
            for (std::size_t j = 1; j < k; ++j) add_edge(first + j - 1, first + j);
        }
    }
    return UndirectedForest::build(degree.size(), edges);
}

RootedDirectedForest random_directed_forest(std::size_t n, std::uint64_t seed, double component_bias) {
    std::mt19937_64 rng(seed);
    const auto parent = random_parents(n, rng, component_bias);
    const auto label = random_labels(n, rng);
    std::vector<std::optional<Vertex>> relabelled(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (parent[v]) relabelled[label[v]] = label[*parent[v]];
    }
    return RootedDirectedForest::build(relabelled);
}

UndirectedForest random_undirected_forest(std::size_t n, std::uint64_t seed, double component_bias) {
    std::mt19937_64 rng(seed);
    const auto parent = random_parents(n, rng, component_bias);
    const auto label = random_labels(n, rng);
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) {
        if (parent[v]) edges.emplace_back(label[*parent[v]], label[v]);
    }
    return UndirectedForest::build(n, edges);
}

AnyForest gen_random(ForestKind kind, std::size_t n, std::uint64_t seed, double component_bias) {
    if (kind == ForestKind::directed) return random_directed_forest(n, seed, component_bias);
    return random_undirected_forest(n, seed, component_bias);
}

}  // namespace bkpvc
