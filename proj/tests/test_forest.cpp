#include <doctest.h>

#include "bkpvc/error.hpp"
#include "bkpvc/forest.hpp"
#include "bkpvc/forest_io.hpp"
#include "bkpvc/generate.hpp"
#include "support/oracles.hpp"

using namespace bkpvc;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::parse_error;
}

std::vector<std::optional<Vertex>> path_parents(std::size_t n) {
    std::vector<std::optional<Vertex>> parent(n);
    for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(v - 1);
    return parent;
}

}  // namespace

TEST_CASE("build_undirected accepts forests and rejects the rest") {
    const auto single = UndirectedForest::build(1, {});
    CHECK(single.size() == 1);
    CHECK(single.component_count() == 1);
    CHECK(classify(single)[0] == VertexKind::leaf);

    const std::vector<Edge> triangle{{0, 1}, {1, 2}, {2, 0}};
    CHECK(error_of([&] { UndirectedForest::build(3, triangle); }) == Errc::cycle_detected);
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK(error_of([&] { UndirectedForest::build(3, out_of_range); }) == Errc::invalid_vertex);
    const std::vector<Edge> duplicate{{0, 1}, {1, 0}};
    CHECK(error_of([&] { UndirectedForest::build(3, duplicate); }) == Errc::duplicate_edge);
    const std::vector<Edge> loop{{1, 1}};
    CHECK(error_of([&] { UndirectedForest::build(3, loop); }) == Errc::self_loop);

    const auto empty = UndirectedForest::build(0, {});
    CHECK(empty.size() == 0);
    CHECK(empty.component_count() == 0);
}

TEST_CASE("undirected tight family F_2 for k=2 is one tree on 7 vertices") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
    const auto f = UndirectedForest::build(7, edges);
    CHECK(f.component_count() == 1);
    CHECK(f == gen_undirected_extremal(2, 2));
}

TEST_CASE("build_directed") {
    const std::vector<std::optional<Vertex>> lone{std::nullopt};
    const auto one = RootedDirectedForest::build(lone);
    CHECK(one.roots() == std::vector<Vertex>{0});
    CHECK(classify(one)[0] == VertexKind::leaf);

    const std::vector<std::optional<Vertex>> two_cycle{1, 0};
    CHECK(error_of([&] { RootedDirectedForest::build(two_cycle); }) == Errc::cycle_detected);
    const std::vector<std::optional<Vertex>> self{std::nullopt, 1};
    CHECK(error_of([&] { RootedDirectedForest::build(self); }) == Errc::cycle_detected);
    const std::vector<std::optional<Vertex>> far{std::nullopt, 7};
    CHECK(error_of([&] { RootedDirectedForest::build(far); }) == Errc::invalid_vertex);

    const auto path = RootedDirectedForest::build(path_parents(4));
    const auto counts = count_classes(classify(path));
    CHECK(path.roots().size() == 1);
    CHECK(counts.leaves == 1);
    CHECK(counts.branching == 0);
    CHECK(path.depth(3) == 3);
}

TEST_CASE("children are sorted and invert the parent map") {
    const std::vector<std::optional<Vertex>> parent{4, 4, std::nullopt, 4, std::nullopt, 2};
    const auto f = RootedDirectedForest::build(parent);
    CHECK(std::vector<Vertex>(f.children(4).begin(), f.children(4).end()) == std::vector<Vertex>{0, 1, 3});
    CHECK(f.roots() == std::vector<Vertex>{2, 4});
    CHECK(f.depth(5) == 1);
}

TEST_CASE("classify") {
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    const auto s = classify(UndirectedForest::build(4, star));
    CHECK(s[0] == VertexKind::branching);
    CHECK(count_classes(s).leaves == 3);

    const auto p = count_classes(classify(RootedDirectedForest::build(path_parents(5))));
    CHECK(p.leaves == 1);
    CHECK(p.internal_plain == 4);
    CHECK(p.branching == 0);

    // k=3: the 3rd vertex of the outer 6-path carries the extra arc.
    const auto f2 = gen_directed_extremal(2, 3);
    CHECK(f2.out_degree(2) == 2);
    CHECK(classify(f2)[2] == VertexKind::branching);
}

TEST_CASE("structural invariants on random forests") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 40;
        const double bias = (seed % 4) * 0.15;
        const auto u = random_undirected_forest(n, seed, bias);
        CHECK(u.edges().size() == n - u.component_count());
        const auto uc = count_classes(classify(u));
        CHECK(uc.leaves + uc.internal_plain + uc.branching == n);

        const auto d = random_directed_forest(n, seed, bias);
        std::size_t with_parent = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (d.parent(v)) ++with_parent;
            CHECK(d.depth(v) < n);
            for (Vertex c : d.children(v)) CHECK(d.parent(c) == v);
        }
        CHECK(d.roots().size() == n - with_parent);
        const auto dc = count_classes(classify(d));
        CHECK(dc.leaves >= 1);
        CHECK(dc.leaves + dc.internal_plain + dc.branching == n);
    }
}

TEST_CASE("JSON documents round-trip and reject malformed input") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const AnyForest d = random_directed_forest(1 + seed, seed, 0.2);
        const AnyForest u = random_undirected_forest(1 + seed, seed, 0.2);
        CHECK(forest_from_json(to_json(d)) == d);
        CHECK(forest_from_json(to_json(u)) == u);
    }
    using nlohmann::json;
    CHECK(error_of([] { forest_from_json(json::parse(R"({"kind":"tree","n":1})")); }) == Errc::parse_error);
    CHECK(error_of([] { forest_from_json(json::parse(R"({"kind":"directed","n":2,"parent":[null]})")); }) ==
          Errc::parse_error);
    CHECK(error_of([] { forest_from_json(json::parse(R"({"kind":"directed","n":2,"parent":[1,0]})")); }) ==
          Errc::cycle_detected);
    CHECK(error_of([] { forest_from_json(json::parse(R"({"kind":"undirected","n":2,"edges":[[0,-1]]})")); }) ==
          Errc::invalid_vertex);
}

TEST_CASE("DOT export marks leaves and branching vertices") {
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    const auto dot = to_dot(UndirectedForest::build(4, star));
    CHECK(dot.find("graph forest") == 0);
    CHECK(dot.find("0 [shape=diamond]") != std::string::npos);
    CHECK(dot.find("1 [shape=box]") != std::string::npos);
    CHECK(dot.find("0 -- 3") != std::string::npos);

    const auto ddot = to_dot(RootedDirectedForest::build(path_parents(2)));
    CHECK(ddot.find("digraph forest") == 0);
    CHECK(ddot.find("0 -> 1") != std::string::npos);
}
