#include <doctest.h>

#include "bkpvc/bounds.hpp"
#include "bkpvc/error.hpp"
#include "bkpvc/generate.hpp"
#include "bkpvc/solver.hpp"
#include "support/oracles.hpp"

using namespace bkpvc;

namespace {

RootedDirectedForest directed_path(std::size_t n) {
    std::vector<std::optional<Vertex>> parent(n);
    for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(v - 1);
    return RootedDirectedForest::build(parent);
}

CoverSet leaves_of(const RootedDirectedForest& f) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < f.size(); ++v) {
        if (f.out_degree(v) == 0) out.push_back(v);
    }
    return CoverSet(out);
}

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::parse_error;
}

}  // namespace

TEST_CASE("lower_bound values") {
    for (std::int64_t i = 1; i <= 8; ++i) {
        for (std::size_t k = 2; k <= 6; ++k) {
            const auto kk = static_cast<std::int64_t>(k);
            const auto d = lower_bound(ForestKind::directed, k * (2 * i - 1), k);
            CHECK(d.integral());
            CHECK(d.equals(i));
            CHECK(d.ceiling == i);
            CHECK(d.denominator == 2 * kk);
            const auto u = lower_bound(ForestKind::undirected, k * (2 * i - 1) + 1, k);
            CHECK(u.equals(i + 1));
            CHECK(u.ceiling == i + 1);
        }
    }
    const auto small = lower_bound(ForestKind::directed, 1, 2);
    CHECK(small.numerator == 3);
    CHECK(small.denominator == 4);
    CHECK(small.ceiling == 1);
    CHECK_FALSE(small.integral());

    CHECK(error_of([] { lower_bound(ForestKind::directed, 0, 2); }) == Errc::domain_violation);
    CHECK(error_of([] { lower_bound(ForestKind::undirected, 1, 2); }) == Errc::domain_violation);
    CHECK(error_of([] { lower_bound(ForestKind::undirected, 5, 1); }) == Errc::invalid_k);
}

TEST_CASE("peel_certificate on a single k-path is one base step") {
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto f = directed_path(k);
        const CoverSet p({static_cast<Vertex>(k - 1)});
        const auto trace = peel_certificate(f, k, p);
        REQUIRE(trace.steps.size() == 1);
        CHECK(trace.steps[0].kind == PeelCase::base);
        CHECK(trace.steps[0].p_removed == 1);
        CHECK(trace.certified == 1);
        CHECK(trace.bound.equals(1));
        CHECK(check_certificate(f, k, p, trace).ok);
    }
}

TEST_CASE("peel_certificate on the directed tight family is exact") {
    for (std::size_t i = 1; i <= 8; ++i) {
        for (std::size_t k = 2; k <= 6; ++k) {
            const auto f = gen_directed_extremal(i, k);
            const auto p = leaves_of(f);
            const auto trace = peel_certificate(f, k, p);
            CHECK(trace.cover_size == i);
            CHECK(trace.certified == i);
            CHECK(trace.bound.equals(static_cast<std::int64_t>(i)));
            for (const auto& s : trace.steps) {
                if (s.kind == PeelCase::path_removal) CHECK(s.removed.size() <= k);
                if (s.kind == PeelCase::branching_fan) CHECK(s.fan_width >= 2);
            }
            const auto check = check_certificate(f, k, p, trace);
            CHECK_MESSAGE(check.ok, check.failure);
        }
    }
    // F_2, k=3: one fan below vertex 2 (the 3rd vertex of the outer path), then the base.
    const auto trace = peel_certificate(gen_directed_extremal(2, 3), 3, CoverSet({5, 8}));
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].kind == PeelCase::branching_fan);
    CHECK(trace.steps[0].kept_branching == Vertex{2});
    CHECK(trace.steps[0].removed == std::vector<Vertex>{3, 4, 5, 6, 7, 8});
    CHECK(trace.steps[1].removed == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("peel_certificate path-removal with a cover parent") {
    // 0->1->2->3->4->5 with P = {2, 5}, k=3: the walk from leaf 5 stops below 2.
    const auto f = directed_path(6);
    const CoverSet p({2, 5});
    const auto trace = peel_certificate(f, 3, p);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].kind == PeelCase::path_removal);
    CHECK(trace.steps[0].stop == PathStop::cover_parent);
    CHECK(trace.steps[0].removed == std::vector<Vertex>{3, 4, 5});
    CHECK(trace.steps[1].kind == PeelCase::base);
    CHECK(trace.steps[1].removed == std::vector<Vertex>{0, 1, 2});
    CHECK(trace.certified == 2);
    CHECK(trace.bound.ceiling == 2);
    CHECK(check_certificate(f, 3, p, trace).ok);
}

TEST_CASE("peel_certificate rejects non-covers") {
    const auto f = directed_path(5);
    CHECK(error_of([&] { peel_certificate(f, 2, CoverSet({4})); }) == Errc::not_a_cover);
    CHECK(error_of([&] { peel_certificate(f, 1, CoverSet({4})); }) == Errc::invalid_k);
}

TEST_CASE("check_certificate catches tampered traces") {
    const auto f = gen_directed_extremal(3, 2);
    const auto p = leaves_of(f);
    const auto good = peel_certificate(f, 2, p);
    REQUIRE(check_certificate(f, 2, p, good).ok);

    auto inflated = good;
    ++inflated.certified;
    CHECK_FALSE(check_certificate(f, 2, p, inflated).ok);

    auto truncated = good;
    truncated.steps.erase(truncated.steps.begin());
    CHECK_FALSE(check_certificate(f, 2, p, truncated).ok);

    auto short_fan = good;
    for (auto& s : short_fan.steps) {
        if (s.kind == PeelCase::branching_fan) {
            s.removed.pop_back();
            break;
        }
    }
    CHECK_FALSE(check_certificate(f, 2, p, short_fan).ok);

    auto wider = good;
    for (auto& s : wider.steps) {
        if (s.kind == PeelCase::branching_fan) s.fan_width += 1;
    }
    CHECK_FALSE(check_certificate(f, 2, p, wider).ok);
}

TEST_CASE("certificates for random directed forests") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 40;
        const std::size_t k = 2 + seed % 4;
        const auto f = random_directed_forest(n, seed, 0.1);
        for (const auto& p : {solve(f, k).witness, CoverSet::all(n)}) {
            const auto trace = peel_certificate(f, k, p);
            const auto check = check_certificate(f, k, p, trace);
            CHECK_MESSAGE(check.ok, check.failure);
            CHECK(trace.bound.satisfied_by(static_cast<std::int64_t>(trace.certified)));
            CHECK(trace.certified <= p.size());
        }
    }
}

TEST_CASE("reduce_to_directed examples") {
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto f = gen_undirected_extremal(1, k);  // path on k+1 vertices
        const auto r = reduce_to_directed(f);
        CHECK(r.components == 1);
        CHECK(r.forest == directed_path(k));
        REQUIRE(r.removed_per_component.size() == 1);
        CHECK(r.removed_per_component[0].removed == 0);
        CHECK(r.removed_per_component[0].new_root == Vertex{1});
    }

    const auto isolated = reduce_to_directed(UndirectedForest::build(3, {}));
    CHECK(isolated.forest.size() == 0);
    CHECK(isolated.components == 3);
    CHECK(isolated.removed_per_component.size() == 3);

    CHECK(error_of([] { reduce_to_directed(UndirectedForest::build(1, {})); }) == Errc::domain_violation);
}

TEST_CASE("branching_preserved") {
    // Spider: center 0 with four legs of length 2; leg 1-2 is cut at leaf 2.
    const std::vector<Edge> legs{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8}};
    const auto spider = UndirectedForest::build(9, legs);
    const auto r = reduce_to_directed(spider);
    CHECK(r.removed_per_component[0].removed == 2);
    CHECK(r.removed_per_component[0].new_root == Vertex{1});
    CHECK(r.forest.out_degree(*r.from_original[0]) == 3);
    CHECK(branching_preserved(spider, r));

    std::vector<Edge> path_edges;
    for (Vertex v = 0; v + 1 < 6; ++v) path_edges.emplace_back(v, v + 1);
    const auto path = UndirectedForest::build(6, path_edges);
    CHECK(branching_preserved(path, reduce_to_directed(path)));

    CHECK(error_of([&] { branching_preserved(path, r); }) == Errc::mismatched_inputs);
}

TEST_CASE("reduction soundness on random forests") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 2 + seed % 30;
        const std::size_t k = 2 + seed % 5;
        const auto f = random_undirected_forest(n, seed, 0.15);
        const auto r = reduce_to_directed(f);
        CHECK(r.forest.size() == n - r.components);
        CHECK(branching_preserved(f, r));
        for (Vertex x = 0; x < r.forest.size(); ++x) {
            if (r.forest.out_degree(x) == 0) CHECK(f.degree(r.to_original[x]) <= 1);
        }
        const auto p = solve(f, k).witness;
        const auto q = restrict_cover(r, p);
        CHECK(p.size() == q.size() + r.components);
        if (r.forest.size() > 0) CHECK(verify_fast(r.forest, k, q).ok());
    }
}
