#include "bkpvc/solver.hpp"

#include <algorithm>
#include <string>

#include "bkpvc/error.hpp"

namespace bkpvc {

std::vector<std::size_t> cover_windows(std::size_t length, std::span<const std::size_t> chosen, std::size_t k) {
    if (k < 1) throw Error(Errc::invalid_k, "window size must be positive");
    std::vector<bool> taken(length, false);
    for (std::size_t p : chosen) {
        if (p >= length) throw Error(Errc::invalid_params, "chosen position " + std::to_string(p) + " outside the path");
        taken[p] = true;
    }
    std::vector<std::size_t> extra;
    std::size_t run = 0;
    for (std::size_t i = 0; i < length; ++i) {
        run = taken[i] ? 0 : run + 1;
        if (run == k) {
            extra.push_back(i);
            run = 0;
        }
    }
    return extra;
}

namespace {

void check_arguments(std::size_t n, std::size_t k) {
    if (k < 2) throw Error(Errc::invalid_k, "k must be at least 2, got " + std::to_string(k));
    if (n == 0) throw Error(Errc::empty_forest, "forest has no vertices");
}

template <typename Forest>
SolveResult solve_impl(const Forest& forest, std::size_t k) {
    check_arguments(forest.size(), k);
    const auto classes = classify(forest);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < forest.size(); ++v) {
        if (classes[v] == VertexKind::leaf) members.push_back(v);
    }
    for (const auto& segment : decompose_bare_segments(forest).segments) {
        for (std::size_t pos : cover_windows(segment.vertices.size(), segment.forced, k)) {
            members.push_back(segment.vertices[pos]);
        }
    }
    CoverSet witness(std::move(members));
    const std::size_t value = witness.size();
    return {value, std::move(witness)};
}

template <typename Forest>
SolveResult bruteforce_impl(const Forest& forest, std::size_t k, std::size_t cutoff) {
    if (k < 2) throw Error(Errc::invalid_k, "k must be at least 2, got " + std::to_string(k));
    if (forest.size() > cutoff) {
        throw Error(Errc::too_large, "n=" + std::to_string(forest.size()) + " exceeds the brute-force cutoff " +
                                         std::to_string(cutoff));
    }
    check_arguments(forest.size(), k);

    const auto classes = classify(forest);
    std::vector<Vertex> forced;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < forest.size(); ++v) {
        (classes[v] == VertexKind::leaf ? forced : candidates).push_back(v);
    }

    const std::size_t m = candidates.size();
    std::vector<Vertex> members;
    for (std::size_t extra = 0; extra <= m; ++extra) {
        // Lexicographic enumeration of `extra`-subsets of the candidates.
        std::vector<std::size_t> pick(extra);
        for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
        while (true) {
            members = forced;
            for (std::size_t i : pick) members.push_back(candidates[i]);
            CoverSet cover(members);
            if (verify_naive(forest, k, cover).ok()) return {cover.size(), std::move(cover)};

            std::size_t i = extra;
            while (i > 0 && pick[i - 1] == m - extra + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    // The full vertex set is always a cover, so the loop returns before here.
    throw std::logic_error("brute force found no cover");
}

}  // namespace

SolveResult solve(const UndirectedForest& forest, std::size_t k) { return solve_impl(forest, k); }
SolveResult solve(const RootedDirectedForest& forest, std::size_t k) { return solve_impl(forest, k); }
SolveResult solve(const AnyForest& forest, std::size_t k) {
    return std::visit([k](const auto& f) { return solve(f, k); }, forest);
}

SolveResult solve_bruteforce(const UndirectedForest& forest, std::size_t k, std::size_t cutoff) {
    return bruteforce_impl(forest, k, cutoff);
}
SolveResult solve_bruteforce(const RootedDirectedForest& forest, std::size_t k, std::size_t cutoff) {
    return bruteforce_impl(forest, k, cutoff);
}
SolveResult solve_bruteforce(const AnyForest& forest, std::size_t k, std::size_t cutoff) {
    return std::visit([&](const auto& f) { return solve_bruteforce(f, k, cutoff); }, forest);
}

}  // namespace bkpvc
