#ifndef BKPVC_SOLVER_HPP
#define BKPVC_SOLVER_HPP

#include <span>
#include <vector>

#include "bkpvc/cover.hpp"
#include "bkpvc/forest.hpp"

namespace bkpvc {

struct SolveResult {
    std::size_t value = 0;  // smallest cover size
    CoverSet witness;       // a cover of that size
};

/// Minimum set of extra positions on a path of `length` vertices so that
/// every k consecutive positions contain a chosen one, given positions that
/// are already chosen. Scans left to right and, whenever k consecutive
/// unchosen positions appear, picks the rightmost of them.
std::vector<std::size_t> cover_windows(std::size_t length, std::span<const std::size_t> chosen, std::size_t k);

// All leaves plus, on each bare segment, the greedy window cover. Throws
// InvalidK or EmptyForest.
SolveResult solve(const UndirectedForest& forest, std::size_t k);
SolveResult solve(const RootedDirectedForest& forest, std::size_t k);
SolveResult solve(const AnyForest& forest, std::size_t k);

inline constexpr std::size_t default_bruteforce_cutoff = 18;

// Exhaustive oracle: supersets of the leaf set in increasing size, checked
// with verify_naive; stops at the first size that admits a cover. Throws
// TooLarge above the cutoff.
SolveResult solve_bruteforce(const UndirectedForest& forest, std::size_t k,
                             std::size_t cutoff = default_bruteforce_cutoff);
SolveResult solve_bruteforce(const RootedDirectedForest& forest, std::size_t k,
                             std::size_t cutoff = default_bruteforce_cutoff);
SolveResult solve_bruteforce(const AnyForest& forest, std::size_t k, std::size_t cutoff = default_bruteforce_cutoff);

}  // namespace bkpvc

#endif
