#ifndef BKPVC_BOUNDS_HPP
#define BKPVC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkpvc/cover.hpp"
#include "bkpvc/forest.hpp"

namespace bkpvc {

/// Lower bound on the cover number as the exact rational numerator/denominator
/// with denominator 2k (not reduced).
///   directed:   (n + k) / 2k       for n >= 1
///   undirected: (n + 3k - 1) / 2k  for n >= 2
struct BoundValue {
    ForestKind kind;
    std::size_t n;
    std::size_t k;
    std::int64_t numerator;
    std::int64_t denominator;
    std::int64_t ceiling;

    bool integral() const noexcept { return numerator % denominator == 0; }
    bool equals(std::int64_t value) const noexcept { return value * denominator == numerator; }
    bool satisfied_by(std::int64_t value) const noexcept { return value * denominator >= numerator; }
};

/// Throws InvalidK for k < 2 and DomainViolation below the minimum n.
BoundValue lower_bound(ForestKind kind, std::size_t n, std::size_t k);

enum class PeelCase { base, path_removal, branching_fan };
const char* to_string(PeelCase c) noexcept;

// Why the ancestor walk of a path-removal step stopped.
enum class PathStop { root, cover_parent };
const char* to_string(PathStop s) noexcept;

struct PeelStep {
    PeelCase kind = PeelCase::base;
    // path-removal: v_q ... v_1 in arc order, ending at the leaf.
    // branching-fan: the fan paths one after another, each in arc order.
    // base: every remaining vertex, ascending.
    std::vector<Vertex> removed;
    // Removed vertices that are in the residual cover.
    std::size_t p_removed = 0;
    std::optional<PathStop> stop;
    std::optional<Vertex> kept_branching;
    std::size_t fan_width = 0;
    // branching-fan: whether the kept vertex was already in the residual cover
    // (otherwise it is added to it).
    bool kept_was_covered = false;
    std::size_t residual_before = 0;
    std::size_t residual_after = 0;
};

struct PeelTrace {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t cover_size = 0;
    BoundValue bound{};
    std::vector<PeelStep> steps;
    // Lower bound on |P| obtained by composing the step accounting from the
    // base case outwards: base gives 1, path-removal adds 1, a fan adds b - 1.
    std::size_t certified = 0;
};

/// Runs the inductive peeling argument on a concrete cover and records every
/// removal. Throws NotACover if `cover` fails verification, InvalidK, or
/// EmptyForest.
PeelTrace peel_certificate(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover);

struct CertificateCheck {
    bool ok = false;
    std::string failure;  // empty when ok
};

/// Independent replay of a trace against the forest and cover: every step's
/// structural claims are re-derived from the residual forest, the removals
/// must empty it, and the composed accounting must satisfy
/// bound <= certified <= cover_size.
CertificateCheck check_certificate(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover,
                                   const PeelTrace& trace);

struct RootAssignment {
    Vertex removed;                  // id in the undirected forest
    std::optional<Vertex> new_root;  // absent for isolated vertices
};

struct ReductionResult {
    RootedDirectedForest forest;
    std::vector<RootAssignment> removed_per_component;  // in component order
    std::size_t components = 0;
    std::vector<Vertex> to_original;                  // reduced id -> original id
    std::vector<std::optional<Vertex>> from_original;  // original id -> reduced id
};

/// Per component: drop an isolated vertex, or drop the smallest leaf and root
/// the rest at its neighbor with every edge oriented away from the root.
/// Surviving vertices keep their relative order. DomainViolation if n < 2.
ReductionResult reduce_to_directed(const UndirectedForest& forest);

/// Every surviving vertex of degree >= 3 in `forest` has out-degree >= 2 in
/// the reduced forest. MismatchedInputs if `reduction` does not belong to
/// `forest`.
bool branching_preserved(const UndirectedForest& forest, const ReductionResult& reduction);

/// P restricted to the reduced forest, in reduced ids.
CoverSet restrict_cover(const ReductionResult& reduction, const CoverSet& cover);

}  // namespace bkpvc

#endif
