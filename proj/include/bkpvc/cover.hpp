#ifndef BKPVC_COVER_HPP
#define BKPVC_COVER_HPP

#include <optional>
#include <span>
#include <vector>

#include "bkpvc/forest.hpp"

namespace bkpvc {

/// Sorted, duplicate-free set of vertex ids.
class CoverSet {
   public:
    CoverSet() = default;
    explicit CoverSet(std::vector<Vertex> members);

    static CoverSet all(std::size_t n);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    const std::vector<Vertex>& members() const noexcept { return members_; }

    /// Membership as a dense mask over [0, n); InvalidVertex if a member is >= n.
    std::vector<bool> mask(std::size_t n) const;

    bool operator==(const CoverSet&) const = default;

   private:
    std::vector<Vertex> members_;
};

struct Violation {
    enum class Kind { uncovered_leaf, uncovered_path };

    Kind kind;
    // One leaf id, or k consecutive vertices of a path that has neither a
    // branching vertex nor a cover member.
    std::vector<Vertex> witness;
};

const char* to_string(Violation::Kind kind) noexcept;

struct VerifyResult {
    std::optional<Violation> violation;

    bool ok() const noexcept { return !violation.has_value(); }
};

struct BareSegment {
    std::vector<Vertex> vertices;       // path order (arc order when directed)
    std::vector<std::size_t> forced;    // positions holding leaves of the forest
};

/// Maximal paths of non-branching vertices. Segments are ordered by their
/// first vertex; undirected segments start at their smaller endpoint.
struct BareSegmentDecomposition {
    std::vector<BareSegment> segments;
};

BareSegmentDecomposition decompose_bare_segments(const UndirectedForest& forest);
BareSegmentDecomposition decompose_bare_segments(const RootedDirectedForest& forest);
BareSegmentDecomposition decompose_bare_segments(const AnyForest& forest);

// Reference check that enumerates every (directed) path on k vertices. The
// first violation in (starting vertex, lexicographic path) order is reported;
// uncovered leaves are reported before uncovered paths.
VerifyResult verify_naive(const UndirectedForest& forest, std::size_t k, const CoverSet& cover);
VerifyResult verify_naive(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover);
VerifyResult verify_naive(const AnyForest& forest, std::size_t k, const CoverSet& cover);

// Segment-window check; same verdict as verify_naive, witnesses may differ.
VerifyResult verify_fast(const UndirectedForest& forest, std::size_t k, const CoverSet& cover);
VerifyResult verify_fast(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover);
VerifyResult verify_fast(const AnyForest& forest, std::size_t k, const CoverSet& cover);

}  // namespace bkpvc

#endif
