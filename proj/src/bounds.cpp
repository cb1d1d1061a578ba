#include "bkpvc/bounds.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "bkpvc/error.hpp"

namespace bkpvc {

BoundValue lower_bound(ForestKind kind, std::size_t n, std::size_t k) {
    if (k < 2) throw Error(Errc::invalid_k, "k must be at least 2, got " + std::to_string(k));
    const std::size_t min_n = kind == ForestKind::directed ? 1 : 2;
    if (n < min_n) {
        throw Error(Errc::domain_violation, std::string(to_string(kind)) + " bound needs n >= " +
                                                std::to_string(min_n) + ", got " + std::to_string(n));
    }
    const auto nn = static_cast<std::int64_t>(n);
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t numerator = kind == ForestKind::directed ? nn + kk : nn + 3 * kk - 1;
    const std::int64_t denominator = 2 * kk;
    return {kind, n, k, numerator, denominator, (numerator + denominator - 1) / denominator};
}

const char* to_string(PeelCase c) noexcept {
    switch (c) {
        case PeelCase::base: return "base";
        case PeelCase::path_removal: return "path-removal";
        case PeelCase::branching_fan: return "branching-fan";
    }
    return "unknown";
}

const char* to_string(PathStop s) noexcept { return s == PathStop::root ? "root" : "cover-parent"; }

namespace {

// The shrinking forest of the induction. Removals only ever take whole
// subtrees, so the parent of a live vertex is live and depths are unchanged.
class Residual {
   public:
    Residual(const RootedDirectedForest& forest, std::vector<bool> in_cover)
        : forest_(forest), alive_(forest.size(), true), in_cover_(std::move(in_cover)), out_degree_(forest.size()),
          alive_count_(forest.size()) {
        for (Vertex v = 0; v < forest.size(); ++v) out_degree_[v] = forest.out_degree(v);
    }

    std::size_t alive_count() const { return alive_count_; }
    bool alive(Vertex v) const { return alive_[v]; }
    bool covered(Vertex v) const { return in_cover_[v]; }
    bool branching(Vertex v) const { return out_degree_[v] >= 2; }
    std::size_t out_degree(Vertex v) const { return out_degree_[v]; }
    std::optional<Vertex> parent(Vertex v) const { return forest_.parent(v); }

    std::vector<Vertex> live_children(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex c : forest_.children(v)) {
            if (alive_[c]) out.push_back(c);
        }
        return out;
    }

    std::vector<Vertex> leaves() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < forest_.size(); ++v) {
            if (alive_[v] && out_degree_[v] == 0) out.push_back(v);
        }
        return out;
    }

    std::vector<Vertex> live_vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < forest_.size(); ++v) {
            if (alive_[v]) out.push_back(v);
        }
        return out;
    }

    void remove(Vertex v) {
        alive_[v] = false;
        --alive_count_;
        if (auto p = forest_.parent(v); p && alive_[*p]) --out_degree_[*p];
    }

    void add_to_cover(Vertex v) { in_cover_[v] = true; }

    // Residual forest with ids compacted in ascending order, plus the cover
    // restricted to it.
    std::pair<RootedDirectedForest, CoverSet> snapshot() const {
        std::vector<std::optional<Vertex>> index(forest_.size());
        Vertex next = 0;
        for (Vertex v = 0; v < forest_.size(); ++v) {
            if (alive_[v]) index[v] = next++;
        }
        std::vector<std::optional<Vertex>> parent;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < forest_.size(); ++v) {
            if (!alive_[v]) continue;
            const auto p = forest_.parent(v);
            parent.push_back(p ? index[*p] : std::nullopt);
            if (in_cover_[v]) members.push_back(*index[v]);
        }
        return {RootedDirectedForest::build(parent), CoverSet(std::move(members))};
    }

   private:
    const RootedDirectedForest& forest_;
    std::vector<bool> alive_;
    std::vector<bool> in_cover_;
    std::vector<std::size_t> out_degree_;
    std::size_t alive_count_;
};

struct LeafWalk {
    std::vector<Vertex> taken;  // v_1, v_2, ..., v_q
    enum class Stop { root, cover_parent, branching_parent } stop;
    std::optional<Vertex> parent;  // u, when the walk did not stop at a root
};

LeafWalk walk_from_leaf(const Residual& residual, Vertex leaf, std::size_t k) {
    LeafWalk walk;
    walk.taken.push_back(leaf);
    while (true) {
        const Vertex last = walk.taken.back();
        const auto u = residual.parent(last);
        if (!u) {
            walk.stop = LeafWalk::Stop::root;
            break;
        }
        walk.parent = u;
        if (residual.branching(*u)) {
            walk.stop = LeafWalk::Stop::branching_parent;
            break;
        }
        if (residual.covered(*u)) {
            walk.stop = LeafWalk::Stop::cover_parent;
            break;
        }
        walk.taken.push_back(*u);
        // q > k would leave a bare uncovered k-path, impossible for a cover.
        if (walk.taken.size() > k) throw std::logic_error("ancestor walk exceeded k vertices on a valid cover");
    }
    return walk;
}

// Chain from `start` down to its leaf; empty if a vertex on it branches.
std::vector<Vertex> bare_chain(const Residual& residual, Vertex start) {
    std::vector<Vertex> chain{start};
    while (residual.out_degree(chain.back()) > 0) {
        if (residual.branching(chain.back())) return {};
        chain.push_back(residual.live_children(chain.back()).front());
    }
    return chain;
}

std::size_t compose_accounting(const std::vector<PeelStep>& steps) {
    std::size_t certified = 0;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case PeelCase::base: certified = 1; break;
            case PeelCase::path_removal: certified += 1; break;
            case PeelCase::branching_fan: certified += it->fan_width - 1; break;
        }
    }
    return certified;
}

}  // namespace

PeelTrace peel_certificate(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover) {
    if (auto verdict = verify_fast(forest, k, cover); !verdict.ok()) {
        throw Error(Errc::not_a_cover, std::string("cover fails verification (") + to_string(verdict.violation->kind) + ")");
    }

    PeelTrace trace;
    trace.n = forest.size();
    trace.k = k;
    trace.cover_size = cover.size();
    trace.bound = lower_bound(ForestKind::directed, forest.size(), k);

    Residual residual(forest, cover.mask(forest.size()));
    while (residual.alive_count() > k) {
        PeelStep step;
        step.residual_before = residual.alive_count();

        std::optional<LeafWalk> fan_walk;
        bool removed_path = false;
        for (Vertex leaf : residual.leaves()) {
            LeafWalk walk = walk_from_leaf(residual, leaf, k);
            if (walk.stop == LeafWalk::Stop::branching_parent) {
                const auto depth = forest.depth(*walk.parent);
                const auto best = fan_walk ? forest.depth(*fan_walk->parent) : 0;
                if (!fan_walk || depth > best || (depth == best && *walk.parent < *fan_walk->parent)) {
                    fan_walk = std::move(walk);
                }
                continue;
            }
            step.kind = PeelCase::path_removal;
            step.stop = walk.stop == LeafWalk::Stop::root ? PathStop::root : PathStop::cover_parent;
            step.removed.assign(walk.taken.rbegin(), walk.taken.rend());
            for (Vertex v : step.removed) step.p_removed += residual.covered(v) ? 1 : 0;
            if (step.p_removed != 1) throw std::logic_error("path-removal step must remove exactly one cover vertex");
            for (Vertex v : walk.taken) residual.remove(v);
            removed_path = true;
            break;
        }

        if (!removed_path) {
            if (!fan_walk) throw std::logic_error("residual forest has no leaf");
            const Vertex u = *fan_walk->parent;
            step.kind = PeelCase::branching_fan;
            step.kept_branching = u;
            const auto children = residual.live_children(u);
            step.fan_width = children.size();
            for (Vertex c : children) {
                const auto chain = bare_chain(residual, c);
                if (chain.empty()) throw std::logic_error("branching vertex below the deepest fan vertex");
                if (chain.size() > k) throw std::logic_error("fan path longer than k on a valid cover");
                step.removed.insert(step.removed.end(), chain.begin(), chain.end());
            }
            for (Vertex v : step.removed) step.p_removed += residual.covered(v) ? 1 : 0;
            if (step.p_removed != step.fan_width) throw std::logic_error("fan must remove exactly its leaves from the cover");
            for (Vertex v : step.removed) residual.remove(v);
            step.kept_was_covered = residual.covered(u);
            residual.add_to_cover(u);
        }
        step.residual_after = residual.alive_count();
        trace.steps.push_back(std::move(step));
    }

    PeelStep base;
    base.kind = PeelCase::base;
    base.residual_before = residual.alive_count();
    base.removed = residual.live_vertices();
    for (Vertex v : base.removed) base.p_removed += residual.covered(v) ? 1 : 0;
    if (base.p_removed == 0) throw std::logic_error("base forest has no cover vertex");
    for (Vertex v : base.removed) residual.remove(v);
    base.residual_after = 0;
    trace.steps.push_back(std::move(base));

    trace.certified = compose_accounting(trace.steps);
    return trace;
}

CertificateCheck check_certificate(const RootedDirectedForest& forest, std::size_t k, const CoverSet& cover,
                                   const PeelTrace& trace) {
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
    if (trace.n != forest.size() || trace.k != k || trace.cover_size != cover.size()) {
        return fail("trace header does not match the inputs");
    }
    if (k < 2 || forest.size() == 0) return fail("k < 2 or empty forest");
    for (Vertex v : cover.members()) {
        if (v >= forest.size()) return fail("cover member out of range");
    }
    if (trace.steps.empty() || trace.steps.back().kind != PeelCase::base) return fail("trace must end with a base step");

    Residual residual(forest, cover.mask(forest.size()));
    std::size_t added = 0;
    std::size_t paid = 0;
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const PeelStep& step = trace.steps[s];
        const std::string at = "step " + std::to_string(s) + ": ";
        if (step.residual_before != residual.alive_count()) return fail(at + "residual size mismatch");

        // The residual cover must stay valid at every stage of the induction.
        {
            auto [h, q] = residual.snapshot();
            if (!verify_fast(h, k, q).ok()) return fail(at + "residual cover is not a cover of the residual forest");
        }

        for (Vertex v : step.removed) {
            if (v >= forest.size() || !residual.alive(v)) return fail(at + "removes a vertex that is not present");
        }
        std::size_t covered = 0;
        for (Vertex v : step.removed) covered += residual.covered(v) ? 1 : 0;
        if (covered != step.p_removed) return fail(at + "p_removed does not match the residual cover");

        switch (step.kind) {
            case PeelCase::base: {
                if (s + 1 != trace.steps.size()) return fail(at + "base step before the end");
                if (residual.alive_count() < 1 || residual.alive_count() > k) return fail(at + "base forest size not in [1,k]");
                auto sorted = step.removed;
                std::sort(sorted.begin(), sorted.end());
                if (sorted != residual.live_vertices()) return fail(at + "base step must remove every remaining vertex");
                if (step.p_removed < 1) return fail(at + "base forest has no cover vertex");
                for (Vertex v : sorted) residual.remove(v);
                break;
            }
            case PeelCase::path_removal: {
                if (residual.alive_count() <= k) return fail(at + "induction step on a forest with n <= k");
                const auto& path = step.removed;
                if (path.empty() || path.size() > k) return fail(at + "path length not in [1,k]");
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    if (residual.parent(path[i + 1]) != path[i]) return fail(at + "removed vertices are not a directed path");
                }
                for (Vertex v : path) {
                    if (residual.branching(v)) return fail(at + "path contains a branching vertex");
                }
                if (residual.out_degree(path.back()) != 0) return fail(at + "path does not end at a leaf");
                if (step.p_removed != 1) return fail(at + "path must contain exactly one cover vertex");
                const auto top_parent = residual.parent(path.front());
                if (step.stop == PathStop::root) {
                    if (top_parent) return fail(at + "path claimed to start at a root");
                } else if (step.stop == PathStop::cover_parent) {
                    if (!top_parent || !residual.covered(*top_parent) || residual.branching(*top_parent)) {
                        return fail(at + "path parent is not a non-branching cover vertex");
                    }
                } else {
                    return fail(at + "path-removal without a stop reason");
                }
                for (Vertex v : path) residual.remove(v);
                ++paid;
                break;
            }
            case PeelCase::branching_fan: {
                if (residual.alive_count() <= k) return fail(at + "induction step on a forest with n <= k");
                if (!step.kept_branching || *step.kept_branching >= forest.size() || !residual.alive(*step.kept_branching)) {
                    return fail(at + "fan without a live branching vertex");
                }
                const Vertex u = *step.kept_branching;
                const auto children = residual.live_children(u);
                if (children.size() < 2 || step.fan_width != children.size()) return fail(at + "fan width mismatch or < 2");
                std::vector<Vertex> expected;
                for (Vertex c : children) {
                    const auto chain = bare_chain(residual, c);
                    if (chain.empty()) return fail(at + "fan path contains a branching vertex");
                    if (chain.size() > k) return fail(at + "fan path longer than k");
                    expected.insert(expected.end(), chain.begin(), chain.end());
                }
                if (expected != step.removed) return fail(at + "fan must remove exactly the paths below the kept vertex");
                if (step.p_removed != step.fan_width) return fail(at + "fan must remove exactly b cover vertices");
                if (step.kept_was_covered != residual.covered(u)) return fail(at + "kept vertex cover flag mismatch");
                for (Vertex v : step.removed) residual.remove(v);
                if (!residual.covered(u)) ++added;
                residual.add_to_cover(u);
                paid += step.fan_width - 1;
                break;
            }
        }
        if (step.residual_after != residual.alive_count()) return fail(at + "residual size after mismatch");
    }
    if (residual.alive_count() != 0) return fail("replay does not empty the forest");

    std::size_t removed_cover = 0;
    for (const auto& step : trace.steps) removed_cover += step.p_removed;
    if (removed_cover != cover.size() + added) return fail("cover vertices removed do not add up to |P| plus added fan vertices");

    const std::size_t certified = paid + 1;
    if (certified != trace.certified || certified != compose_accounting(trace.steps)) {
        return fail("certified value does not match the composed accounting");
    }
    if (certified > cover.size()) return fail("certified value exceeds |P|");
    const auto bound = lower_bound(ForestKind::directed, forest.size(), k);
    if (!bound.satisfied_by(static_cast<std::int64_t>(certified))) return fail("certified value is below (n+k)/2k");
    return {true, {}};
}

ReductionResult reduce_to_directed(const UndirectedForest& forest) {
    const std::size_t n = forest.size();
    if (n < 2) throw Error(Errc::domain_violation, "reduction needs n >= 2, got " + std::to_string(n));

    ReductionResult result;
    result.components = forest.component_count();
    std::vector<bool> dropped(n, false);
    std::vector<std::optional<Vertex>> parent_of(n);
    std::vector<bool> seen_component(result.components, false);

    // Vertices ascending: the first vertex met in each component is its
    // smallest, and the first degree-1 vertex is its smallest leaf.
    std::vector<std::optional<Vertex>> smallest_leaf(result.components);
    std::vector<Vertex> first_vertex(result.components);
    for (Vertex v = 0; v < n; ++v) {
        const auto c = forest.component_of()[v];
        if (!seen_component[c]) {
            seen_component[c] = true;
            first_vertex[c] = v;
        }
        if (forest.degree(v) == 1 && !smallest_leaf[c]) smallest_leaf[c] = v;
    }

    for (std::size_t c = 0; c < result.components; ++c) {
        if (!smallest_leaf[c]) {
            dropped[first_vertex[c]] = true;  // isolated vertex
            result.removed_per_component.push_back({first_vertex[c], std::nullopt});
            continue;
        }
        const Vertex u = *smallest_leaf[c];
        const Vertex root = forest.neighbors(u).front();
        dropped[u] = true;
        result.removed_per_component.push_back({u, root});

        std::queue<Vertex> frontier;
        frontier.push(root);
        std::vector<bool> reached(n, false);
        reached[u] = reached[root] = true;
        while (!frontier.empty()) {
            const Vertex x = frontier.front();
            frontier.pop();
            for (Vertex y : forest.neighbors(x)) {
                if (reached[y]) continue;
                reached[y] = true;
                parent_of[y] = x;
                frontier.push(y);
            }
        }
    }

    result.from_original.assign(n, std::nullopt);
    for (Vertex v = 0; v < n; ++v) {
        if (dropped[v]) continue;
        result.from_original[v] = static_cast<Vertex>(result.to_original.size());
        result.to_original.push_back(v);
    }
    std::vector<std::optional<Vertex>> parent;
    parent.reserve(result.to_original.size());
    for (Vertex v : result.to_original) {
        parent.push_back(parent_of[v] ? result.from_original[*parent_of[v]] : std::nullopt);
    }
    result.forest = RootedDirectedForest::build(parent);
    return result;
}

bool branching_preserved(const UndirectedForest& forest, const ReductionResult& reduction) {
    const auto& h = reduction.forest;
    if (reduction.from_original.size() != forest.size() || reduction.to_original.size() != h.size()) {
        throw Error(Errc::mismatched_inputs, "reduction sizes do not match the forest");
    }
    for (Vertex x = 0; x < h.size(); ++x) {
        const Vertex original = reduction.to_original[x];
        if (original >= forest.size() || reduction.from_original[original] != x) {
            throw Error(Errc::mismatched_inputs, "reduction id maps are inconsistent");
        }
    }
    for (Vertex x = 0; x < h.size(); ++x) {
        if (forest.degree(reduction.to_original[x]) >= 3 && h.out_degree(x) < 2) return false;
    }
    return true;
}

CoverSet restrict_cover(const ReductionResult& reduction, const CoverSet& cover) {
    std::vector<Vertex> members;
    for (Vertex v : cover.members()) {
        if (v >= reduction.from_original.size()) {
            throw Error(Errc::invalid_vertex, "cover member " + std::to_string(v) + " out of range");
        }
        if (auto id = reduction.from_original[v]) members.push_back(*id);
    }
    return CoverSet(std::move(members));
}

}  // namespace bkpvc
