#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppgk/graph.hpp"

namespace ppgk {

inline constexpr double kDefaultAlpha = 0.15;
inline constexpr double kDefaultPushEps = 1e-4;
inline constexpr double kDefaultPowerTol = 1e-10;

struct ScoreEntry {
    VertexId vertex;
    double score;

    friend bool operator==(const ScoreEntry &, const ScoreEntry &) = default;
};

/// Sparse nonnegative PPR scores for one source; entries sorted by vertex,
/// zeros omitted.
struct PPRVector {
    VertexId source = 0;
    double alpha = kDefaultAlpha;
    std::vector<ScoreEntry> entries;

    double sum() const;
    double score(VertexId v) const; // 0 when absent
    std::vector<double> to_dense(std::size_t n) const;
    /// Best-first (score desc, vertex asc), at most k entries.
    std::vector<ScoreEntry> top(std::size_t k) const;
    /// Vertex ids of top(k).
    std::vector<VertexId> ranking(std::size_t k) const;
};

/// Power iteration of pi = alpha*e_u + (1-alpha)*pi*P on the view until the
/// L1 change drops below tol. Dangling vertices send their walk mass back to
/// u. Throws invalid_argument unless 0 < alpha < 1 and tol > 0.
PPRVector ppr_power(const UserView &view, VertexId u, double alpha = kDefaultAlpha,
                    double tol = kDefaultPowerTol);

/// Local push with a FIFO queue. A vertex is pushed while r(v) >= eps*deg(v):
/// alpha*r(v) settles in p(v) and (1-alpha)*r(v) is split evenly across its
/// neighbors. The walk mass of a vertex without neighbors is dropped, so an
/// isolated source ends with p = alpha*e_u. On termination
/// |p(v) - pi(v)| <= eps*deg(v) for every v when u has a neighbor.
PPRVector ppr_push(const UserView &view, VertexId u, double alpha = kDefaultAlpha,
                   double eps = kDefaultPushEps);

/// Push vectors of every vertex of the public graph.
class PublicPPRStore {
public:
    PublicPPRStore() = default;
    PublicPPRStore(double alpha, double eps, std::vector<std::size_t> offsets,
                   std::vector<ScoreEntry> entries);

    double alpha() const { return alpha_; }
    double eps() const { return eps_; }
    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t total_entries() const { return entries_.size(); }

    std::span<const ScoreEntry> vector(VertexId v) const {
        return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
    }

    std::span<const std::size_t> raw_offsets() const { return offsets_; }
    std::span<const ScoreEntry> raw_entries() const { return entries_; }

    friend bool operator==(const PublicPPRStore &, const PublicPPRStore &) = default;

private:
    double alpha_ = kDefaultAlpha;
    double eps_ = kDefaultPushEps;
    std::vector<std::size_t> offsets_;
    std::vector<ScoreEntry> entries_;
};

/// ppr_push from every vertex of the public graph, i.e. the view of a viewer
/// with no private edges. Sources are split over `threads` workers; the
/// result does not depend on the split.
PublicPPRStore precompute_public_ppr(const PublicGraph &g, double alpha = kDefaultAlpha,
                                     double eps = kDefaultPushEps, unsigned threads = 1);

/// One Jacobi step of the PPR equation on the view, reusing the stored public
/// vectors: alpha*e_u + (1-alpha)/|N(u)| * sum of store[v] over view
/// neighbors v of u; e_u when u has none. Throws parameter_mismatch when the
/// store's alpha differs or it covers a different vertex count.
PPRVector ppr_heuristic(const PublicPPRStore &store, const UserView &view, VertexId u,
                        double alpha = kDefaultAlpha);

} // namespace ppgk
