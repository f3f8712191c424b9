#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppgk/graph.hpp"

namespace ppgk {

/// Hop count; nullopt means unreachable (exact) or no estimate (sketches).
using Distance = std::optional<std::uint32_t>;

/// Exact BFS distance in the view, stopping as soon as t is settled.
Distance exact_distance(const UserView &view, VertexId s, VertexId t);

/// All BFS distances from s in the view; UINT32_MAX marks unreachable.
std::vector<std::uint32_t> bfs_distances(const UserView &view, VertexId s);

struct SketchEntry {
    VertexId seed;
    std::uint32_t dist;

    friend bool operator==(const SketchEntry &, const SketchEntry &) = default;
};

/// Number of repetitions for a multiplicative factor m: ceil(1/m).
std::uint32_t sketch_repetitions(double factor);

/// Offline distance sketches of the public graph.
///
/// For each repetition and each level i = 0..floor(log2 n) a uniform seed set
/// of size min(2^i, n) is drawn; a multi-source BFS gives every vertex its
/// nearest seed and the distance to it. A vertex's entry list holds all of
/// these (seed, distance) pairs, sorted by seed, with one entry per seed.
class DistanceSketchSet {
public:
    DistanceSketchSet() = default;
    DistanceSketchSet(double factor, std::uint64_t rng_seed, std::uint32_t repetitions,
                      std::vector<std::size_t> offsets, std::vector<SketchEntry> entries);

    double factor() const { return factor_; }
    std::uint64_t rng_seed() const { return rng_seed_; }
    std::uint32_t repetitions() const { return repetitions_; }
    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t total_entries() const { return entries_.size(); }

    std::span<const SketchEntry> entries(VertexId v) const {
        return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
    }

    std::span<const std::size_t> raw_offsets() const { return offsets_; }
    std::span<const SketchEntry> raw_entries() const { return entries_; }

    friend bool operator==(const DistanceSketchSet &, const DistanceSketchSet &) = default;

private:
    double factor_ = 1.0;
    std::uint64_t rng_seed_ = 0;
    std::uint32_t repetitions_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<SketchEntry> entries_;
};

/// Throws invalid_argument unless 0 < factor <= 1. Repetitions use
/// independent RNG streams derived from rng_seed, so the result does not
/// depend on `threads`.
DistanceSketchSet build_sketches(const PublicGraph &g, double factor, std::uint64_t rng_seed,
                                 unsigned threads = 1);

/// Minimum of d(s,w) + d(w,t) over seeds w shared by both entry lists; 0 for
/// s == t. Throws invalid_vertex for ids outside the sketch set.
Distance sketch_distance(const DistanceSketchSet &sk, VertexId s, VertexId t);

/// Online merge of the viewer's private graph with the public sketches:
/// BFS from s over the viewer's private edges only, then the minimum of
/// D_private(x) + sketch_distance(x, t) over every privately reached x
/// (including s). Every value returned is the length of a real walk in the
/// view, so it never undercuts the exact distance. s is normally the viewer
/// itself; any source works.
Distance private_sketch_distance(const DistanceSketchSet &sk, const UserView &view, VertexId s,
                                 VertexId t);

} // namespace ppgk
