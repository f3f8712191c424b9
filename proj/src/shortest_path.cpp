#include "ppgk/shortest_path.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "ppgk/error.hpp"

namespace ppgk {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

void check_sketch_vertex(const DistanceSketchSet &sk, VertexId v) {
    if (v >= sk.vertex_count())
        throw Error(Errc::invalid_vertex,
                    "vertex " + std::to_string(v) + " is not covered by the sketch set");
}

// Nearest seed and distance for every vertex reachable from `seeds`.
void nearest_seed_bfs(const PublicGraph &g, std::span<const VertexId> seeds,
                      std::vector<std::uint32_t> &dist, std::vector<VertexId> &nearest,
                      std::vector<VertexId> &queue) {
    std::fill(dist.begin(), dist.end(), kInf);
    queue.clear();
    for (VertexId s : seeds) {
        dist[s] = 0;
        nearest[s] = s;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId x = queue[head];
        for (VertexId y : g.neighbors(x))
            if (dist[y] == kInf) {
                dist[y] = dist[x] + 1;
                nearest[y] = nearest[x];
                queue.push_back(y);
            }
    }
}

} // namespace

std::vector<std::uint32_t> bfs_distances(const UserView &view, VertexId s) {
    view.graph().check_vertex(s);
    std::vector<std::uint32_t> dist(view.vertex_count(), kInf);
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId x = queue[head];
        view.for_each_neighbor(x, [&](VertexId y) {
            if (dist[y] == kInf) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return dist;
}

Distance exact_distance(const UserView &view, VertexId s, VertexId t) {
    view.graph().check_vertex(s);
    view.graph().check_vertex(t);
    if (s == t)
        return 0u;
    std::vector<std::uint32_t> dist(view.vertex_count(), kInf);
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId x = queue[head];
        bool found = false;
        view.for_each_neighbor(x, [&](VertexId y) {
            if (dist[y] == kInf) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
                found = found || y == t;
            }
        });
        if (found)
            return dist[t];
    }
    return std::nullopt;
}

std::uint32_t sketch_repetitions(double factor) {
    if (!(factor > 0.0 && factor <= 1.0))
        throw Error(Errc::invalid_argument, "multiplicative factor must lie in (0, 1]");
    return std::uint32_t(std::ceil(1.0 / factor - 1e-12));
}

DistanceSketchSet::DistanceSketchSet(double factor, std::uint64_t rng_seed,
                                     std::uint32_t repetitions, std::vector<std::size_t> offsets,
                                     std::vector<SketchEntry> entries)
    : factor_(factor), rng_seed_(rng_seed), repetitions_(repetitions),
      offsets_(std::move(offsets)), entries_(std::move(entries)) {
    if (offsets_.empty() || offsets_.back() != entries_.size())
        throw Error(Errc::invalid_argument, "sketch offsets do not match the entry count");
}

DistanceSketchSet build_sketches(const PublicGraph &g, double factor, std::uint64_t rng_seed,
                                 unsigned threads) {
    const std::uint32_t reps = sketch_repetitions(factor);
    const std::size_t n = g.vertex_count();
    const std::size_t levels = n == 0 ? 0 : std::size_t(std::bit_width(n)); // floor(log2 n) + 1
    const std::size_t slots = reps * levels;

    // slot (rep, level) of vertex v lives at v * slots + rep * levels + level
    std::vector<SketchEntry> table(n * slots, SketchEntry{0, kInf});

    auto run_rep = [&](std::uint32_t rep) {
        std::seed_seq seq{std::uint32_t(rng_seed), std::uint32_t(rng_seed >> 32), rep};
        std::mt19937_64 rng(seq);
        std::vector<VertexId> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = VertexId(i);
        std::vector<std::uint32_t> dist(n);
        std::vector<VertexId> nearest(n), queue;
        queue.reserve(n);
        for (std::size_t level = 0; level < levels; ++level) {
            const std::size_t k = std::min<std::size_t>(std::size_t(1) << level, n);
            // Partial Fisher-Yates: perm[0..k) becomes a uniform k-subset.
            for (std::size_t i = 0; i < k; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                std::swap(perm[i], perm[pick(rng)]);
            }
            nearest_seed_bfs(g, std::span<const VertexId>(perm.data(), k), dist, nearest, queue);
            const std::size_t slot = rep * levels + level;
            for (VertexId v : queue)
                table[v * slots + slot] = SketchEntry{nearest[v], dist[v]};
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, reps));
    if (threads == 1) {
        for (std::uint32_t rep = 0; rep < reps; ++rep)
            run_rep(rep);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::uint32_t rep = w; rep < reps; rep += threads)
                    run_rep(rep);
            });
    }

    std::vector<std::size_t> offsets(n + 1, 0);
    std::vector<SketchEntry> entries;
    entries.reserve(table.size());
    for (std::size_t v = 0; v < n; ++v) {
        auto first = table.begin() + std::ptrdiff_t(v * slots);
        auto last = first + std::ptrdiff_t(slots);
        std::sort(first, last, [](const SketchEntry &a, const SketchEntry &b) {
            return a.seed != b.seed ? a.seed < b.seed : a.dist < b.dist;
        });
        for (auto it = first; it != last; ++it) {
            if (it->dist == kInf)
                continue;
            if (entries.size() > offsets[v] && entries.back().seed == it->seed)
                continue; // same seed, larger or equal distance
            entries.push_back(*it);
        }
        offsets[v + 1] = entries.size();
    }
    entries.shrink_to_fit();
    return DistanceSketchSet(factor, rng_seed, reps, std::move(offsets), std::move(entries));
}

Distance sketch_distance(const DistanceSketchSet &sk, VertexId s, VertexId t) {
    check_sketch_vertex(sk, s);
    check_sketch_vertex(sk, t);
    if (s == t)
        return 0u;
    auto a = sk.entries(s);
    auto b = sk.entries(t);
    std::uint32_t best = kInf;
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
        if (i->seed < j->seed)
            ++i;
        else if (j->seed < i->seed)
            ++j;
        else {
            best = std::min(best, i->dist + j->dist);
            ++i;
            ++j;
        }
    }
    if (best == kInf)
        return std::nullopt;
    return best;
}

Distance private_sketch_distance(const DistanceSketchSet &sk, const UserView &view, VertexId s,
                                 VertexId t) {
    if (sk.vertex_count() != view.vertex_count())
        throw Error(Errc::parameter_mismatch, "sketch set was built for a different graph");
    view.graph().check_vertex(s);
    view.graph().check_vertex(t);
    if (s == t)
        return 0u;

    Distance best = sketch_distance(sk, s, t);
    const PrivateGraph *pg = view.private_graph();
    if (!pg || !pg->contains_vertex(s))
        return best;

    // BFS over private edges only; the private graph is small.
    auto local = [&](VertexId x) {
        auto vs = pg->vertices();
        return std::size_t(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
    };
    std::vector<std::uint32_t> dist(pg->vertices().size(), kInf);
    std::vector<VertexId> queue{s};
    dist[local(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId x = queue[head];
        std::uint32_t dx = dist[local(x)];
        if (best && dx >= *best)
            break; // BFS order: no later x can improve
        if (x != s) {
            Distance rest = sketch_distance(sk, x, t);
            if (rest && (!best || dx + *rest < *best))
                best = dx + *rest;
        }
        for (VertexId y : pg->neighbors(x)) {
            std::size_t ly = local(y);
            if (dist[ly] == kInf) {
                dist[ly] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    return best;
}

} // namespace ppgk
