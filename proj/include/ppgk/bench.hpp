#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ppgk/graph.hpp"
#include "ppgk/pagerank.hpp"

namespace ppgk {

enum class BenchTask { shortest_path, pagerank };

struct BenchOptions {
    BenchTask task = BenchTask::shortest_path;
    std::size_t queries = 50;
    std::uint64_t seed = 1;
    std::vector<double> factors{1.0, 0.5, 0.25}; // shortest path sweep
    double alpha = kDefaultAlpha;
    double eps = kDefaultPushEps;       // baseline push on the view
    double store_eps = kDefaultPushEps; // offline public store
    double tol = kDefaultPowerTol;      // ground truth
    std::size_t top_k = 50;
    unsigned repetitions = 1; // timed calls per query
    unsigned threads = 1;
    bool timing = true; // false writes NA in every runtime column
};

/// Column names of the bench CSV, shared by both tasks.
const std::vector<std::string> &bench_columns();

/// Samples `queries` private owners uniformly (with replacement) and runs the
/// task. Shortest path: one row per factor with the mean approximation ratio
/// of the private-merged sketch estimate against exact BFS on the owner's
/// view and the latency ratio. PageRank: one row with the speed-up of the
/// heuristic over push on the view and RMSE, cosine and τ@k of the heuristic
/// against power iteration. All values except runtimes are a function of
/// (graph, options). Throws no_private_owners for graphs without owners.
std::string run_bench(const PPGraph &g, const BenchOptions &opt);

} // namespace ppgk
