#include "ppgk/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <random>

#include "ppgk/error.hpp"
#include "ppgk/metrics.hpp"
#include "ppgk/shortest_path.hpp"

namespace ppgk {

namespace {

using Clock = std::chrono::steady_clock;

struct Query {
    VertexId owner;
    VertexId target; // shortest path only
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string na() { return "NA"; }

// Mean microseconds per call of f over `reps` calls.
template <class F> double time_us(unsigned reps, F &&f) {
    auto start = Clock::now();
    for (unsigned i = 0; i < reps; ++i)
        f();
    std::chrono::duration<double, std::micro> d = Clock::now() - start;
    return d.count() / double(reps);
}

struct Summary {
    double mean = 0, p50 = 0, p95 = 0;
};

Summary summarize(std::vector<double> xs) {
    Summary s;
    if (xs.empty())
        return s;
    std::sort(xs.begin(), xs.end());
    for (double x : xs)
        s.mean += x;
    s.mean /= double(xs.size());
    auto at = [&](double q) {
        auto i = std::size_t(q * double(xs.size() - 1) + 0.5);
        return xs[std::min(i, xs.size() - 1)];
    };
    s.p50 = at(0.5);
    s.p95 = at(0.95);
    return s;
}

class Row {
public:
    Row &add(std::string v) {
        cells_.push_back(std::move(v));
        return *this;
    }
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < cells_.size(); ++i)
            out += (i ? "," : "") + cells_[i];
        return out + '\n';
    }

private:
    std::vector<std::string> cells_;
};

void add_graph_columns(Row &row, const PPGraph &g, const NetworkStats &s) {
    row.add(g.cutoff() ? g.cutoff()->to_string() : na())
        .add(std::to_string(s.n_vertices))
        .add(std::to_string(s.n_public_edges))
        .add(std::to_string(s.n_private_vertices))
        .add(std::to_string(s.n_private_edges))
        .add(s.delta_g ? fmt(*s.delta_g) : na());
}

void add_timing(Row &row, bool timing, const Summary &exact, const Summary &fast) {
    if (!timing) {
        for (int i = 0; i < 7; ++i)
            row.add(na());
        return;
    }
    row.add(fmt(exact.mean)).add(fmt(exact.p50)).add(fmt(exact.p95));
    row.add(fmt(fast.mean)).add(fmt(fast.p50)).add(fmt(fast.p95));
    row.add(fast.mean > 0 ? fmt(exact.mean / fast.mean) : na());
}

std::vector<VertexId> sample_owners(const PPGraph &g, std::mt19937_64 &rng, std::size_t count) {
    auto owners = g.private_graphs();
    if (owners.empty())
        throw Error(Errc::no_private_owners, "graph has no private owners to sample");
    std::uniform_int_distribution<std::size_t> pick(0, owners.size() - 1);
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(owners[pick(rng)].owner());
    return out;
}

std::string bench_shortest_path(const PPGraph &g, const BenchOptions &opt,
                                const NetworkStats &stats) {
    std::mt19937_64 rng(opt.seed);
    std::vector<Query> queries;
    std::vector<std::uint32_t> truth;
    for (VertexId u : sample_owners(g, rng, opt.queries)) {
        auto dist = bfs_distances(view(g, u), u);
        std::vector<VertexId> reachable;
        for (VertexId v = 0; v < dist.size(); ++v)
            if (v != u && dist[v] != std::numeric_limits<std::uint32_t>::max())
                reachable.push_back(v);
        if (reachable.empty())
            continue; // isolated owner: nothing to ask
        std::uniform_int_distribution<std::size_t> pick(0, reachable.size() - 1);
        VertexId t = reachable[pick(rng)];
        queries.push_back({u, t});
        truth.push_back(dist[t]);
    }

    std::vector<double> exact_us;
    if (opt.timing)
        for (const Query &q : queries) {
            UserView v = view(g, q.owner);
            exact_us.push_back(time_us(opt.repetitions, [&] { (void)exact_distance(v, q.owner, q.target); }));
        }
    const Summary exact = summarize(exact_us);

    std::string out;
    for (double factor : opt.factors) {
        DistanceSketchSet sk = build_sketches(g.public_graph(), factor, opt.seed, opt.threads);
        std::vector<double> fast_us;
        std::size_t answered = 0, none = 0;
        double ratio_sum = 0, ratio_max = 0;
        for (std::size_t i = 0; i < queries.size(); ++i) {
            const Query &q = queries[i];
            UserView v = view(g, q.owner);
            Distance est = private_sketch_distance(sk, v, q.owner, q.target);
            if (opt.timing)
                fast_us.push_back(time_us(opt.repetitions, [&] {
                    (void)private_sketch_distance(sk, v, q.owner, q.target);
                }));
            if (!est) {
                ++none;
                continue;
            }
            ++answered;
            double r = approximation_ratio(double(*est), double(truth[i]));
            ratio_sum += r;
            ratio_max = std::max(ratio_max, r);
        }
        Row row;
        row.add("sp");
        add_graph_columns(row, g, stats);
        row.add(fmt(factor))
            .add(std::to_string(sk.repetitions()))
            .add(std::to_string(opt.repetitions))
            .add(na())
            .add(na())
            .add(na())
            .add(std::to_string(queries.size()))
            .add(std::to_string(answered))
            .add(std::to_string(none))
            .add(fmt(sk.vertex_count() ? double(sk.total_entries()) / double(sk.vertex_count()) : 0.0));
        add_timing(row, opt.timing, exact, summarize(fast_us));
        row.add(answered ? fmt(ratio_sum / double(answered)) : na())
            .add(answered ? fmt(ratio_max) : na())
            .add(na())
            .add(na())
            .add(na())
            .add(na());
        out += row.str();
    }
    return out;
}

std::string bench_pagerank(const PPGraph &g, const BenchOptions &opt, const NetworkStats &stats) {
    std::mt19937_64 rng(opt.seed);
    const auto owners = sample_owners(g, rng, opt.queries);
    PublicPPRStore store = precompute_public_ppr(g.public_graph(), opt.alpha, opt.store_eps, opt.threads);
    const std::size_t n = g.vertex_count();

    std::vector<double> push_us, heur_us;
    double rmse_sum = 0, cos_sum = 0, tau_sum = 0;
    for (VertexId u : owners) {
        UserView v = view(g, u);
        PPRVector truth = ppr_power(v, u, opt.alpha, opt.tol);
        PPRVector fast = ppr_heuristic(store, v, u, opt.alpha);
        if (opt.timing) {
            push_us.push_back(time_us(opt.repetitions, [&] { (void)ppr_push(v, u, opt.alpha, opt.eps); }));
            heur_us.push_back(time_us(opt.repetitions, [&] { (void)ppr_heuristic(store, v, u, opt.alpha); }));
        }
        auto x = truth.to_dense(n), y = fast.to_dense(n);
        rmse_sum += rmse(x, y);
        cos_sum += cosine(x, y);
        tau_sum += kendall_tau_at_k(truth.ranking(opt.top_k), fast.ranking(opt.top_k), opt.top_k);
    }
    const double q = double(owners.size());
    Row row;
    row.add("ppr");
    add_graph_columns(row, g, stats);
    row.add(na())
        .add(na())
        .add(std::to_string(opt.repetitions))
        .add(fmt(opt.alpha))
        .add(fmt(opt.eps))
        .add(fmt(opt.store_eps))
        .add(std::to_string(owners.size()))
        .add(std::to_string(owners.size()))
        .add("0")
        .add(fmt(n ? double(store.total_entries()) / double(n) : 0.0));
    add_timing(row, opt.timing, summarize(push_us), summarize(heur_us));
    row.add(na()).add(na()).add(fmt(rmse_sum / q)).add(fmt(cos_sum / q)).add(fmt(tau_sum / q));
    row.add(std::to_string(opt.top_k));
    return row.str();
}

} // namespace

const std::vector<std::string> &bench_columns() {
    static const std::vector<std::string> cols{
        "task",         "cutoff",       "V",           "E",
        "V_private",    "E_private",    "delta",       "m",
        "sketch_reps",  "timing_reps",  "alpha",       "eps",
        "store_eps",    "queries",      "answered",    "no_estimate",
        "mean_entries", "exact_mean_us", "exact_p50_us", "exact_p95_us",
        "fast_mean_us", "fast_p50_us",  "fast_p95_us", "speedup",
        "mean_ratio",   "max_ratio",    "rmse",        "cosine",
        "tau_at_k",     "k"};
    return cols;
}

std::string run_bench(const PPGraph &g, const BenchOptions &opt) {
    if (opt.queries == 0 || opt.repetitions == 0)
        throw Error(Errc::invalid_argument, "queries and repetitions must be positive");
    if (opt.task == BenchTask::shortest_path && opt.factors.empty())
        throw Error(Errc::invalid_argument, "no multiplicative factors given");
    if (opt.task == BenchTask::pagerank && opt.top_k < 2)
        throw Error(Errc::invalid_argument, "top-k must be at least 2");
    const NetworkStats stats = network_stats(g);
    std::string out;
    for (std::size_t i = 0; i < bench_columns().size(); ++i)
        out += (i ? "," : "") + bench_columns()[i];
    out += '\n';
    if (opt.task == BenchTask::shortest_path)
        out += bench_shortest_path(g, opt, stats);
    else
        out += bench_pagerank(g, opt, stats);
    return out;
}

} // namespace ppgk
