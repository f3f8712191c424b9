#include "ppgk/pagerank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "ppgk/error.hpp"

namespace ppgk {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(Errc::invalid_argument, "alpha must lie in (0, 1)");
}

void check_positive(double value, const char *what) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw Error(Errc::invalid_argument, std::string(what) + " must be positive");
}

// Public graph seen through the same interface as a UserView.
struct PublicAdapter {
    const PublicGraph &g;

    std::size_t vertex_count() const { return g.vertex_count(); }
    std::size_t degree(VertexId x) const { return g.degree(x); }
    template <class F> void for_each_neighbor(VertexId x, F &&f) const {
        for (VertexId y : g.neighbors(x))
            f(y);
    }
};

// Dense scratch space reused across pushes; only touched slots are reset.
struct PushWorkspace {
    std::vector<double> p, r;
    std::vector<char> queued, touched_flag;
    std::vector<VertexId> touched, queue;

    void prepare(std::size_t n) {
        if (p.size() != n) {
            p.assign(n, 0.0);
            r.assign(n, 0.0);
            queued.assign(n, 0);
            touched_flag.assign(n, 0);
        }
        touched.clear();
        queue.clear();
    }

    void touch(VertexId v) {
        if (!touched_flag[v]) {
            touched_flag[v] = 1;
            touched.push_back(v);
        }
    }

    // Emits p as sorted sparse entries and clears all touched state.
    std::vector<ScoreEntry> harvest() {
        // Dense flag scan beats sorting once a sizable share of the graph is touched.
        const std::size_t n = p.size(), k = touched.size();
        if (k > n / std::max<std::size_t>(8, std::bit_width(k))) {
            touched.clear();
            for (VertexId v = 0; v < n; ++v)
                if (touched_flag[v])
                    touched.push_back(v);
        } else {
            std::sort(touched.begin(), touched.end());
        }
        std::vector<ScoreEntry> out;
        out.reserve(touched.size());
        for (VertexId v : touched) {
            if (p[v] > 0.0)
                out.push_back({v, p[v]});
            p[v] = r[v] = 0.0;
            queued[v] = touched_flag[v] = 0;
        }
        touched.clear();
        return out;
    }
};

template <class Graph>
std::vector<ScoreEntry> push_impl(const Graph &g, VertexId u, double alpha, double eps,
                                  PushWorkspace &ws) {
    ws.prepare(g.vertex_count());
    ws.r[u] = 1.0;
    ws.touch(u);
    ws.queue.push_back(u);
    ws.queued[u] = 1;
    for (std::size_t head = 0; head < ws.queue.size(); ++head) {
        VertexId v = ws.queue[head];
        ws.queued[v] = 0;
        const double rv = ws.r[v];
        const std::size_t d = g.degree(v);
        if (rv <= 0.0 || rv < eps * double(d))
            continue;
        ws.p[v] += alpha * rv;
        ws.r[v] = 0.0;
        if (d == 0)
            continue;
        const double share = (1.0 - alpha) * rv / double(d);
        g.for_each_neighbor(v, [&](VertexId w) {
            ws.touch(w);
            ws.r[w] += share;
            if (!ws.queued[w] && ws.r[w] >= eps * double(g.degree(w))) {
                ws.queued[w] = 1;
                ws.queue.push_back(w);
            }
        });
        // The queue only grows; compact it once the consumed prefix dominates.
        if (head > 4096 && head * 2 > ws.queue.size()) {
            ws.queue.erase(ws.queue.begin(), ws.queue.begin() + std::ptrdiff_t(head + 1));
            head = std::size_t(-1);
        }
    }
    return ws.harvest();
}

PushWorkspace &thread_workspace() {
    thread_local PushWorkspace ws;
    return ws;
}

} // namespace

// PPRVector

double PPRVector::sum() const {
    double s = 0;
    for (const auto &e : entries)
        s += e.score;
    return s;
}

double PPRVector::score(VertexId v) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), v,
                               [](const ScoreEntry &e, VertexId x) { return e.vertex < x; });
    return it != entries.end() && it->vertex == v ? it->score : 0.0;
}

std::vector<double> PPRVector::to_dense(std::size_t n) const {
    std::vector<double> out(n, 0.0);
    for (const auto &e : entries) {
        if (e.vertex >= n)
            throw Error(Errc::dimension_mismatch, "score vector exceeds the requested dimension");
        out[e.vertex] = e.score;
    }
    return out;
}

std::vector<ScoreEntry> PPRVector::top(std::size_t k) const {
    std::vector<ScoreEntry> out = entries;
    auto better = [](const ScoreEntry &a, const ScoreEntry &b) {
        return a.score != b.score ? a.score > b.score : a.vertex < b.vertex;
    };
    k = std::min(k, out.size());
    std::partial_sort(out.begin(), out.begin() + std::ptrdiff_t(k), out.end(), better);
    out.resize(k);
    return out;
}

std::vector<VertexId> PPRVector::ranking(std::size_t k) const {
    std::vector<VertexId> out;
    for (const auto &e : top(k))
        out.push_back(e.vertex);
    return out;
}

// Engines

PPRVector ppr_power(const UserView &view, VertexId u, double alpha, double tol) {
    check_alpha(alpha);
    check_positive(tol, "tol");
    view.graph().check_vertex(u);
    const std::size_t n = view.vertex_count();
    std::vector<double> x(n, 0.0), y(n, 0.0);
    x[u] = 1.0;
    // Contraction factor is 1 - alpha; the cap only guards against NaN input.
    const std::size_t max_iter = 100000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::fill(y.begin(), y.end(), 0.0);
        double dangling = 0.0;
        for (VertexId v = 0; v < n; ++v) {
            if (x[v] == 0.0)
                continue;
            const std::size_t d = view.degree(v);
            if (d == 0) {
                dangling += x[v];
                continue;
            }
            const double share = (1.0 - alpha) * x[v] / double(d);
            view.for_each_neighbor(v, [&](VertexId w) { y[w] += share; });
        }
        y[u] += alpha + (1.0 - alpha) * dangling;
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            diff += std::abs(y[i] - x[i]);
        x.swap(y);
        if (diff < tol)
            break;
    }
    PPRVector out{u, alpha, {}};
    for (VertexId v = 0; v < n; ++v)
        if (x[v] > 0.0)
            out.entries.push_back({v, x[v]});
    return out;
}

PPRVector ppr_push(const UserView &view, VertexId u, double alpha, double eps) {
    check_alpha(alpha);
    check_positive(eps, "eps");
    view.graph().check_vertex(u);
    return PPRVector{u, alpha, push_impl(view, u, alpha, eps, thread_workspace())};
}

PublicPPRStore::PublicPPRStore(double alpha, double eps, std::vector<std::size_t> offsets,
                               std::vector<ScoreEntry> entries)
    : alpha_(alpha), eps_(eps), offsets_(std::move(offsets)), entries_(std::move(entries)) {
    if (offsets_.empty() || offsets_.back() != entries_.size())
        throw Error(Errc::invalid_argument, "store offsets do not match the entry count");
}

PublicPPRStore precompute_public_ppr(const PublicGraph &g, double alpha, double eps,
                                     unsigned threads) {
    check_alpha(alpha);
    check_positive(eps, "eps");
    const std::size_t n = g.vertex_count();
    threads = std::max(1u, threads);
    const std::size_t block = (n + threads - 1) / std::max<std::size_t>(threads, 1);

    std::vector<std::vector<std::vector<ScoreEntry>>> parts(threads);
    auto run = [&](unsigned w) {
        PushWorkspace ws;
        PublicAdapter adapter{g};
        const std::size_t lo = std::min(n, w * block), hi = std::min(n, lo + block);
        for (std::size_t v = lo; v < hi; ++v)
            parts[w].push_back(push_impl(adapter, VertexId(v), alpha, eps, ws));
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(run, w);
    }

    std::vector<std::size_t> offsets{0};
    std::vector<ScoreEntry> entries;
    for (auto &part : parts)
        for (auto &vec : part) {
            entries.insert(entries.end(), vec.begin(), vec.end());
            offsets.push_back(entries.size());
            std::vector<ScoreEntry>().swap(vec);
        }
    return PublicPPRStore(alpha, eps, std::move(offsets), std::move(entries));
}

PPRVector ppr_heuristic(const PublicPPRStore &store, const UserView &view, VertexId u,
                        double alpha) {
    check_alpha(alpha);
    if (store.alpha() != alpha)
        throw Error(Errc::parameter_mismatch, "store was built with a different alpha");
    if (store.vertex_count() != view.vertex_count())
        throw Error(Errc::parameter_mismatch, "store was built for a different graph");
    view.graph().check_vertex(u);

    const std::size_t d = view.degree(u);
    if (d == 0)
        return PPRVector{u, alpha, {{u, 1.0}}};

    PushWorkspace &ws = thread_workspace();
    ws.prepare(view.vertex_count());
    ws.p[u] += alpha;
    ws.touch(u);
    const double weight = (1.0 - alpha) / double(d);
    view.for_each_neighbor(u, [&](VertexId v) {
        for (const ScoreEntry &e : store.vector(v)) {
            ws.touch(e.vertex);
            ws.p[e.vertex] += weight * e.score;
        }
    });
    return PPRVector{u, alpha, ws.harvest()};
}

} // namespace ppgk
