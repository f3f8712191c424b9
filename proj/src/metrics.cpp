#include "ppgk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>

#include "ppgk/error.hpp"

namespace ppgk {

double overlap_ratio(const KeywordSet &a_pub, const KeywordSet &a_priv) {
    std::size_t common = 0;
    auto i = a_pub.begin();
    auto j = a_priv.begin();
    while (i != a_pub.end() && j != a_priv.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    std::size_t all = a_pub.size() + a_priv.size() - common;
    return all == 0 ? 0.0 : double(common) / double(all);
}

double delta_u(const PPGraph &g, VertexId u) {
    g.check_vertex(u);
    const PrivateGraph *pg = g.private_graph(u);
    if (!pg)
        throw Error(Errc::undefined_owner, "vertex " + std::to_string(u) + " has no private graph");
    static const KeywordSet empty;
    double sum = 0;
    for (VertexId v : pg->vertices()) {
        const KeywordSet *priv = g.attributes().private_attrs(u, v);
        sum += overlap_ratio(g.attributes().public_attrs(v), priv ? *priv : empty);
    }
    return sum / double(pg->vertices().size());
}

std::optional<double> delta_graph(const PPGraph &g) {
    auto owners = g.private_graphs();
    if (owners.empty())
        return std::nullopt;
    double sum = 0;
    for (const PrivateGraph &pg : owners)
        sum += delta_u(g, pg.owner());
    return sum / double(owners.size());
}

NetworkStats network_stats(const PPGraph &g) {
    NetworkStats s;
    s.n_vertices = g.vertex_count();
    s.n_public_edges = g.public_graph().edge_count();
    s.n_private_vertices = g.private_graphs().size();
    s.n_private_edges = g.private_edge_count();
    s.delta_g = delta_graph(g);
    return s;
}

std::string format_stats_tsv(const NetworkStats &s) {
    char delta[32] = "NA";
    if (s.delta_g)
        std::snprintf(delta, sizeof delta, "%.6f", *s.delta_g);
    return "V\tE\tV_private\tE_private\tdelta\n" + std::to_string(s.n_vertices) + '\t' +
           std::to_string(s.n_public_edges) + '\t' + std::to_string(s.n_private_vertices) + '\t' +
           std::to_string(s.n_private_edges) + '\t' + delta + '\n';
}

double rmse(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(Errc::dimension_mismatch, "rmse over vectors of different dimension");
    if (x.empty())
        return 0.0;
    double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(sum / double(x.size()));
}

double cosine(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(Errc::dimension_mismatch, "cosine over vectors of different dimension");
    double dot = 0, nx = 0, ny = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    if (nx == 0 && ny == 0)
        throw Error(Errc::zero_vector, "cosine of two zero vectors");
    if (nx == 0 || ny == 0)
        return 0.0;
    return std::clamp(dot / (std::sqrt(nx) * std::sqrt(ny)), -1.0, 1.0);
}

double kendall_tau_at_k(std::span<const VertexId> truth, std::span<const VertexId> test,
                        std::size_t k) {
    if (k < 2)
        throw Error(Errc::invalid_argument, "kendall tau needs k >= 2");
    const std::size_t m = std::min(k, truth.size());
    if (m < 2)
        return 1.0;
    std::unordered_map<VertexId, std::size_t> pos;
    pos.reserve(test.size());
    for (std::size_t i = 0; i < test.size(); ++i)
        pos.try_emplace(test[i], i);
    constexpr std::size_t missing = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> rank(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = pos.find(truth[i]);
        rank[i] = it == pos.end() ? missing : it->second;
    }
    long long score = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (rank[i] == missing && rank[j] == missing)
                continue;
            score += rank[i] < rank[j] ? 1 : -1;
        }
    return double(score) / (double(m) * double(m - 1) / 2.0);
}

double approximation_ratio(double approx, double exact) {
    if (approx < 0 || exact < 0)
        throw Error(Errc::invalid_argument, "negative distance");
    if (exact == 0) {
        if (approx == 0)
            return 1.0;
        throw Error(Errc::invalid_argument, "positive estimate for a zero exact distance");
    }
    return approx / exact;
}

} // namespace ppgk
