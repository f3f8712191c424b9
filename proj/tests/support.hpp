#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppgk/graph.hpp"

namespace testsupport {

using ppgk::Edge;
using ppgk::VertexId;

// v1..v11 map to ids 0..10.
constexpr VertexId v(int i) { return VertexId(i - 1); }

// The 11-vertex example network: a public backbone, v9's private edges
// (v6,v9), (v9,v10) and v3's private triangle on v1, v2, v3.
inline ppgk::PPGraph example_graph() {
    std::vector<std::string> names;
    for (int i = 1; i <= 11; ++i)
        names.push_back("v" + std::to_string(i));
    ppgk::PublicGraph pub(11, {{v(1), v(4)},
                               {v(3), v(6)},
                               {v(4), v(5)},
                               {v(5), v(6)},
                               {v(6), v(7)},
                               {v(7), v(8)},
                               {v(8), v(10)},
                               {v(10), v(11)}});
    std::vector<ppgk::PrivateGraph> privates;
    privates.emplace_back(v(9), std::vector<Edge>{{v(6), v(9)}, {v(9), v(10)}});
    privates.emplace_back(v(3), std::vector<Edge>{{v(1), v(3)}, {v(2), v(3)}, {v(1), v(2)}});
    ppgk::AttributeStore attrs(11);
    attrs.set_public(v(3), {"SQL"});
    attrs.set_public(v(1), {"Skyline"});
    for (int i : {1, 2, 3})
        attrs.set_private(v(3), v(i), {"XML"});
    attrs.set_private(v(9), v(6), {"Skyline"});
    return ppgk::PPGraph(std::move(names), std::move(pub), std::move(privates), std::move(attrs));
}

// Plain adjacency-list BFS used as an oracle, independent of UserView.
inline std::vector<std::uint32_t> oracle_bfs(std::size_t n, const std::vector<Edge> &edges,
                                             VertexId s) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : adj[x])
            if (dist[y] == std::numeric_limits<std::uint32_t>::max()) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

// Edges of G ∪ G_viewer as an explicit list.
inline std::vector<Edge> view_edges(const ppgk::PPGraph &g, VertexId viewer) {
    std::vector<Edge> out = g.public_graph().edges();
    if (const auto *pg = g.private_graph(viewer))
        out.insert(out.end(), pg->edges().begin(), pg->edges().end());
    return out;
}

// Dense PPR by solving the linear system with Gauss-Jordan elimination;
// dangling vertices restart at u.
inline std::vector<double> oracle_ppr(std::size_t n, const std::vector<Edge> &edges, VertexId u,
                                      double alpha) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    // pi (I - (1-alpha) P') = alpha e_u, transposed into A x = b.
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 1.0;
    for (std::size_t x = 0; x < n; ++x) {
        if (adj[x].empty()) {
            a[u][x] -= 1.0 - alpha;
            continue;
        }
        for (VertexId y : adj[x])
            a[y][x] -= (1.0 - alpha) / double(adj[x].size());
    }
    a[u][n] = alpha;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c]))
                piv = r;
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0.0)
                continue;
            double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("ppgk-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    const std::filesystem::path &path() const { return path_; }
    std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

} // namespace testsupport
