#include <doctest.h>

#include <cmath>
#include <random>

#include "ppgk/error.hpp"
#include "ppgk/pagerank.hpp"
#include "ppgk/synth.hpp"
#include "support.hpp"

using namespace ppgk;
using doctest::Approx;

namespace {

PPGraph public_only(std::size_t n, std::vector<Edge> edges) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return PPGraph(names, PublicGraph(n, std::move(edges)), {}, AttributeStore(n));
}

PPGraph random_graph(std::uint64_t seed, std::size_t n, double degree, double owners = 0.0) {
    synth::PPGraphParams p;
    p.n = n;
    p.avg_degree = degree;
    p.owner_fraction = owners;
    return synth::random_pp_graph(seed, p);
}

// Public store whose vectors come from the dense oracle instead of push.
PublicPPRStore oracle_store(const PPGraph &g, double alpha) {
    std::vector<std::size_t> offsets{0};
    std::vector<ScoreEntry> entries;
    const auto edges = g.public_graph().edges();
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        auto pi = testsupport::oracle_ppr(g.vertex_count(), edges, s, alpha);
        for (VertexId x = 0; x < pi.size(); ++x)
            if (pi[x] > 0.0)
                entries.push_back({x, pi[x]});
        offsets.push_back(entries.size());
    }
    return PublicPPRStore(alpha, 1e-15, offsets, entries);
}

} // namespace

TEST_CASE("power iteration on small graphs") {
    PPGraph edge = public_only(2, {{0, 1}});
    auto pi = ppr_power(view(edge, 0), 0, 0.2);
    CHECK(pi.score(0) == Approx(0.2 / 0.36).epsilon(1e-9));
    CHECK(pi.score(1) == Approx(0.16 / 0.36).epsilon(1e-9));

    PPGraph star = public_only(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto s = ppr_power(view(star, 0), 0);
    for (VertexId leaf = 2; leaf <= 5; ++leaf)
        CHECK(s.score(leaf) == Approx(s.score(1)).epsilon(1e-12));
    CHECK(s.sum() == Approx(1.0).epsilon(1e-9));

    PPGraph lonely = public_only(3, {{1, 2}});
    for (double alpha : {0.05, 0.15, 0.9}) {
        auto iso = ppr_power(view(lonely, 0), 0, alpha);
        REQUIRE(iso.entries.size() == 1);
        CHECK(iso.entries[0] == ScoreEntry{0, 1.0});
    }

    CHECK_THROWS_AS(ppr_power(view(edge, 0), 0, 0.0), Error);
    CHECK_THROWS_AS(ppr_power(view(edge, 0), 0, 1.0), Error);
    CHECK_THROWS_AS(ppr_power(view(edge, 0), 0, 0.15, 0.0), Error);
    CHECK_THROWS_AS(ppr_power(view(edge, 0), 2), Error);
}

TEST_CASE("push with a large eps fires once") {
    PPGraph edge = public_only(2, {{0, 1}});
    auto p = ppr_push(view(edge, 0), 0, 0.3, 1.0);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].vertex == 0);
    CHECK(p.entries[0].score == Approx(0.3));
    CHECK_THROWS_AS(ppr_push(view(edge, 0), 0, 0.3, 0.0), Error);
    CHECK_THROWS_AS(ppr_push(view(edge, 0), 0, 0.3, -1.0), Error);
}

TEST_CASE("isolated source keeps only its teleport mass under push") {
    PPGraph g = public_only(3, {{1, 2}});
    auto p = ppr_push(view(g, 0), 0, 0.15, 1e-6);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].score == Approx(0.15));
}

TEST_CASE("public store") {
    PPGraph g = public_only(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    auto store = precompute_public_ppr(g.public_graph(), 0.15, 1e-5);
    CHECK(store.vertex_count() == 5);
    for (VertexId x = 0; x < 5; ++x) {
        auto direct = ppr_push(view(g, x), x, 0.15, 1e-5);
        auto stored = store.vector(x);
        CHECK(std::vector<ScoreEntry>(stored.begin(), stored.end()) == direct.entries);
    }
    // Vertex 4 is disconnected.
    REQUIRE(store.vector(4).size() == 1);
    CHECK(store.vector(4)[0] == ScoreEntry{4, 0.15});

    auto threaded = precompute_public_ppr(g.public_graph(), 0.15, 1e-5, 3);
    CHECK(threaded == store);
}

TEST_CASE("store sparsity stays within the push bound") {
    PPGraph g = random_graph(3, 1000, 6);
    const double alpha = 0.15, eps = 1e-2;
    auto store = precompute_public_ppr(g.public_graph(), alpha, eps);
    const double per_source = 1.0 / (eps * alpha);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        REQUIRE(double(store.vector(x).size()) <= per_source);
}

TEST_CASE("heuristic examples") {
    // u = 0 is publicly isolated with the single private edge (0, 1).
    PPGraph g({"u", "w", "x"}, PublicGraph(3, {{1, 2}}), {PrivateGraph(0, {{0, 1}})},
              AttributeStore(3));
    auto store = precompute_public_ppr(g.public_graph(), 0.2, 1e-8);
    auto h = ppr_heuristic(store, view(g, 0), 0, 0.2);
    CHECK(h.score(0) == Approx(0.2));
    for (const ScoreEntry &e : store.vector(1))
        CHECK(h.score(e.vertex) == Approx(0.8 * e.score));

    // Without private edges the heuristic averages public neighbor vectors.
    auto hw = ppr_heuristic(store, view(g, 1), 1, 0.2);
    for (const ScoreEntry &e : store.vector(2))
        CHECK(hw.score(e.vertex) == Approx(0.8 * e.score + (e.vertex == 1 ? 0.2 : 0.0)));

    // A vertex with no neighbors in the view gets all mass.
    PPGraph lonely = public_only(2, {});
    auto ls = precompute_public_ppr(lonely.public_graph(), 0.2, 1e-8);
    auto hl = ppr_heuristic(ls, view(lonely, 0), 0, 0.2);
    REQUIRE(hl.entries.size() == 1);
    CHECK(hl.entries[0] == ScoreEntry{0, 1.0});

    try {
        ppr_heuristic(store, view(g, 0), 0, 0.15);
        FAIL("expected parameter mismatch");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::parameter_mismatch);
    }
    CHECK_THROWS_AS(ppr_heuristic(ls, view(g, 0), 0, 0.2), Error);
}

TEST_CASE("results are deterministic") {
    PPGraph g = random_graph(11, 300, 5, 0.2);
    const VertexId u = g.private_graphs().front().owner();
    auto a = ppr_push(view(g, u), u, 0.15, 1e-5);
    auto b = ppr_push(view(g, u), u, 0.15, 1e-5);
    CHECK(a.entries == b.entries);
    auto s1 = precompute_public_ppr(g.public_graph(), 0.15, 1e-4);
    auto s2 = precompute_public_ppr(g.public_graph(), 0.15, 1e-4, 2);
    CHECK(s1 == s2);
    CHECK(ppr_heuristic(s1, view(g, u), u).entries == ppr_heuristic(s2, view(g, u), u).entries);
    CHECK(ppr_power(view(g, u), u).entries == ppr_power(view(g, u), u).entries);
}

TEST_CASE("ranking helpers") {
    PPRVector v{0, 0.15, {{0, 0.5}, {1, 0.2}, {2, 0.2}, {3, 0.1}}};
    CHECK(v.ranking(3) == std::vector<VertexId>{0, 1, 2});
    CHECK(v.top(10).size() == 4);
    CHECK(v.to_dense(5) == std::vector<double>{0.5, 0.2, 0.2, 0.1, 0.0});
    CHECK_THROWS_AS(v.to_dense(2), Error);
    CHECK(v.score(4) == 0.0);
}

TEST_CASE("property: power matches the linear-system oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PPGraph g = random_graph(seed, 60, 3, 0.2);
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 3; ++trial) {
            const VertexId u = VertexId(rng() % g.vertex_count());
            const double alpha = 0.1 + 0.2 * trial;
            auto pi = ppr_power(view(g, u), u, alpha, 1e-13);
            auto oracle =
                testsupport::oracle_ppr(g.vertex_count(), testsupport::view_edges(g, u), u, alpha);
            REQUIRE(pi.sum() == Approx(1.0).epsilon(1e-9));
            for (VertexId x = 0; x < g.vertex_count(); ++x)
                REQUIRE(std::abs(pi.score(x) - oracle[x]) < 1e-10);
        }
    }
}

TEST_CASE("property: push error is within eps times degree and tightens with eps") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        PPGraph g = random_graph(seed, 200, 4, 0.1);
        std::mt19937_64 rng(seed);
        VertexId u;
        do
            u = VertexId(rng() % g.vertex_count());
        while (view(g, u).degree(u) == 0);
        UserView uv = view(g, u);
        auto pi = ppr_power(uv, u, 0.15, 1e-12);
        double prev_max = INFINITY;
        for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
            auto p = ppr_push(uv, u, 0.15, eps);
            REQUIRE(p.sum() <= 1.0 + 1e-12);
            double worst = 0.0;
            for (VertexId x = 0; x < g.vertex_count(); ++x) {
                const double err = std::abs(p.score(x) - pi.score(x));
                REQUIRE(p.score(x) >= 0.0);
                REQUIRE(err <= eps * double(uv.degree(x)) + 1e-12);
                worst = std::max(worst, err);
            }
            REQUIRE(worst <= prev_max);
            prev_max = worst;
        }
    }
}

TEST_CASE("property: heuristic is exact on public views with an exact store") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PPGraph g = random_graph(seed, 50, 3);
        const double alpha = 0.15;
        PublicPPRStore store = oracle_store(g, alpha);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            UserView uv = view(g, u);
            if (uv.degree(u) == 0)
                continue;
            auto h = ppr_heuristic(store, uv, u, alpha);
            auto pi = ppr_power(uv, u, alpha, 1e-13);
            for (VertexId x = 0; x < g.vertex_count(); ++x)
                REQUIRE(std::abs(h.score(x) - pi.score(x)) < 1e-9);
        }
    }
}
