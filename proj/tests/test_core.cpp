#include <doctest.h>

#include <algorithm>
#include <random>

#include "ppgk/date.hpp"
#include "ppgk/error.hpp"
#include "ppgk/graph.hpp"
#include "ppgk/shortest_path.hpp"
#include "ppgk/synth.hpp"
#include "support.hpp"

using namespace ppgk;
using testsupport::v;

namespace {

std::vector<VertexId> sorted_neighbors_oracle(const std::vector<Edge> &edges, VertexId x) {
    std::vector<VertexId> out;
    for (const Edge &e : edges) {
        if (e.u == x)
            out.push_back(e.v);
        if (e.v == x)
            out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("dates parse the three textual forms and compare chronologically") {
    CHECK(Date::parse("2015")->to_string() == "2015-01-01");
    CHECK(Date::parse("2015-06")->to_string() == "2015-06-01");
    CHECK(Date::parse("2016-02-29")->to_string() == "2016-02-29");
    CHECK_FALSE(Date::parse("2015-02-29"));
    CHECK_FALSE(Date::parse("2015-13"));
    CHECK_FALSE(Date::parse("15-01-01"));
    CHECK_FALSE(Date::parse("2015-1-1"));
    CHECK_FALSE(Date::parse(""));
    CHECK(Date(2014, 12, 31) < Date(2015));
    CHECK(is_public_date(Date(2014, 12, 31), Date(2015)));
    CHECK_FALSE(is_public_date(Date(2015), Date(2015)));
    CHECK_THROWS_AS(Date(2015, 2, 30), Error);
}

TEST_CASE("keyword sets are sorted, deduplicated and capped") {
    CHECK(make_keyword_set({"xml", "sql", "xml"}) == KeywordSet{"sql", "xml"});
    CHECK_THROWS_AS(make_keyword_set({"a1", "a2", "a3", "a4", "a5", "a6"}), Error);
    CHECK(keyword_union({"sql"}, {"sql", "xml"}) == KeywordSet{"sql", "xml"});
}

TEST_CASE("public graph rejects self loops and bad endpoints, merges duplicates") {
    CHECK_THROWS_AS(PublicGraph(3, {{1, 1}}), Error);
    try {
        PublicGraph(3, {{0, 3}});
        FAIL("expected invalid_vertex");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::invalid_vertex);
    }
    PublicGraph g(4, {{0, 1}, {1, 0}, {2, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(3) == 0);
}

TEST_CASE("PPGraph enforces disjointness of private and public edges") {
    std::vector<std::string> names{"a", "b", "c"};
    PublicGraph pub(3, {{0, 1}});
    SUBCASE("private edge duplicating a public edge") {
        std::vector<PrivateGraph> privates{PrivateGraph(2, {{0, 1}})};
        CHECK_THROWS_AS(PPGraph(names, pub, privates, AttributeStore(3)), Error);
    }
    SUBCASE("private attribute outside V_u") {
        AttributeStore attrs(3);
        attrs.set_private(2, 1, {"xml"}); // V_2 = {0, 2}
        std::vector<PrivateGraph> privates{PrivateGraph(2, {{0, 2}})};
        CHECK_THROWS_AS(PPGraph(names, pub, privates, attrs), Error);
    }
    SUBCASE("duplicate owner") {
        std::vector<PrivateGraph> privates{PrivateGraph(2, {{0, 2}}), PrivateGraph(2, {{1, 2}})};
        CHECK_THROWS_AS(PPGraph(names, pub, privates, AttributeStore(3)), Error);
    }
    SUBCASE("empty private graphs are pruned") {
        std::vector<PrivateGraph> privates{PrivateGraph(2, {})};
        PPGraph g(names, pub, privates, AttributeStore(3));
        CHECK(g.private_graphs().empty());
        CHECK(g.private_graph(2) == nullptr);
    }
}

TEST_CASE("view of v9 contains its private edge (v6, v9)") {
    PPGraph g = testsupport::example_graph();
    CHECK_FALSE(g.public_graph().has_edge(v(6), v(9)));
    auto nb = view(g, v(9)).neighbors(v(6));
    CHECK(std::find(nb.begin(), nb.end(), v(9)) != nb.end());
    auto nb3 = view(g, v(3)).neighbors(v(6));
    CHECK(std::find(nb3.begin(), nb3.end(), v(9)) == nb3.end());
}

TEST_CASE("view of a vertex without private edges equals the public graph") {
    PPGraph g = testsupport::example_graph();
    UserView view5 = view(g, v(5));
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        auto pub = g.public_graph().neighbors(x);
        CHECK(view5.neighbors(x) == std::vector<VertexId>(pub.begin(), pub.end()));
    }
}

TEST_CASE("path a-b with G_a = {(a,c)}: degree of a is 2 in view(a), 1 in view(b)") {
    PublicGraph pub(3, {{0, 1}});
    PPGraph g({"a", "b", "c"}, pub, {PrivateGraph(0, {{0, 2}})}, AttributeStore(3));
    CHECK(view(g, 0).degree(0) == 2);
    CHECK(view(g, 1).degree(0) == 1);
    CHECK_THROWS_AS(view(g, 3), Error);
}

TEST_CASE("merged attributes follow A(v) ∪ A_u(v)") {
    PPGraph g = testsupport::example_graph();
    CHECK(merged_attributes(g, v(3), v(1)) == KeywordSet{"Skyline", "XML"});
    CHECK(merged_attributes(g, v(9), v(1)) == KeywordSet{"Skyline"});
    CHECK(merged_attributes(g, v(3), v(3)) == KeywordSet{"SQL", "XML"});
    CHECK_THROWS_AS(merged_attributes(g, v(3), 11), Error);

    AttributeStore attrs(2);
    attrs.set_public(1, {"sql"});
    attrs.set_private(0, 1, {"sql", "xml"});
    PPGraph h({"u", "w"}, PublicGraph(2, {}), {PrivateGraph(0, {{0, 1}})}, attrs);
    CHECK(merged_attributes(h, 0, 1) == KeywordSet{"sql", "xml"});
}

TEST_CASE("private edges are counted once across owners") {
    PublicGraph pub(3, {});
    PPGraph shared({"a", "b", "c"}, pub, {PrivateGraph(0, {{0, 1}}), PrivateGraph(1, {{0, 1}})},
                   AttributeStore(3));
    CHECK(private_edge_count(shared) == 1);
    PPGraph two({"a", "b", "c"}, pub, {PrivateGraph(0, {{0, 1}}), PrivateGraph(1, {{1, 2}})},
                AttributeStore(3));
    CHECK(private_edge_count(two) == 2);
    PPGraph none({"a", "b", "c"}, pub, {}, AttributeStore(3));
    CHECK(private_edge_count(none) == 0);
    CHECK(private_edge_count(testsupport::example_graph()) == 5);
}

TEST_CASE("property: views overlay exactly the owner's edges on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        synth::PPGraphParams p;
        p.n = 120;
        p.avg_degree = 3;
        p.owner_fraction = 0.3;
        p.shape = seed % 2 ? synth::PrivateShape::star : synth::PrivateShape::random;
        PPGraph g = synth::random_pp_graph(seed, p);
        const auto pub_edges = g.public_graph().edges();
        for (const PrivateGraph &pg : g.private_graphs())
            for (const Edge &e : pg.edges())
                REQUIRE_FALSE(g.public_graph().has_edge(e.u, e.v));

        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 5; ++trial) {
            VertexId viewer = VertexId(rng() % g.vertex_count());
            UserView uv = view(g, viewer);
            const auto edges = testsupport::view_edges(g, viewer);
            for (VertexId x = 0; x < g.vertex_count(); ++x) {
                auto expect = sorted_neighbors_oracle(edges, x);
                REQUIRE(uv.neighbors(x) == expect);
                REQUIRE(uv.degree(x) == expect.size());
                auto sup = std::vector<VertexId>(g.public_graph().neighbors(x).begin(),
                                                 g.public_graph().neighbors(x).end());
                REQUIRE(std::includes(expect.begin(), expect.end(), sup.begin(), sup.end()));
            }
            // Overlay only adds edges: view distances never exceed public ones.
            auto public_dist = testsupport::oracle_bfs(g.vertex_count(), pub_edges, viewer);
            auto view_dist = bfs_distances(uv, viewer);
            for (VertexId x = 0; x < g.vertex_count(); ++x)
                REQUIRE(view_dist[x] <= public_dist[x]);
            for (VertexId x = 0; x < g.vertex_count(); ++x) {
                auto merged = merged_attributes(g, viewer, x);
                const auto &pub = g.attributes().public_attrs(x);
                REQUIRE(std::includes(merged.begin(), merged.end(), pub.begin(), pub.end()));
            }
        }
    }
}
