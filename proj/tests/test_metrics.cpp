#include <doctest.h>

#include <random>

#include "ppgk/error.hpp"
#include "ppgk/metrics.hpp"
#include "ppgk/synth.hpp"
#include "support.hpp"

using namespace ppgk;
using doctest::Approx;

namespace {

Errc error_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::invalid_argument;
}

// Owner 0 with the single private edge (0, 1); attributes chosen per test.
PPGraph two_vertex_owner(KeywordSet pub1, KeywordSet priv1, KeywordSet pub0 = {},
                         KeywordSet priv0 = {}) {
    AttributeStore attrs(3);
    attrs.set_public(1, pub1);
    attrs.set_private(0, 1, priv1);
    attrs.set_public(0, pub0);
    attrs.set_private(0, 0, priv0);
    return PPGraph({"u", "a", "b"}, PublicGraph(3, {}), {PrivateGraph(0, {{0, 1}})}, attrs);
}

} // namespace

TEST_CASE("overlap ratio") {
    CHECK(overlap_ratio({"Skyline"}, {"XML"}) == 0.0);
    CHECK(overlap_ratio({"sql", "xml"}, {"sql", "xml"}) == 1.0);
    CHECK(overlap_ratio({"a", "b"}, {"b", "c"}) == Approx(1.0 / 3.0));
    CHECK(overlap_ratio({}, {}) == 0.0);
    CHECK(overlap_ratio({"a"}, {}) == 0.0);
}

TEST_CASE("delta of one owner") {
    // V_0 = {0, 1}: θ(1) = 1 and θ(0) = 0 average to 0.5.
    CHECK(delta_u(two_vertex_owner({"x"}, {"x"}, {"y"}, {"z"}), 0) == Approx(0.5));
    // All private sets empty while public ones are not: every θ is 0.
    CHECK(delta_u(two_vertex_owner({"x"}, {}, {"y"}), 0) == 0.0);
    CHECK(error_of([] { delta_u(two_vertex_owner({"x"}, {}), 1); }) == Errc::undefined_owner);
    CHECK(error_of([] { delta_u(two_vertex_owner({"x"}, {}), 7); }) == Errc::invalid_vertex);

    // v9: V = {v6, v9, v10}, only v6 has a private set and no public one.
    PPGraph g = testsupport::example_graph();
    CHECK(delta_u(g, testsupport::v(9)) == 0.0);
    // v3: θ(v1) = |{}|/|{Skyline, XML}| = 0, θ(v2) = 0, θ(v3) = 0.
    CHECK(delta_u(g, testsupport::v(3)) == 0.0);
}

TEST_CASE("delta of the graph averages owners and is absent without owners") {
    AttributeStore attrs(4);
    attrs.set_public(2, {"a", "b", "c", "d", "e"});
    attrs.set_private(0, 2, {"a"});    // θ = 1/5
    attrs.set_private(0, 0, {"a"});    // A(0) empty -> θ = 0
    attrs.set_public(3, {"a", "b", "c", "d", "e"});
    attrs.set_private(1, 3, {"a", "b"}); // 2/5
    attrs.set_public(1, {"q"});
    attrs.set_private(1, 1, {"q"}); // 1
    PPGraph g({"u", "w", "x", "y"}, PublicGraph(4, {}),
              {PrivateGraph(0, {{0, 2}}), PrivateGraph(1, {{1, 3}})}, attrs);
    CHECK(delta_u(g, 0) == Approx(0.1));
    CHECK(delta_u(g, 1) == Approx(0.7));
    CHECK(*delta_graph(g) == Approx(0.4));

    PPGraph one = two_vertex_owner({"x"}, {"x"}, {"y"}, {"z"});
    CHECK(*delta_graph(one) == Approx(delta_u(one, 0)));

    PPGraph empty({}, PublicGraph(0, {}), {}, AttributeStore(0));
    CHECK_FALSE(delta_graph(empty).has_value());
    auto s = network_stats(empty);
    CHECK(s == NetworkStats{0, 0, 0, 0, std::nullopt});
    CHECK(format_stats_tsv(s) == "V\tE\tV_private\tE_private\tdelta\n0\t0\t0\t0\tNA\n");
}

TEST_CASE("delta over averages of 0.2 and 0.4 is 0.3") {
    AttributeStore attrs(4);
    attrs.set_public(2, {"a", "b", "c", "d", "e"});
    attrs.set_private(0, 2, {"a"});
    attrs.set_public(0, {"a", "b", "c", "d", "e"});
    attrs.set_private(0, 0, {"a"}); // δ(0) = (0.2 + 0.2) / 2
    attrs.set_public(3, {"a", "b", "c", "d", "e"});
    attrs.set_private(1, 3, {"a", "b"});
    attrs.set_public(1, {"a", "b", "c", "d", "e"});
    attrs.set_private(1, 1, {"a", "b"}); // δ(1) = 0.4
    PPGraph g({"u", "w", "x", "y"}, PublicGraph(4, {}),
              {PrivateGraph(0, {{0, 2}}), PrivateGraph(1, {{1, 3}})}, attrs);
    CHECK(delta_u(g, 0) == Approx(0.2));
    CHECK(delta_u(g, 1) == Approx(0.4));
    CHECK(*delta_graph(g) == Approx(0.3));
}

TEST_CASE("stats row formatting") {
    CHECK(format_stats_tsv(NetworkStats{3, 1, 3, 2, 0.25}) ==
          "V\tE\tV_private\tE_private\tdelta\n3\t1\t3\t2\t0.250000\n");
}

TEST_CASE("rmse and cosine") {
    const std::vector<double> x{0.5, 0.5}, y{0.4, 0.6};
    CHECK(rmse(x, x) == 0.0);
    CHECK(cosine(x, x) == Approx(1.0));
    CHECK(rmse(x, y) == Approx(0.1));
    CHECK(cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
    CHECK(error_of([&] { rmse(x, std::vector<double>{1}); }) == Errc::dimension_mismatch);
    CHECK(error_of([&] { cosine(x, std::vector<double>{1}); }) == Errc::dimension_mismatch);
    CHECK(error_of([] { cosine(std::vector<double>{0, 0}, std::vector<double>{0, 0}); }) ==
          Errc::zero_vector);
    CHECK(cosine(std::vector<double>{0, 0}, std::vector<double>{1, 0}) == 0.0);
}

TEST_CASE("kendall tau at k") {
    const std::vector<VertexId> r{1, 2, 3, 4};
    CHECK(kendall_tau_at_k(r, r, 4) == 1.0);
    CHECK(kendall_tau_at_k(r, std::vector<VertexId>{4, 3, 2, 1}, 4) == -1.0);
    CHECK(kendall_tau_at_k(r, std::vector<VertexId>{2, 1, 3, 4}, 4) == Approx(1.0 - 2.0 / 6.0));
    // Items missing from the test ranking rank last; two missing items tie.
    CHECK(kendall_tau_at_k(r, std::vector<VertexId>{1, 2}, 4) == Approx(5.0 / 6.0));
    CHECK(kendall_tau_at_k(r, std::vector<VertexId>{}, 4) == 0.0);
    CHECK(kendall_tau_at_k(std::vector<VertexId>{7}, std::vector<VertexId>{7}, 50) == 1.0);
    CHECK(error_of([&] { kendall_tau_at_k(r, r, 1); }) == Errc::invalid_argument);
}

TEST_CASE("approximation ratio") {
    CHECK(approximation_ratio(3, 2) == 1.5);
    CHECK(approximation_ratio(4, 4) == 1.0);
    CHECK(approximation_ratio(0, 0) == 1.0);
    CHECK(error_of([] { approximation_ratio(1, 0); }) == Errc::invalid_argument);
}

TEST_CASE("property: metric identities on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f", "g"};
    for (int trial = 0; trial < 500; ++trial) {
        auto random_set = [&] {
            std::vector<std::string> words;
            for (const auto &w : pool)
                if (words.size() < kMaxKeywords && unit(rng) < 0.4)
                    words.push_back(w);
            return make_keyword_set(words);
        };
        KeywordSet a = random_set(), b = random_set();
        double t = overlap_ratio(a, b);
        REQUIRE(t == overlap_ratio(b, a));
        REQUIRE(t >= 0.0);
        REQUIRE(t <= 1.0);
        REQUIRE((t == 1.0) == (a == b && !a.empty()));

        std::vector<double> x(20), y(20);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = unit(rng);
            y[i] = unit(rng);
        }
        REQUIRE(rmse(x, y) == Approx(rmse(y, x)));
        std::vector<double> scaled = x;
        for (double &s : scaled)
            s *= 3.5;
        REQUIRE(cosine(scaled, y) == Approx(cosine(x, y)));

        std::vector<VertexId> ranking(12);
        for (std::size_t i = 0; i < ranking.size(); ++i)
            ranking[i] = VertexId(i);
        std::shuffle(ranking.begin(), ranking.end(), rng);
        const std::size_t k = 2 + rng() % 11;
        REQUIRE(kendall_tau_at_k(ranking, ranking, k) == 1.0);
        std::vector<VertexId> top(ranking.begin(), ranking.begin() + std::ptrdiff_t(k));
        std::vector<VertexId> reversed(top.rbegin(), top.rend());
        REQUIRE(kendall_tau_at_k(top, reversed, k) == -1.0);
    }
}

TEST_CASE("property: delta of random graphs lies in [0, 1] regardless of owner order") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        synth::PPGraphParams p;
        p.n = 200;
        p.owner_fraction = 0.2;
        PPGraph g = synth::random_pp_graph(seed, p);
        auto d = delta_graph(g);
        REQUIRE(d);
        REQUIRE(*d >= 0.0);
        REQUIRE(*d <= 1.0);

        // Rebuild with owners listed in reverse; δ must not change.
        std::vector<PrivateGraph> reversed(g.private_graphs().rbegin(), g.private_graphs().rend());
        std::vector<std::string> names(g.names().begin(), g.names().end());
        PPGraph h(names, g.public_graph(), reversed, g.attributes());
        REQUIRE(*delta_graph(h) == *d);
    }
}
