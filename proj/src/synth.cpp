#include "ppgk/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ppgk/error.hpp"

namespace ppgk::synth {

namespace {

constexpr const char *kWords[] = {
    "graph",    "query",      "index",    "xml",      "skyline",   "network",  "privacy",
    "mining",   "search",     "keyword",  "community", "stream",   "learning", "database",
    "parallel", "distributed", "pagerank", "sketch",  "shortest",  "path",     "social",
    "efficient", "scalable",  "approximate", "model", "attributed", "public",  "private",
    "sampling", "ranking",    "clustering", "storage", "transaction", "semantic", "web",
    "matching", "temporal",   "spatial",  "algorithm", "framework",
};
constexpr std::size_t kWordCount = std::size(kWords);

std::size_t uniform(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> random_words(std::mt19937_64 &rng, std::size_t vocabulary,
                                      std::size_t max_count) {
    std::vector<std::string> out;
    std::size_t count = uniform(rng, 0, max_count);
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(kWords[uniform(rng, 0, vocabulary - 1)]);
    return out;
}

std::vector<Edge> uniform_edges(std::mt19937_64 &rng, std::size_t n, double avg_degree) {
    std::set<Edge> edges;
    const auto target = std::size_t(std::llround(double(n) * avg_degree / 2.0));
    const std::size_t max_edges = n * (n - 1) / 2;
    while (edges.size() < std::min(target, max_edges)) {
        auto a = VertexId(uniform(rng, 0, n - 1)), b = VertexId(uniform(rng, 0, n - 1));
        if (a != b)
            edges.emplace(a, b);
    }
    return {edges.begin(), edges.end()};
}

// Watts-Strogatz: ring lattice with k/2 neighbors per side, each lattice edge
// rewired to a random endpoint with probability `rewire`.
std::vector<Edge> small_world_edges(std::mt19937_64 &rng, std::size_t n, double avg_degree,
                                    double rewire) {
    const std::size_t half = std::max<std::size_t>(1, std::size_t(std::llround(avg_degree / 2)));
    std::set<Edge> edges;
    std::bernoulli_distribution coin(rewire);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= half && j < n; ++j) {
            auto a = VertexId(i), b = VertexId((i + j) % n);
            if (coin(rng)) {
                for (int attempt = 0; attempt < 16; ++attempt) {
                    auto c = VertexId(uniform(rng, 0, n - 1));
                    if (c != a && !edges.count(Edge(a, c))) {
                        b = c;
                        break;
                    }
                }
            }
            if (a != b)
                edges.emplace(a, b);
        }
    return {edges.begin(), edges.end()};
}

} // namespace

std::vector<PaperRecord> random_records(std::uint64_t seed, const RecordSetParams &p) {
    if (p.authors == 0 || p.max_authors_per_paper == 0 || p.first_year > p.last_year ||
        p.vocabulary == 0 || p.vocabulary > kWordCount)
        throw Error(Errc::invalid_argument, "bad record set parameters");
    std::mt19937_64 rng(seed);
    std::vector<PaperRecord> out;
    out.reserve(p.papers);
    for (std::size_t i = 0; i < p.papers; ++i) {
        PaperRecord rec;
        std::size_t k = uniform(rng, 1, std::min(p.max_authors_per_paper, p.authors));
        while (rec.authors.size() < k) {
            std::string name = "Author " + std::to_string(uniform(rng, 0, p.authors - 1));
            if (std::find(rec.authors.begin(), rec.authors.end(), name) == rec.authors.end())
                rec.authors.push_back(std::move(name));
        }
        rec.date = Date(int(uniform(rng, std::size_t(p.first_year), std::size_t(p.last_year))),
                        unsigned(uniform(rng, 1, 12)), 1);
        std::string title;
        for (const auto &w : random_words(rng, p.vocabulary, p.max_title_words))
            title += (title.empty() ? "" : " ") + w;
        rec.title_tokens = tokenize_title(title);
        out.push_back(std::move(rec));
    }
    return out;
}

PPGraph random_pp_graph(std::uint64_t seed, const PPGraphParams &p) {
    if (p.n < 2 || p.avg_degree < 0 || p.owner_fraction < 0 || p.owner_fraction > 1)
        throw Error(Errc::invalid_argument, "bad graph parameters");
    std::mt19937_64 rng(seed);
    const std::size_t n = p.n;
    auto edges = p.topology == Topology::uniform ? uniform_edges(rng, n, p.avg_degree)
                                                 : small_world_edges(rng, n, p.avg_degree, p.rewire);
    PublicGraph pub(n, std::move(edges));

    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = VertexId(i);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t owners = std::size_t(std::llround(p.owner_fraction * double(n)));
    if (p.owner_fraction > 0 && owners == 0)
        owners = 1;

    std::vector<PrivateGraph> privates;
    for (std::size_t i = 0; i < owners; ++i) {
        const VertexId u = order[i];
        const std::size_t want = uniform(rng, 1, std::max<std::size_t>(1, p.max_private_edges));
        std::set<Edge> mine;
        for (std::size_t attempt = 0; mine.size() < want && attempt < want * 20; ++attempt) {
            VertexId a = u, b = VertexId(uniform(rng, 0, n - 1));
            if (p.shape == PrivateShape::random && uniform(rng, 0, 1) == 1) {
                // Pair among the owner's neighborhood or a random vertex.
                auto nb = pub.neighbors(u);
                a = nb.empty() ? VertexId(uniform(rng, 0, n - 1))
                               : nb[uniform(rng, 0, nb.size() - 1)];
            }
            if (a != b && !pub.has_edge(a, b))
                mine.emplace(a, b);
        }
        privates.emplace_back(u, std::vector<Edge>(mine.begin(), mine.end()));
    }

    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = "v" + std::to_string(i);

    AttributeStore attrs(n);
    if (p.attributes) {
        constexpr std::size_t vocab = 12;
        for (VertexId v = 0; v < n; ++v) {
            auto words = random_words(rng, vocab, 3);
            std::sort(words.begin(), words.end());
            words.erase(std::unique(words.begin(), words.end()), words.end());
            attrs.set_public(v, std::move(words));
        }
        for (const PrivateGraph &pg : privates)
            for (VertexId v : pg.vertices()) {
                auto words = random_words(rng, vocab, 3);
                std::sort(words.begin(), words.end());
                words.erase(std::unique(words.begin(), words.end()), words.end());
                attrs.set_private(pg.owner(), v, std::move(words));
            }
    }
    return PPGraph(std::move(names), std::move(pub), std::move(privates), std::move(attrs));
}

} // namespace ppgk::synth
