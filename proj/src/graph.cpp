#include "ppgk/graph.hpp"

#include <algorithm>

#include "ppgk/error.hpp"

namespace ppgk {

namespace {

void normalize_edges(std::vector<Edge> &edges) {
    for (const Edge &e : edges)
        if (e.u == e.v)
            throw Error(Errc::invalid_argument, "self-loop on vertex " + std::to_string(e.u));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// CSR over `vertices` (sorted) from normalized edges.
void build_csr(std::span<const Edge> edges, std::span<const VertexId> vertices,
               std::vector<std::size_t> &offsets, std::vector<VertexId> &adjacency) {
    auto local = [&](VertexId v) {
        return std::size_t(std::lower_bound(vertices.begin(), vertices.end(), v) -
                           vertices.begin());
    };
    offsets.assign(vertices.size() + 1, 0);
    for (const Edge &e : edges) {
        ++offsets[local(e.u) + 1];
        ++offsets[local(e.v) + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i)
        offsets[i] += offsets[i - 1];
    adjacency.assign(offsets.back(), 0);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const Edge &e : edges) {
        adjacency[fill[local(e.u)]++] = e.v;
        adjacency[fill[local(e.v)]++] = e.u;
    }
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
        std::sort(adjacency.begin() + std::ptrdiff_t(offsets[i]),
                  adjacency.begin() + std::ptrdiff_t(offsets[i + 1]));
}

} // namespace

KeywordSet make_keyword_set(std::vector<std::string> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() > kMaxKeywords)
        throw Error(Errc::invalid_argument, "keyword set exceeds the cap of 5");
    return words;
}

KeywordSet keyword_union(const KeywordSet &a, const KeywordSet &b) {
    KeywordSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// PublicGraph

PublicGraph::PublicGraph(std::size_t n, std::vector<Edge> edges) {
    normalize_edges(edges);
    for (const Edge &e : edges)
        if (e.v >= n)
            throw Error(Errc::invalid_vertex, "edge endpoint " + std::to_string(e.v) +
                                                  " out of range");
    offsets_.assign(n + 1, 0);
    for (const Edge &e : edges) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i)
        offsets_[i] += offsets_[i - 1];
    adjacency_.assign(offsets_.back(), 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge &e : edges) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    // Rows come out sorted: for row x, edges (u, x) with u < x precede the
    // edges (x, v) in (u, v) order.
}

bool PublicGraph::has_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count())
        return false;
    if (degree(a) > degree(b))
        std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> PublicGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

// PrivateGraph

PrivateGraph::PrivateGraph(VertexId owner, std::vector<Edge> edges)
    : owner_(owner), edges_(std::move(edges)) {
    normalize_edges(edges_);
    vertices_.reserve(edges_.size() * 2);
    for (const Edge &e : edges_) {
        vertices_.push_back(e.u);
        vertices_.push_back(e.v);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    build_csr(edges_, vertices_, offsets_, adjacency_);
}

bool PrivateGraph::contains_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::span<const VertexId> PrivateGraph::neighbors(VertexId x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x)
        return {};
    auto i = std::size_t(it - vertices_.begin());
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
}

// AttributeStore

void AttributeStore::set_public(VertexId v, KeywordSet words) {
    if (v >= public_.size())
        throw Error(Errc::invalid_vertex, "attribute vertex " + std::to_string(v) + " out of range");
    public_[v] = make_keyword_set(std::move(words));
}

void AttributeStore::set_private(VertexId owner, VertexId v, KeywordSet words) {
    if (owner >= public_.size() || v >= public_.size())
        throw Error(Errc::invalid_vertex, "attribute vertex out of range");
    auto set = make_keyword_set(std::move(words));
    if (set.empty())
        private_.erase({owner, v});
    else
        private_[{owner, v}] = std::move(set);
}

const KeywordSet *AttributeStore::private_attrs(VertexId owner, VertexId v) const {
    auto it = private_.find({owner, v});
    return it == private_.end() ? nullptr : &it->second;
}

// PPGraph

PPGraph::PPGraph(std::vector<std::string> names, PublicGraph pub,
                 std::vector<PrivateGraph> privates, AttributeStore attrs,
                 std::optional<Date> cutoff)
    : names_(std::move(names)), public_(std::move(pub)), attrs_(std::move(attrs)),
      cutoff_(cutoff) {
    const std::size_t n = names_.size();
    if (public_.vertex_count() != n && !(n == 0 && public_.vertex_count() == 0))
        throw Error(Errc::invalid_argument, "public graph size differs from the name table");
    if (attrs_.vertex_count() == 0 && n > 0)
        attrs_ = AttributeStore(n);
    if (attrs_.vertex_count() != n)
        throw Error(Errc::invalid_argument, "attribute store size differs from the name table");

    privates.erase(std::remove_if(privates.begin(), privates.end(),
                                  [](const PrivateGraph &p) { return p.empty(); }),
                   privates.end());
    std::sort(privates.begin(), privates.end(),
              [](const PrivateGraph &a, const PrivateGraph &b) { return a.owner() < b.owner(); });
    privates_ = std::move(privates);

    private_index_.assign(n, -1);
    std::vector<Edge> all_private;
    for (std::size_t i = 0; i < privates_.size(); ++i) {
        const PrivateGraph &pg = privates_[i];
        if (pg.owner() >= n)
            throw Error(Errc::invalid_vertex, "private graph owner out of range");
        if (private_index_[pg.owner()] != -1)
            throw Error(Errc::invalid_argument,
                        "two private graphs for owner " + std::to_string(pg.owner()));
        private_index_[pg.owner()] = std::int64_t(i);
        for (const Edge &e : pg.edges()) {
            if (e.v >= n)
                throw Error(Errc::invalid_vertex, "private edge endpoint out of range");
            if (public_.has_edge(e.u, e.v))
                throw Error(Errc::invalid_argument,
                            "private edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") duplicates a public edge");
            all_private.push_back(e);
        }
    }
    std::sort(all_private.begin(), all_private.end());
    private_edge_count_ =
        std::size_t(std::unique(all_private.begin(), all_private.end()) - all_private.begin());

    for (const auto &[key, words] : attrs_.private_entries()) {
        const PrivateGraph *pg = private_graph(key.first);
        if (!pg || !pg->contains_vertex(key.second))
            throw Error(Errc::invalid_argument,
                        "private attributes of (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") outside the owner's private graph");
    }
}

const PrivateGraph *PPGraph::private_graph(VertexId owner) const {
    if (owner >= private_index_.size() || private_index_[owner] < 0)
        return nullptr;
    return &privates_[std::size_t(private_index_[owner])];
}

void PPGraph::check_vertex(VertexId v) const {
    if (v >= vertex_count())
        throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " out of range (n = " +
                                              std::to_string(vertex_count()) + ")");
}

// UserView

UserView::UserView(const PPGraph &g, VertexId viewer) : graph_(&g), viewer_(viewer) {
    g.check_vertex(viewer);
    private_ = g.private_graph(viewer);
}

std::vector<VertexId> UserView::neighbors(VertexId x) const {
    graph_->check_vertex(x);
    std::vector<VertexId> out;
    out.reserve(degree(x));
    for_each_neighbor(x, [&](VertexId y) { out.push_back(y); });
    std::sort(out.begin(), out.end());
    return out;
}

UserView view(const PPGraph &g, VertexId viewer) { return UserView(g, viewer); }

KeywordSet merged_attributes(const PPGraph &g, VertexId viewer, VertexId v) {
    g.check_vertex(viewer);
    g.check_vertex(v);
    const KeywordSet &pub = g.attributes().public_attrs(v);
    const KeywordSet *priv = g.attributes().private_attrs(viewer, v);
    return priv ? keyword_union(pub, *priv) : pub;
}

std::size_t private_edge_count(const PPGraph &g) { return g.private_edge_count(); }

} // namespace ppgk
