#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ppgk/date.hpp"

namespace ppgk {

/// Dense vertex index in 0..n-1. PPGraph keeps the id -> author name table.
using VertexId = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Sorted, duplicate-free list of keywords; at most kMaxKeywords entries.
using KeywordSet = std::vector<std::string>;

inline constexpr std::size_t kMaxKeywords = 5;

/// Sorts, deduplicates and validates the cap. Throws invalid_argument when
/// more than kMaxKeywords distinct keywords remain.
KeywordSet make_keyword_set(std::vector<std::string> words);

KeywordSet keyword_union(const KeywordSet &a, const KeywordSet &b);

/// Immutable undirected simple graph in CSR form with sorted neighbor lists.
class PublicGraph {
public:
    PublicGraph() = default;

    /// Builds from an arbitrary edge list. Duplicates are merged; self-loops
    /// and out-of-range endpoints are rejected.
    PublicGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(VertexId a, VertexId b) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const PublicGraph &, const PublicGraph &) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacency_;
};

/// Private graph G_u of one owner. V_u is the set of endpoints of E_u.
class PrivateGraph {
public:
    PrivateGraph() = default;
    PrivateGraph(VertexId owner, std::vector<Edge> edges);

    VertexId owner() const { return owner_; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const VertexId> vertices() const { return vertices_; }
    bool empty() const { return edges_.empty(); }

    bool contains_vertex(VertexId v) const;

    /// Private neighbors of x; empty when x is not in V_u.
    std::span<const VertexId> neighbors(VertexId x) const;

    friend bool operator==(const PrivateGraph &a, const PrivateGraph &b) {
        return a.owner_ == b.owner_ && a.edges_ == b.edges_;
    }

private:
    VertexId owner_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexId> vertices_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacency_;
};

/// Public keyword sets A(v) and owner-scoped private sets A_u(v).
class AttributeStore {
public:
    AttributeStore() = default;
    explicit AttributeStore(std::size_t n) : public_(n) {}

    std::size_t vertex_count() const { return public_.size(); }

    void set_public(VertexId v, KeywordSet words);
    void set_private(VertexId owner, VertexId v, KeywordSet words);

    const KeywordSet &public_attrs(VertexId v) const { return public_.at(v); }
    /// nullptr when u holds no private attributes for v.
    const KeywordSet *private_attrs(VertexId owner, VertexId v) const;

    const std::map<std::pair<VertexId, VertexId>, KeywordSet> &private_entries() const {
        return private_;
    }

    friend bool operator==(const AttributeStore &, const AttributeStore &) = default;

private:
    std::vector<KeywordSet> public_;
    std::map<std::pair<VertexId, VertexId>, KeywordSet> private_;
};

/// Public graph plus every owner's private graph and the attribute store.
/// Immutable once constructed; the constructor checks the model invariants.
class PPGraph {
public:
    PPGraph() = default;

    /// Throws invalid_argument when a private edge duplicates a public edge,
    /// when a private attribute key is outside its owner's V_u, or when sizes
    /// disagree. Empty private graphs are dropped.
    PPGraph(std::vector<std::string> names, PublicGraph pub, std::vector<PrivateGraph> privates,
            AttributeStore attrs, std::optional<Date> cutoff = std::nullopt);

    std::size_t vertex_count() const { return names_.size(); }
    const std::string &name(VertexId v) const { return names_.at(v); }
    std::span<const std::string> names() const { return names_; }

    const PublicGraph &public_graph() const { return public_; }
    const AttributeStore &attributes() const { return attrs_; }
    const std::optional<Date> &cutoff() const { return cutoff_; }

    /// Owners with a nonempty private graph, ascending by owner id.
    std::span<const PrivateGraph> private_graphs() const { return privates_; }
    const PrivateGraph *private_graph(VertexId owner) const;

    /// |E_private|: private edges counted once across all owners.
    std::size_t private_edge_count() const { return private_edge_count_; }

    void check_vertex(VertexId v) const; // throws invalid_vertex

    friend bool operator==(const PPGraph &a, const PPGraph &b) {
        return a.names_ == b.names_ && a.public_ == b.public_ && a.privates_ == b.privates_ &&
               a.attrs_ == b.attrs_ && a.cutoff_ == b.cutoff_;
    }

private:
    std::vector<std::string> names_;
    PublicGraph public_;
    std::vector<PrivateGraph> privates_;
    std::vector<std::int64_t> private_index_; // owner -> index into privates_, or -1
    AttributeStore attrs_;
    std::optional<Date> cutoff_;
    std::size_t private_edge_count_ = 0;
};

/// G ∪ G_viewer as a lazy overlay: nothing is copied, the private adjacency
/// of the viewer is consulted next to the public one.
class UserView {
public:
    UserView(const PPGraph &g, VertexId viewer);

    VertexId viewer() const { return viewer_; }
    const PPGraph &graph() const { return *graph_; }
    std::size_t vertex_count() const { return graph_->vertex_count(); }
    /// nullptr for viewers without private edges.
    const PrivateGraph *private_graph() const { return private_; }

    std::size_t degree(VertexId x) const {
        return graph_->public_graph().degree(x) + (private_ ? private_->neighbors(x).size() : 0);
    }

    /// Calls f(y) for every neighbor y of x in the view. Public neighbors come
    /// first. x must be a valid id.
    template <class F> void for_each_neighbor(VertexId x, F &&f) const {
        for (VertexId y : graph_->public_graph().neighbors(x))
            f(y);
        if (private_)
            for (VertexId y : private_->neighbors(x))
                f(y);
    }

    /// Sorted neighbor list of x; throws invalid_vertex for bad ids.
    std::vector<VertexId> neighbors(VertexId x) const;

private:
    const PPGraph *graph_;
    VertexId viewer_;
    const PrivateGraph *private_;
};

UserView view(const PPGraph &g, VertexId viewer);

/// A(v) ∪ A_viewer(v).
KeywordSet merged_attributes(const PPGraph &g, VertexId viewer, VertexId v);

std::size_t private_edge_count(const PPGraph &g);

} // namespace ppgk
