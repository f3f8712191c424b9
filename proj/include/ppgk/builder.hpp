#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppgk/graph.hpp"
#include "ppgk/ingest.hpp"

namespace ppgk {

/// Keyword ranking used for both attribute kinds: descending count, ties
/// broken lexicographically, at most kMaxKeywords.
KeywordSet top_keywords(std::vector<std::pair<std::string, std::size_t>> counts);

/// Builds the attributed public-private graph for cutoff Y.
///
/// Records are put in a canonical order (date, author names, tokens) on
/// construction, so every output depends only on the record multiset. Vertex
/// ids follow the first appearance of each author name in that order; every
/// author of every record becomes a vertex.
class PPBuilder {
public:
    PPBuilder(std::vector<PaperRecord> records, CutoffTimestamp cutoff);

    const CutoffTimestamp &cutoff() const { return cutoff_; }
    std::span<const std::string> names() const { return names_; }
    /// Throws invalid_argument for unknown names.
    VertexId id_of(std::string_view name) const;

    /// Public pass: each paper dated before Y links all of its author pairs.
    /// Private pass: each paper dated on or after Y contributes, for every
    /// author pair without a public edge, a private edge to the private graph
    /// of every one of its authors. Attributes are left empty.
    PPGraph build_structure() const;

    /// A(v): top keywords over titles of v's pre-Y papers. Indexed by vertex.
    std::vector<KeywordSet> extract_public_attributes() const;

    /// A_u(v) for every owner u of `structure` and v in V_u: top keywords
    /// over ongoing papers listing both u and v (all of u's ongoing papers
    /// when v = u). Empty sets are omitted.
    std::map<std::pair<VertexId, VertexId>, KeywordSet>
    extract_private_attributes(const PPGraph &structure) const;

    /// Structure plus both attribute kinds.
    PPGraph build() const;

private:
    struct Paper {
        std::vector<VertexId> authors;
        std::vector<std::uint32_t> tokens; // sorted ids into vocabulary_
        bool is_public = false;
    };

    PublicGraph public_structure() const;
    std::vector<PrivateGraph> private_structure(const PublicGraph &pub) const;

    CutoffTimestamp cutoff_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> ids_;
    std::vector<std::string> vocabulary_;
    std::vector<Paper> papers_;
};

inline PPGraph build_pp_graph(std::vector<PaperRecord> records, const CutoffTimestamp &cutoff) {
    return PPBuilder(std::move(records), cutoff).build();
}

} // namespace ppgk
