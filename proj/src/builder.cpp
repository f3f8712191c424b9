#include "ppgk/builder.hpp"

#include <algorithm>
#include <tuple>

#include "ppgk/error.hpp"

namespace ppgk {

namespace {

// (vertex, token id) occurrence list -> per-vertex top keywords.
template <class Emit>
void rank_occurrences(std::vector<std::pair<VertexId, std::uint32_t>> &occ,
                      std::span<const std::string> vocabulary, Emit emit) {
    std::sort(occ.begin(), occ.end());
    std::size_t i = 0;
    while (i < occ.size()) {
        VertexId v = occ[i].first;
        std::vector<std::pair<std::string, std::size_t>> counts;
        while (i < occ.size() && occ[i].first == v) {
            std::size_t j = i;
            while (j < occ.size() && occ[j] == occ[i])
                ++j;
            counts.emplace_back(vocabulary[occ[i].second], j - i);
            i = j;
        }
        emit(v, top_keywords(std::move(counts)));
    }
}

} // namespace

KeywordSet top_keywords(std::vector<std::pair<std::string, std::size_t>> counts) {
    std::sort(counts.begin(), counts.end(), [](const auto &a, const auto &b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::vector<std::string> words;
    for (std::size_t i = 0; i < counts.size() && words.size() < kMaxKeywords; ++i)
        if (words.empty() || std::find(words.begin(), words.end(), counts[i].first) == words.end())
            words.push_back(counts[i].first);
    return make_keyword_set(std::move(words));
}

PPBuilder::PPBuilder(std::vector<PaperRecord> records, CutoffTimestamp cutoff) : cutoff_(cutoff) {
    std::sort(records.begin(), records.end(), [](const PaperRecord &a, const PaperRecord &b) {
        return std::tie(a.date, a.authors, a.title_tokens) <
               std::tie(b.date, b.authors, b.title_tokens);
    });

    std::unordered_map<std::string, std::uint32_t> token_ids;
    std::vector<std::string> vocabulary;
    papers_.reserve(records.size());
    for (PaperRecord &rec : records) {
        Paper p;
        p.is_public = is_public_date(rec.date, cutoff_);
        for (std::string &name : rec.authors) {
            auto [it, fresh] = ids_.try_emplace(name, VertexId(names_.size()));
            if (fresh)
                names_.push_back(name);
            if (std::find(p.authors.begin(), p.authors.end(), it->second) == p.authors.end())
                p.authors.push_back(it->second);
        }
        for (std::string &tok : rec.title_tokens) {
            auto [it, fresh] = token_ids.try_emplace(tok, std::uint32_t(vocabulary.size()));
            if (fresh)
                vocabulary.push_back(tok);
            p.tokens.push_back(it->second);
        }
        std::sort(p.tokens.begin(), p.tokens.end());
        p.tokens.erase(std::unique(p.tokens.begin(), p.tokens.end()), p.tokens.end());
        papers_.push_back(std::move(p));
    }
    vocabulary_ = std::move(vocabulary);
}

VertexId PPBuilder::id_of(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end())
        throw Error(Errc::invalid_argument, "unknown author '" + std::string(name) + "'");
    return it->second;
}

PublicGraph PPBuilder::public_structure() const {
    std::vector<Edge> edges;
    for (const Paper &p : papers_) {
        if (!p.is_public)
            continue;
        for (std::size_t i = 0; i < p.authors.size(); ++i)
            for (std::size_t j = i + 1; j < p.authors.size(); ++j)
                edges.emplace_back(p.authors[i], p.authors[j]);
    }
    return PublicGraph(names_.size(), std::move(edges));
}

std::vector<PrivateGraph> PPBuilder::private_structure(const PublicGraph &pub) const {
    std::vector<std::vector<Edge>> owned(names_.size());
    std::vector<Edge> fresh;
    for (const Paper &p : papers_) {
        if (p.is_public)
            continue;
        fresh.clear();
        for (std::size_t i = 0; i < p.authors.size(); ++i)
            for (std::size_t j = i + 1; j < p.authors.size(); ++j)
                if (!pub.has_edge(p.authors[i], p.authors[j]))
                    fresh.emplace_back(p.authors[i], p.authors[j]);
        if (fresh.empty())
            continue;
        for (VertexId a : p.authors)
            owned[a].insert(owned[a].end(), fresh.begin(), fresh.end());
    }
    std::vector<PrivateGraph> privates;
    for (VertexId u = 0; u < owned.size(); ++u)
        if (!owned[u].empty())
            privates.emplace_back(u, std::move(owned[u]));
    return privates;
}

PPGraph PPBuilder::build_structure() const {
    PublicGraph pub = public_structure();
    auto privates = private_structure(pub);
    return PPGraph(names_, std::move(pub), std::move(privates), AttributeStore(names_.size()),
                   cutoff_);
}

std::vector<KeywordSet> PPBuilder::extract_public_attributes() const {
    std::vector<std::pair<VertexId, std::uint32_t>> occ;
    for (const Paper &p : papers_)
        if (p.is_public)
            for (VertexId a : p.authors)
                for (std::uint32_t t : p.tokens)
                    occ.emplace_back(a, t);
    std::vector<KeywordSet> out(names_.size());
    rank_occurrences(occ, vocabulary_, [&](VertexId v, KeywordSet s) { out[v] = std::move(s); });
    return out;
}

std::map<std::pair<VertexId, VertexId>, KeywordSet>
PPBuilder::extract_private_attributes(const PPGraph &structure) const {
    std::vector<std::vector<std::size_t>> ongoing(names_.size());
    for (std::size_t i = 0; i < papers_.size(); ++i)
        if (!papers_[i].is_public)
            for (VertexId a : papers_[i].authors)
                ongoing[a].push_back(i);

    std::map<std::pair<VertexId, VertexId>, KeywordSet> out;
    std::vector<std::pair<VertexId, std::uint32_t>> occ;
    for (const PrivateGraph &pg : structure.private_graphs()) {
        const VertexId u = pg.owner();
        occ.clear();
        for (std::size_t idx : ongoing[u]) {
            const Paper &p = papers_[idx];
            // Papers listing u and v; v = u covers all of u's ongoing papers.
            for (VertexId v : p.authors)
                if (pg.contains_vertex(v))
                    for (std::uint32_t t : p.tokens)
                        occ.emplace_back(v, t);
        }
        rank_occurrences(occ, vocabulary_, [&](VertexId v, KeywordSet s) {
            if (!s.empty())
                out.emplace(std::make_pair(u, v), std::move(s));
        });
    }
    return out;
}

PPGraph PPBuilder::build() const {
    PublicGraph pub = public_structure();
    auto privates = private_structure(pub);
    AttributeStore attrs(names_.size());
    auto pub_attrs = extract_public_attributes();
    for (VertexId v = 0; v < pub_attrs.size(); ++v)
        if (!pub_attrs[v].empty())
            attrs.set_public(v, std::move(pub_attrs[v]));
    PPGraph structure(names_, std::move(pub), std::move(privates), AttributeStore(names_.size()),
                      cutoff_);
    for (auto &[key, words] : extract_private_attributes(structure))
        attrs.set_private(key.first, key.second, std::move(words));
    // Re-wrap so the attribute invariants are checked against the structure.
    std::vector<PrivateGraph> owned(structure.private_graphs().begin(),
                                    structure.private_graphs().end());
    return PPGraph(names_, structure.public_graph(), std::move(owned), std::move(attrs), cutoff_);
}

} // namespace ppgk
