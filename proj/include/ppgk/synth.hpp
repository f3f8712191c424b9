#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ppgk/graph.hpp"
#include "ppgk/ingest.hpp"

namespace ppgk::synth {

struct RecordSetParams {
    std::size_t authors = 30;
    std::size_t papers = 60;
    std::size_t max_authors_per_paper = 5;
    int first_year = 2008;
    int last_year = 2017;
    std::size_t vocabulary = 25;
    std::size_t max_title_words = 6;
};

/// Random publication records drawn from a small author pool and a fixed
/// word list.
std::vector<PaperRecord> random_records(std::uint64_t seed, const RecordSetParams &p = {});

enum class Topology { uniform, small_world };
enum class PrivateShape { star, random };

struct PPGraphParams {
    std::size_t n = 1000;
    double avg_degree = 8.0;
    Topology topology = Topology::uniform;
    double rewire = 0.1; // small world only
    double owner_fraction = 0.1;
    std::size_t max_private_edges = 10;
    PrivateShape shape = PrivateShape::star;
    bool attributes = true;
};

/// Random public graph with private graphs attached to a fraction of the
/// vertices. Star-shaped private graphs only connect the owner to vertices it
/// has no public edge to; random ones pick non-public pairs among the owner's
/// two-hop neighborhood and random vertices. Keywords come from a fixed list.
PPGraph random_pp_graph(std::uint64_t seed, const PPGraphParams &p = {});

} // namespace ppgk::synth
