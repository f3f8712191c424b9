#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "ppgk/graph.hpp"
#include "ppgk/pagerank.hpp"
#include "ppgk/shortest_path.hpp"

namespace ppgk {

inline constexpr int kFileSetVersion = 1;

/// Data files of a graph directory, in checksum order. The directory also
/// holds `manifest.tsv`.
inline constexpr const char *kFileSetFiles[] = {
    "vertices.tsv", "public-edges.tsv", "private-edges.tsv", "public-attrs.tsv",
    "private-attrs.tsv",
};

/// In-memory form of a graph directory: file name -> exact file contents.
using FileSet = std::map<std::string, std::string>;

/// Serializes to TSV. Rows are sorted by their leading columns, LF line
/// endings, no header rows. The manifest records format version, counts,
/// per-file CRC-32 and the graph checksum.
FileSet serialize(const PPGraph &g);

/// Inverse of serialize. Verifies the manifest checksums (checksum_mismatch)
/// and the row syntax (parse); the model invariants are checked by PPGraph.
PPGraph deserialize(const FileSet &files);

/// CRC-32 over the data files in kFileSetFiles order, each prefixed by its
/// name and a NUL byte.
std::uint32_t graph_checksum(const FileSet &files);
std::uint32_t graph_checksum(const PPGraph &g);

/// Writes into a fresh sibling directory and renames it over `dir`, so a
/// failure never leaves a half-written graph behind. Throws io.
void save_graph(const PPGraph &g, const std::filesystem::path &dir);
PPGraph load_graph(const std::filesystem::path &dir);

// Binary artifacts. Both carry the graph checksum they were built against and
// refuse to load against another graph.
void save_sketches(const DistanceSketchSet &sk, std::uint32_t graph_checksum,
                   const std::filesystem::path &file);
/// Throws missing_artifact when the file does not exist, checksum_mismatch for
/// another graph, parse for corrupt files.
DistanceSketchSet load_sketches(const std::filesystem::path &file,
                                std::uint32_t expected_checksum);

void save_ppr_store(const PublicPPRStore &store, std::uint32_t graph_checksum,
                    const std::filesystem::path &file);
PublicPPRStore load_ppr_store(const std::filesystem::path &file, std::uint32_t expected_checksum);

/// `vertex<TAB>score` lines, best first.
void write_ranking_tsv(std::ostream &out, std::span<const ScoreEntry> ranking);

} // namespace ppgk
