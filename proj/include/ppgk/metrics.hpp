#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppgk/graph.hpp"

namespace ppgk {

struct NetworkStats {
    std::size_t n_vertices = 0;
    std::size_t n_public_edges = 0;
    std::size_t n_private_vertices = 0;
    std::size_t n_private_edges = 0;
    std::optional<double> delta_g; // absent without private vertices

    friend bool operator==(const NetworkStats &, const NetworkStats &) = default;
};

struct RankingAccuracy {
    double rmse = 0;
    double cosine = 0;
    double kendall_tau_at_k = 0;
    std::size_t k = 50;
};

/// θ: Jaccard similarity of two keyword sets, 0 when both are empty.
double overlap_ratio(const KeywordSet &a_pub, const KeywordSet &a_priv);

/// δ(u): mean θ_u(v) over v in V_u. Throws undefined_owner when u has no
/// private graph.
double delta_u(const PPGraph &g, VertexId u);

/// δ(G): mean δ(u) over V_private; nullopt when V_private is empty.
std::optional<double> delta_graph(const PPGraph &g);

NetworkStats network_stats(const PPGraph &g);

/// Header line plus one row, columns in Table order: V E V_private E_private
/// delta. delta is written as NA when absent.
std::string format_stats_tsv(const NetworkStats &s);

// Dense score vectors over the full vertex dimension.
double rmse(std::span<const double> x, std::span<const double> y);
double cosine(std::span<const double> x, std::span<const double> y);

/// Kendall τ over the top-k items of the truth ranking. Rankings list vertex
/// ids best-first. Items missing from the test ranking rank after every
/// ranked item; a pair missing on both sides is a tie and contributes 0.
/// Fewer than two ranked truth items yields 1.
double kendall_tau_at_k(std::span<const VertexId> truth, std::span<const VertexId> test,
                        std::size_t k);

/// approx / exact, with 0/0 = 1. Throws invalid_argument for approx > 0 with
/// exact == 0, or negative inputs.
double approximation_ratio(double approx, double exact);

} // namespace ppgk
