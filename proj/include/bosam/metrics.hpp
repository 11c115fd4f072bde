#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bosam/graph.hpp"

namespace bosam {

struct DegreeDistribution {
    std::map<std::size_t, std::size_t> histogram;  // degree -> node count
    std::map<std::size_t, double> ccdf;            // degree -> fraction of nodes with degree >= k
};

DegreeDistribution degree_ccdf(const Graph& graph);

struct PowerLawFit {
    double exponent = 0.0;
    std::size_t kmin = 0;
    std::size_t n_tail = 0;
};

/**
 * Discrete power-law MLE with the continuity shift:
 *   alpha = 1 + n / sum_{k_i >= kmin} ln(k_i / (kmin - 0.5)).
 * Throws DomainError("insufficient tail") when fewer than 10 values reach kmin and
 * DomainError("degenerate tail") when every tail value is identical.
 */
PowerLawFit fit_powerlaw(std::span<const std::uint32_t> degrees, std::size_t kmin);
PowerLawFit fit_powerlaw(const Graph& graph, std::size_t kmin);

/// Newman's degree assortativity over both orientations of every link; nullopt when
/// the endpoint degrees have zero variance. Throws DomainError when M = 0.
std::optional<double> assortativity(const Graph& graph);

/// k -> mean over degree-k nodes of their mean neighbor degree (k >= 1 only).
std::map<std::size_t, double> avg_neighbor_degree(const Graph& graph);

struct RichClubPoint {
    std::size_t rank = 0;
    double phi = 0.0;
};

/// Link density among the top-r nodes of the cohesion ordering, for each r in ranks.
std::vector<RichClubPoint> rich_club(const Graph& graph, std::span<const std::size_t> ranks);

struct MeanPath {
    double hops = 0.0;
    bool exact = false;
    std::size_t sources_sampled = 0;
};

struct PathOptions {
    std::size_t max_exact_n = 20000;
    std::size_t sample_sources = 1000;
    std::uint64_t seed = 0;
};

/**
 * Mean hop distance over reachable pairs of the largest component. Exact (BFS from
 * every node) up to max_exact_n nodes; beyond that, averaged over BFS from
 * sample_sources distinct sources drawn uniformly with the seed.
 */
MeanPath mean_shortest_path(const Graph& graph, const PathOptions& options = {});

struct MetricsReport {
    DegreeDistribution degrees;
    std::optional<PowerLawFit> powerlaw;
    std::optional<double> assortativity;
    std::vector<RichClubPoint> rich_club;
    std::optional<MeanPath> mean_path;
};

struct ReportOptions {
    std::size_t kmin = 5;
    std::vector<std::size_t> ranks;  // empty: default_ranks(N)
    PathOptions path{};
};

/// Ranks at 0.1%, 0.5%, 1%, 5%, 10%, 50% and 100% of N, clamped to [2, N], deduplicated.
std::vector<std::size_t> default_ranks(std::size_t node_count);

/// Full report. Throws DomainError("empty graph") for N = 0; statistics that do not
/// apply to the graph (no tail, no links, no pairs) are left empty.
MetricsReport compute_report(const Graph& graph, const ReportOptions& options = {});

/// JSON with keys degree_histogram, ccdf, powerlaw, assortativity, rich_club, mean_path.
std::string to_json(const MetricsReport& report);

}  // namespace bosam
