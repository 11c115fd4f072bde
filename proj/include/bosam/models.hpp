#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "bosam/graph.hpp"

namespace bosam {

enum class ModelFamily { ER, BA, PFP };

std::string_view to_string(ModelFamily family);
ModelFamily parse_model_family(std::string_view text);

// Positive-feedback preference growth. A node of degree k is chosen with weight
// k^(1 + delta * log10 k).
struct PfpParams {
    double p = 0.3;      // new node + one host, host gains two internal links
    double q = 0.1;      // new node + one host, host gains one internal link
    double delta = 0.048;
    std::size_t seed_nodes = 10;        // random tree on this many nodes ...
    std::size_t seed_extra_links = 5;   // ... plus this many random extra links
    std::size_t max_retries = 10000;    // per distinct / non-adjacent pick
};

struct ModelSpec {
    ModelFamily family = ModelFamily::ER;
    std::size_t nodes = 0;
    std::size_t links = 0;
    std::uint64_t seed = 0;
    PfpParams pfp{};
    std::size_t ba_links_per_node = 3;
    std::size_t ba_seed_nodes = 7;  // BA growth starts from the complete graph on this many nodes
};

/// Links implied by a BA spec: C(seed, 2) + m (N - seed), or C(N, 2) when N <= seed.
std::size_t ba_link_total(const ModelSpec& spec);

/// G(n, m): exactly spec.links distinct pairs drawn uniformly. Ids follow first
/// appearance in the draw sequence; nodes that received no link take the last ids.
Graph generate_er(const ModelSpec& spec);

/// Linear preferential attachment from K_{ba_seed_nodes}; spec.links must equal
/// ba_link_total(spec).
Graph generate_ba(const ModelSpec& spec);

/// PFP interactive growth to spec.nodes nodes, then preference-weighted padding (or
/// skipped internal links) so the result has exactly spec.links links.
Graph generate_pfp(const ModelSpec& spec);

/// Dispatches on spec.family.
Graph generate(const ModelSpec& spec);

}  // namespace bosam
