#include "bosam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include <json.hpp>

#include "bosam/error.hpp"
#include "bosam/ordering.hpp"
#include "bosam/rng.hpp"

namespace bosam {

DegreeDistribution degree_ccdf(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw DomainError("empty graph");
    DegreeDistribution dist;
    for (NodeId u = 0; u < n; ++u) ++dist.histogram[graph.degree(u)];
    std::size_t at_least = n;
    for (const auto& [k, count] : dist.histogram) {
        dist.ccdf[k] = static_cast<double>(at_least) / static_cast<double>(n);
        at_least -= count;
    }
    return dist;
}

PowerLawFit fit_powerlaw(std::span<const std::uint32_t> degrees, std::size_t kmin) {
    if (kmin < 1) throw SpecError("kmin must be at least 1");
    const double shift = static_cast<double>(kmin) - 0.5;
    std::size_t tail = 0;
    double log_sum = 0.0;
    std::uint32_t first = 0;
    bool varied = false;
    for (std::uint32_t k : degrees) {
        if (k < kmin) continue;
        if (tail == 0) first = k;
        varied = varied || k != first;
        ++tail;
        log_sum += std::log(static_cast<double>(k) / shift);
    }
    if (tail < 10) throw DomainError("insufficient tail");
    if (!varied) throw DomainError("degenerate tail");
    return {1.0 + static_cast<double>(tail) / log_sum, kmin, tail};
}

PowerLawFit fit_powerlaw(const Graph& graph, std::size_t kmin) {
    const auto degrees = graph.degrees();
    return fit_powerlaw(std::span<const std::uint32_t>(degrees), kmin);
}

std::optional<double> assortativity(const Graph& graph) {
    if (graph.link_count() == 0) throw DomainError("assortativity needs at least one link");
    // Exact integer moments over the 2M oriented endpoint pairs (x, y). Both sides share
    // one marginal, so var(x) = var(y) and r = cov / var.
    using wide = __int128;
    wide sum = 0;      // sum of x      = sum_v k^2
    wide sum_sq = 0;   // sum of x^2    = sum_v k^3
    wide cross = 0;    // sum of x * y  = 2 sum_links k_u k_v
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        const wide k = static_cast<wide>(graph.degree(u));
        sum += k * k;
        sum_sq += k * k * k;
        for (NodeId w : graph.neighbors(u)) cross += k * static_cast<wide>(graph.degree(w));
    }
    const wide samples = static_cast<wide>(2 * graph.link_count());
    const wide numerator = samples * cross - sum * sum;
    const wide denominator = samples * sum_sq - sum * sum;
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::map<std::size_t, double> avg_neighbor_degree(const Graph& graph) {
    if (graph.link_count() == 0) throw DomainError("neighbor degree needs at least one link");
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        const auto adj = graph.neighbors(u);
        if (adj.empty()) continue;
        std::size_t total = 0;
        for (NodeId w : adj) total += graph.degree(w);
        auto& [mean_sum, count] = acc[adj.size()];
        mean_sum += static_cast<double>(total) / static_cast<double>(adj.size());
        ++count;
    }
    std::map<std::size_t, double> knn;
    for (const auto& [k, entry] : acc) knn[k] = entry.first / static_cast<double>(entry.second);
    return knn;
}

std::vector<RichClubPoint> rich_club(const Graph& graph, std::span<const std::size_t> ranks) {
    const std::size_t n = graph.node_count();
    for (std::size_t r : ranks)
        if (r < 2 || r > n)
            throw SpecError("rich-club rank " + std::to_string(r) + " outside [2, " + std::to_string(n) + "]");
    if (ranks.empty()) return {};

    const NodeOrdering order = bosam_order(graph, OrderingMode::Cohesion);
    // links_within[r] = links whose lower-ranked endpoint sits at position r.
    std::vector<std::size_t> links_within(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) {
        const std::size_t pu = order.position_of(u);
        for (NodeId w : graph.neighbors(u)) {
            const std::size_t pw = order.position_of(w);
            if (pu < pw) ++links_within[pw];
        }
    }
    for (std::size_t r = 1; r <= n; ++r) links_within[r] += links_within[r - 1];

    std::vector<RichClubPoint> out;
    out.reserve(ranks.size());
    for (std::size_t r : ranks) {
        const double pairs = static_cast<double>(r) * static_cast<double>(r - 1);
        out.push_back({r, 2.0 * static_cast<double>(links_within[r]) / pairs});
    }
    return out;
}

namespace {

// Sum of hop distances from source to every node it reaches.
std::uint64_t bfs_distance_sum(const Graph& graph, NodeId source, std::vector<std::uint32_t>& dist,
                               std::vector<NodeId>& queue) {
    constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
    std::fill(dist.begin(), dist.end(), unreached);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    std::uint64_t total = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        const std::uint32_t next = dist[u] + 1;
        for (NodeId w : graph.neighbors(u)) {
            if (dist[w] == unreached) {
                dist[w] = next;
                total += next;
                queue.push_back(w);
            }
        }
    }
    return total;
}

std::uint64_t total_distance(const Graph& graph, std::span<const NodeId> sources) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, sources.size() / 64));
    std::vector<std::uint64_t> partial(workers, 0);
    auto work = [&](std::size_t w) {
        std::vector<std::uint32_t> dist(graph.node_count());
        std::vector<NodeId> queue;
        queue.reserve(graph.node_count());
        for (std::size_t i = w; i < sources.size(); i += workers)
            partial[w] += bfs_distance_sum(graph, sources[i], dist, queue);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    // Integer partial sums: the total does not depend on the split.
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

}  // namespace

MeanPath mean_shortest_path(const Graph& graph, const PathOptions& options) {
    const Graph component = largest_component(graph);
    const std::size_t n = component.node_count();
    if (n < 2) throw DomainError("no pairs");

    std::vector<NodeId> sources(n);
    for (std::size_t i = 0; i < n; ++i) sources[i] = static_cast<NodeId>(i);

    MeanPath result;
    if (n <= options.max_exact_n || options.sample_sources >= n) {
        result.exact = true;
    } else {
        if (options.sample_sources == 0) throw SpecError("sample_sources must be positive");
        Rng rng(options.seed);
        for (std::size_t i = 0; i < options.sample_sources; ++i)
            std::swap(sources[i], sources[i + rng.below(n - i)]);
        sources.resize(options.sample_sources);
    }
    result.sources_sampled = sources.size();
    const std::uint64_t total = total_distance(component, sources);
    result.hops = static_cast<double>(total) /
                  (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
    return result;
}

std::vector<std::size_t> default_ranks(std::size_t node_count) {
    if (node_count < 2) return {};
    std::vector<std::size_t> ranks;
    for (double f : {0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0}) {
        const auto r = static_cast<std::size_t>(std::llround(f * static_cast<double>(node_count)));
        ranks.push_back(std::clamp<std::size_t>(r, 2, node_count));
    }
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
}

MetricsReport compute_report(const Graph& graph, const ReportOptions& options) {
    if (graph.node_count() == 0) throw DomainError("empty graph");
    MetricsReport report;
    report.degrees = degree_ccdf(graph);
    try {
        report.powerlaw = fit_powerlaw(graph, options.kmin);
    } catch (const DomainError&) {
    }
    if (graph.link_count() > 0) report.assortativity = assortativity(graph);
    const auto ranks = options.ranks.empty() ? default_ranks(graph.node_count()) : options.ranks;
    report.rich_club = rich_club(graph, ranks);
    try {
        report.mean_path = mean_shortest_path(graph, options.path);
    } catch (const DomainError&) {
    }
    return report;
}

std::string to_json(const MetricsReport& report) {
    using json = nlohmann::ordered_json;
    json doc;
    json hist = json::object();
    for (const auto& [k, count] : report.degrees.histogram) hist[std::to_string(k)] = count;
    json ccdf = json::object();
    for (const auto& [k, frac] : report.degrees.ccdf) ccdf[std::to_string(k)] = frac;
    doc["degree_histogram"] = std::move(hist);
    doc["ccdf"] = std::move(ccdf);
    if (report.powerlaw)
        doc["powerlaw"] = {{"exponent", report.powerlaw->exponent},
                           {"kmin", report.powerlaw->kmin},
                           {"n_tail", report.powerlaw->n_tail}};
    else
        doc["powerlaw"] = nullptr;
    if (report.assortativity)
        doc["assortativity"] = *report.assortativity;
    else
        doc["assortativity"] = nullptr;
    json club = json::array();
    for (const auto& p : report.rich_club) club.push_back({{"rank", p.rank}, {"phi", p.phi}});
    doc["rich_club"] = std::move(club);
    if (report.mean_path)
        doc["mean_path"] = {{"hops", report.mean_path->hops},
                            {"exact", report.mean_path->exact},
                            {"sources_sampled", report.mean_path->sources_sampled}};
    else
        doc["mean_path"] = nullptr;
    return doc.dump(2) + "\n";
}

}  // namespace bosam
