#include "bosam/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bosam/error.hpp"
#include "bosam/rng.hpp"

namespace bosam {

std::string_view to_string(ModelFamily family) {
    switch (family) {
        case ModelFamily::ER: return "er";
        case ModelFamily::BA: return "ba";
        case ModelFamily::PFP: return "pfp";
    }
    return "?";
}

ModelFamily parse_model_family(std::string_view text) {
    if (text == "er") return ModelFamily::ER;
    if (text == "ba") return ModelFamily::BA;
    if (text == "pfp") return ModelFamily::PFP;
    throw SpecError("unknown model '" + std::string(text) + "'");
}

namespace {

std::size_t max_links(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

void require_id_space(std::size_t n) {
    if (n > std::numeric_limits<NodeId>::max()) throw SpecError("node count exceeds 32-bit id space");
}

std::uint64_t pair_key(NodeId a, NodeId b, std::size_t n) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
}

// Removes later repeats from keys, keeping the first occurrence of each value in place.
void drop_repeats(std::vector<std::uint64_t>& keys) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> tagged(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) tagged[i] = {keys[i], static_cast<std::uint32_t>(i)};
    std::sort(tagged.begin(), tagged.end());
    std::vector<bool> keep(keys.size(), true);
    for (std::size_t i = 1; i < tagged.size(); ++i)
        if (tagged[i].first == tagged[i - 1].first) keep[tagged[i].second] = false;
    std::size_t out = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keep[i]) keys[out++] = keys[i];
    keys.resize(out);
}

}  // namespace

Graph generate_er(const ModelSpec& spec) {
    const std::size_t n = spec.nodes;
    const std::size_t m = spec.links;
    require_id_space(n);
    if (m > max_links(n))
        throw SpecError("ER: " + std::to_string(m) + " links exceed the " + std::to_string(max_links(n)) +
                        " pairs available on " + std::to_string(n) + " nodes");

    Rng rng(spec.seed);
    std::vector<std::uint64_t> keys;
    keys.reserve(m);
    const std::size_t all_pairs = max_links(n);
    if (2 * m > all_pairs) {
        // Dense: pick the pairs to leave out, then shuffle the rest into a draw order.
        std::vector<std::uint64_t> excluded;
        while (excluded.size() < all_pairs - m) {
            const std::size_t want = all_pairs - m - excluded.size();
            for (std::size_t i = 0; i < want; ++i) {
                NodeId a, b;
                do {
                    a = static_cast<NodeId>(rng.below(n));
                    b = static_cast<NodeId>(rng.below(n));
                } while (a == b);
                excluded.push_back(pair_key(a, b, n));
            }
            drop_repeats(excluded);
        }
        std::sort(excluded.begin(), excluded.end());
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = a + 1; b < n; ++b) {
                const auto key = pair_key(a, b, n);
                if (!std::binary_search(excluded.begin(), excluded.end(), key)) keys.push_back(key);
            }
        for (std::size_t i = keys.size(); i > 1; --i) std::swap(keys[i - 1], keys[rng.below(i)]);
    } else {
        while (keys.size() < m) {
            const std::size_t want = m - keys.size();
            for (std::size_t i = 0; i < want; ++i) {
                NodeId a, b;
                do {
                    a = static_cast<NodeId>(rng.below(n));
                    b = static_cast<NodeId>(rng.below(n));
                } while (a == b);
                keys.push_back(pair_key(a, b, n));
            }
            drop_repeats(keys);
        }
    }

    // Relabel by first appearance so serialization round-trips the ids.
    constexpr NodeId unseen = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> relabel(n, unseen);
    NodeId next = 0;
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t key : keys) {
        const auto a = static_cast<NodeId>(key / n);
        const auto b = static_cast<NodeId>(key % n);
        if (relabel[a] == unseen) relabel[a] = next++;
        if (relabel[b] == unseen) relabel[b] = next++;
        edges.push_back({relabel[a], relabel[b]});
    }
    return Graph::from_edges(n, edges);
}

std::size_t ba_link_total(const ModelSpec& spec) {
    const std::size_t seed = spec.ba_seed_nodes;
    if (spec.nodes <= seed) return max_links(spec.nodes);
    return max_links(seed) + spec.ba_links_per_node * (spec.nodes - seed);
}

Graph generate_ba(const ModelSpec& spec) {
    const std::size_t n = spec.nodes;
    const std::size_t m = spec.ba_links_per_node;
    const std::size_t seed_nodes = spec.ba_seed_nodes;
    require_id_space(n);
    if (m < 1) throw SpecError("BA: links per node must be at least 1");
    if (seed_nodes < 1 || m > seed_nodes) throw SpecError("BA: links per node exceed seed graph size");
    if (n < seed_nodes && m > (n == 0 ? 0 : n - 1))
        throw SpecError("BA: " + std::to_string(n) + " nodes cannot support " + std::to_string(m) +
                        " links per node");
    if (spec.links != ba_link_total(spec))
        throw SpecError("BA: " + std::to_string(n) + " nodes with m = " + std::to_string(m) + " give " +
                        std::to_string(ba_link_total(spec)) + " links, not " + std::to_string(spec.links));

    std::vector<Edge> edges;
    edges.reserve(spec.links);
    // Every link contributes both endpoints, so a uniform pick here is a degree-proportional pick.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * spec.links);

    const std::size_t clique = std::min(n, seed_nodes);
    for (NodeId a = 0; a < clique; ++a)
        for (NodeId b = a + 1; b < clique; ++b) {
            edges.push_back({a, b});
            endpoints.push_back(a);
            endpoints.push_back(b);
        }

    Rng rng(spec.seed);
    std::vector<NodeId> targets;
    for (std::size_t v = clique; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.push_back({t, static_cast<NodeId>(v)});
            endpoints.push_back(t);
            endpoints.push_back(static_cast<NodeId>(v));
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

// Fenwick tree over node weights, supporting weighted draws with live updates.
class WeightTree {
public:
    explicit WeightTree(std::size_t capacity) : tree_(capacity + 1, 0.0), weight_(capacity, 0.0) {
        top_ = 1;
        while (top_ * 2 <= capacity) top_ *= 2;
    }

    void set(std::size_t i, double w) {
        const double delta = w - weight_[i];
        weight_[i] = w;
        total_ += delta;
        for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += delta;
    }

    double total() const { return total_; }

    // Smallest index whose inclusive prefix weight exceeds target (clamped to live nodes).
    std::size_t find(double target, std::size_t live) const {
        std::size_t pos = 0;
        for (std::size_t step = top_; step > 0; step /= 2) {
            const std::size_t next = pos + step;
            if (next < tree_.size() && tree_[next] <= target) {
                pos = next;
                target -= tree_[next];
            }
        }
        return std::min(pos, live - 1);
    }

private:
    std::vector<double> tree_;
    std::vector<double> weight_;
    std::size_t top_ = 1;
    double total_ = 0.0;
};

class PfpGrowth {
public:
    PfpGrowth(const ModelSpec& spec)
        : spec_(spec), n_(spec.nodes), rng_(spec.seed), weights_(spec.nodes), degree_(spec.nodes, 0) {
        edges_.reserve(spec.links);
        present_.reserve(spec.links * 2);
    }

    Graph run() {
        const PfpParams& pp = spec_.pfp;
        grow_seed();
        while (live_ < n_) {
            const std::size_t reserve = n_ - live_ - 1;  // each later node needs at least one link
            std::size_t budget = spec_.links - edges_.size() - reserve;
            const double u = rng_.uniform();

            std::size_t host_count = 1;
            std::size_t internal = 0;
            if (u < pp.p) {
                internal = 2;
            } else if (u < pp.p + pp.q) {
                internal = 1;
            } else {
                host_count = 2;
                internal = 1;
            }
            if (host_count > budget) host_count = 1;
            budget -= host_count;
            internal = std::min(internal, budget);

            std::vector<NodeId> hosts;
            while (hosts.size() < host_count) hosts.push_back(pick_distinct(hosts));
            // Internal links all hang off the first host.
            std::vector<NodeId> peers;
            for (std::size_t i = 0; i < internal; ++i) peers.push_back(pick_peer(hosts.front(), peers));

            const auto fresh = static_cast<NodeId>(live_++);
            for (NodeId h : hosts) link(h, fresh);
            for (NodeId p : peers) link(hosts.front(), p);
        }
        pad();
        return Graph::from_edges(n_, edges_);
    }

private:
    double weight_of(std::size_t k) const {
        if (k <= 1) return 1.0;
        const double kd = static_cast<double>(k);
        return std::pow(kd, 1.0 + spec_.pfp.delta * std::log10(kd));
    }

    void link(NodeId a, NodeId b) {
        edges_.push_back({a, b});
        present_.insert(pair_key(a, b, n_));
        weights_.set(a, weight_of(++degree_[a]));
        weights_.set(b, weight_of(++degree_[b]));
    }

    bool adjacent(NodeId a, NodeId b) const { return present_.count(pair_key(a, b, n_)) != 0; }

    NodeId draw() { return static_cast<NodeId>(weights_.find(rng_.uniform() * weights_.total(), live_)); }

    NodeId pick_distinct(const std::vector<NodeId>& taken) {
        for (std::size_t attempt = 0; attempt < spec_.pfp.max_retries; ++attempt) {
            const NodeId c = draw();
            if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
        }
        throw GenerationError("PFP: no distinct host found after " + std::to_string(spec_.pfp.max_retries) +
                              " draws at " + std::to_string(live_) + " nodes");
    }

    NodeId pick_peer(NodeId host, const std::vector<NodeId>& taken) {
        for (std::size_t attempt = 0; attempt < spec_.pfp.max_retries; ++attempt) {
            const NodeId c = draw();
            if (c != host && !adjacent(host, c) && std::find(taken.begin(), taken.end(), c) == taken.end())
                return c;
        }
        throw GenerationError("PFP: no free peer for host " + std::to_string(host) + " after " +
                              std::to_string(spec_.pfp.max_retries) + " draws at " + std::to_string(live_) +
                              " nodes");
    }

    void grow_seed() {
        const std::size_t s = spec_.pfp.seed_nodes;
        live_ = s;
        for (std::size_t v = 1; v < s; ++v) link(static_cast<NodeId>(rng_.below(v)), static_cast<NodeId>(v));
        for (std::size_t added = 0; added < spec_.pfp.seed_extra_links;) {
            const auto a = static_cast<NodeId>(rng_.below(s));
            const auto b = static_cast<NodeId>(rng_.below(s));
            if (a == b || adjacent(a, b)) continue;
            link(a, b);
            ++added;
        }
    }

    void pad() {
        const std::size_t limit = spec_.pfp.max_retries * std::max<std::size_t>(1, spec_.links - edges_.size());
        std::size_t attempts = 0;
        while (edges_.size() < spec_.links) {
            if (++attempts > limit)
                throw GenerationError("PFP: padding stalled at " + std::to_string(edges_.size()) + " of " +
                                      std::to_string(spec_.links) + " links");
            const NodeId a = draw();
            const NodeId b = draw();
            if (a == b || adjacent(a, b)) continue;
            link(a, b);
        }
    }

    const ModelSpec& spec_;
    std::size_t n_;
    Rng rng_;
    WeightTree weights_;
    std::vector<std::size_t> degree_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> present_;
    std::size_t live_ = 0;
};

}  // namespace

Graph generate_pfp(const ModelSpec& spec) {
    const PfpParams& pp = spec.pfp;
    const std::size_t n = spec.nodes;
    const std::size_t m = spec.links;
    require_id_space(n);
    if (!(pp.p >= 0.0 && pp.q >= 0.0 && pp.p + pp.q <= 1.0))
        throw SpecError("PFP: need p, q >= 0 and p + q <= 1");
    if (!std::isfinite(pp.delta)) throw SpecError("PFP: delta must be finite");
    if (pp.seed_nodes < 2) throw SpecError("PFP: seed graph needs at least 2 nodes");
    if (pp.seed_extra_links > max_links(pp.seed_nodes) - (pp.seed_nodes - 1))
        throw SpecError("PFP: seed graph cannot hold the requested extra links");
    if (n < pp.seed_nodes)
        throw SpecError("PFP: " + std::to_string(n) + " nodes is below the seed graph size " +
                        std::to_string(pp.seed_nodes));
    const std::size_t seed_links = pp.seed_nodes - 1 + pp.seed_extra_links;
    if (m < n - 1 || m > max_links(n) || m < seed_links + (n - pp.seed_nodes))
        throw SpecError("PFP: " + std::to_string(m) + " links unreachable on " + std::to_string(n) +
                        " nodes (need between " + std::to_string(seed_links + (n - pp.seed_nodes)) + " and " +
                        std::to_string(max_links(n)) + ")");
    return PfpGrowth(spec).run();
}

Graph generate(const ModelSpec& spec) {
    switch (spec.family) {
        case ModelFamily::ER: return generate_er(spec);
        case ModelFamily::BA: return generate_ba(spec);
        case ModelFamily::PFP: return generate_pfp(spec);
    }
    throw SpecError("unknown model family");
}

}  // namespace bosam
