#include "bosam/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bosam/error.hpp"

namespace bosam {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels, DropCounts* drops) {
    if (node_count > std::numeric_limits<NodeId>::max())
        throw SpecError("node count exceeds 32-bit id space");
    if (!labels.empty() && labels.size() != node_count)
        throw SpecError("label table size does not match node count");

    Graph g;
    if (labels.empty()) {
        labels.resize(node_count);
        for (std::size_t i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
    }
    g.labels_ = std::move(labels);

    std::size_t self_loops = 0;
    std::vector<std::size_t> fill(node_count + 1, 0);
    for (const Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count) throw SpecError("edge endpoint out of range");
        if (e.u == e.v) {
            ++self_loops;
            continue;
        }
        ++fill[e.u + 1];
        ++fill[e.v + 1];
    }
    std::partial_sum(fill.begin(), fill.end(), fill.begin());

    std::vector<NodeId> raw(fill.back());
    {
        std::vector<std::size_t> cursor(fill.begin(), fill.end() - 1);
        for (const Edge& e : edges) {
            if (e.u == e.v) continue;
            raw[cursor[e.u]++] = e.v;
            raw[cursor[e.v]++] = e.u;
        }
    }

    // Sort each list and squeeze out repeats in place.
    g.offsets_.assign(node_count + 1, 0);
    std::size_t out = 0;
    for (std::size_t u = 0; u < node_count; ++u) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(fill[u]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(fill[u + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        out = static_cast<std::size_t>(std::move(first, last, raw.begin() + static_cast<std::ptrdiff_t>(out)) -
                                       raw.begin());
        g.offsets_[u + 1] = out;
    }
    const std::size_t kept_entries = out;
    const std::size_t duplicate_entries = raw.size() - kept_entries;
    raw.resize(kept_entries);
    raw.shrink_to_fit();
    g.neighbors_ = std::move(raw);

    if (drops) {
        drops->self_loops = self_loops;
        drops->duplicates = duplicate_entries / 2;
    }

    g.index_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        if (!g.index_.emplace(g.labels_[i], static_cast<NodeId>(i)).second)
            throw SpecError("duplicate node label '" + g.labels_[i] + "'");
    }
    return g;
}

void Graph::check(NodeId node) const {
    if (node >= node_count())
        throw std::out_of_range("node " + std::to_string(node) + " out of range (N = " +
                                std::to_string(node_count()) + ")");
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto a = neighbors(u);
    auto b = neighbors(v);
    if (a.size() > b.size()) {
        std::swap(a, b);
        std::swap(u, v);
    }
    return std::binary_search(a.begin(), a.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::uint32_t> Graph::degrees() const {
    std::vector<std::uint32_t> out(node_count());
    for (std::size_t u = 0; u < out.size(); ++u)
        out[u] = static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    return out;
}

void Graph::validate() const {
    const std::size_t n = node_count();
    if (offsets_.size() != n + 1 || offsets_.back() != neighbors_.size())
        throw InvariantError("offset table inconsistent with adjacency storage");
    if (neighbors_.size() % 2 != 0) throw InvariantError("odd adjacency total");
    for (NodeId u = 0; u < n; ++u) {
        auto adj = neighbors(u);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] >= n) throw InvariantError("neighbor id out of range");
            if (adj[i] == u) throw InvariantError("self-loop at node " + std::to_string(u));
            if (i > 0 && adj[i - 1] >= adj[i])
                throw InvariantError("adjacency of node " + std::to_string(u) + " not strictly sorted");
            if (!std::binary_search(neighbors(adj[i]).begin(), neighbors(adj[i]).end(), u))
                throw InvariantError("asymmetric link " + std::to_string(u) + "-" + std::to_string(adj[i]));
        }
    }
}

DegreeSequenceView degree_view(const Graph& graph, NodeId node) {
    DegreeSequenceView view;
    view.node = node;
    auto adj = graph.neighbors(node);
    view.degree = adj.size();
    view.neighbor_degrees_asc.reserve(adj.size());
    for (NodeId v : adj) view.neighbor_degrees_asc.push_back(static_cast<std::uint32_t>(graph.degree(v)));
    std::sort(view.neighbor_degrees_asc.begin(), view.neighbor_degrees_asc.end());
    view.neighbor_degrees_desc.assign(view.neighbor_degrees_asc.rbegin(), view.neighbor_degrees_asc.rend());
    return view;
}

namespace {

constexpr bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

Graph parse_edge_list(std::string_view text, DropCounts* drops) {
    std::vector<std::string> labels;
    std::unordered_map<std::string_view, NodeId> ids;  // keys view into storage
    std::vector<Edge> edges;

    // Rough pre-sizing: typical lines are short.
    edges.reserve(text.size() / 12);
    ids.reserve(text.size() / 64);

    std::deque<std::string> storage;  // stable addresses for the map keys
    auto intern = [&](std::string_view token) -> NodeId {
        auto it = ids.find(token);
        if (it != ids.end()) return it->second;
        if (labels.size() >= std::numeric_limits<NodeId>::max())
            throw SpecError("too many distinct node labels");
        const auto id = static_cast<NodeId>(labels.size());
        storage.emplace_back(token);
        labels.emplace_back(token);
        ids.emplace(storage.back(), id);
        return id;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::string_view tokens[2];
        std::size_t count = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_blank(line[i])) ++i;
            if (i == line.size()) break;
            if (count == 0 && line[i] == '#') break;
            std::size_t j = i;
            while (j < line.size() && !is_blank(line[j])) ++j;
            if (count < 2) tokens[count] = line.substr(i, j - i);
            ++count;
            i = j;
        }
        if (count == 0) continue;
        if (count != 2)
            throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(count));
        const NodeId u = intern(tokens[0]);
        const NodeId v = intern(tokens[1]);
        edges.push_back({u, v});
    }

    ids.clear();
    storage.clear();
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels), drops);
}

Graph parse_edge_list(std::istream& source, DropCounts* drops) {
    std::ostringstream buffer;
    buffer << source.rdbuf();
    if (source.bad()) throw IoError("failed reading edge list");
    return parse_edge_list(std::string_view(buffer.view()), drops);
}

void write_edge_list(const Graph& graph, std::ostream& sink) {
    std::string line;
    for (NodeId high = 0; high < graph.node_count(); ++high) {
        auto adj = graph.neighbors(high);
        auto split = std::lower_bound(adj.begin(), adj.end(), high);
        for (auto it = std::make_reverse_iterator(split); it != adj.rend(); ++it) {
            line.clear();
            line += graph.label(*it);
            line += ' ';
            line += graph.label(high);
            line += '\n';
            sink.write(line.data(), static_cast<std::streamsize>(line.size()));
        }
    }
    if (!sink) throw IoError("failed writing edge list");
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes) {
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(graph.node_count(), absent);
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (remap.at(nodes[i]) != absent) throw SpecError("node listed twice in induced subgraph");
        remap[nodes[i]] = static_cast<NodeId>(i);
        labels.push_back(graph.label(nodes[i]));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (NodeId w : graph.neighbors(nodes[i])) {
            const NodeId j = remap[w];
            if (j != absent && i < j) edges.push_back({static_cast<NodeId>(i), j});
        }
    }
    return Graph::from_edges(nodes.size(), edges, std::move(labels));
}

Graph largest_component(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw DomainError("no component");

    constexpr NodeId unseen = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> component(n, unseen);
    std::vector<NodeId> queue;
    queue.reserve(n);
    NodeId best = 0;
    std::size_t best_size = 0;
    NodeId next_component = 0;
    for (NodeId root = 0; root < n; ++root) {
        if (component[root] != unseen) continue;
        queue.clear();
        queue.push_back(root);
        component[root] = next_component;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId w : graph.neighbors(queue[head])) {
                if (component[w] == unseen) {
                    component[w] = next_component;
                    queue.push_back(w);
                }
            }
        }
        // Strict '>' keeps the earliest (smallest-id) component on ties.
        if (queue.size() > best_size) {
            best_size = queue.size();
            best = next_component;
        }
        ++next_component;
    }
    if (best_size == n) return graph;

    std::vector<NodeId> members;
    members.reserve(best_size);
    for (NodeId u = 0; u < n; ++u)
        if (component[u] == best) members.push_back(u);
    return induced_subgraph(graph, members);
}

}  // namespace bosam
