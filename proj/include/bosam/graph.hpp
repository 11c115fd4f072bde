#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bosam {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
};

// What from_edges/parse_edge_list discarded to keep the graph simple.
struct DropCounts {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;  // repeated undirected edges, either orientation
};

/**
 * Immutable simple undirected graph in compressed sparse row form.
 *
 * Nodes are dense ids in [0, node_count()). Each id carries an original label; for
 * parsed graphs the id is the label's first-appearance rank in the input. Adjacency
 * lists are sorted ascending, free of self-loops and repeats, and symmetric.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on node_count nodes. Self-loops and repeated edges are dropped
    /// (and tallied into drops when given). Empty labels default to the decimal id.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::vector<std::string> labels = {}, DropCounts* drops = nullptr);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t link_count() const noexcept { return neighbors_.size() / 2; }

    std::size_t degree(NodeId node) const {
        check(node);
        return offsets_[node + 1] - offsets_[node];
    }

    std::span<const NodeId> neighbors(NodeId node) const {
        check(node);
        return {neighbors_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId node) const {
        check(node);
        return labels_[node];
    }

    std::optional<NodeId> find(std::string_view label) const;

    /// Degree of every node, indexed by id.
    std::vector<std::uint32_t> degrees() const;

    /// Re-checks every structural invariant; throws InvariantError on the first violation.
    void validate() const;

private:
    struct LabelHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    void check(NodeId node) const;

    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> neighbors_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId, LabelHash, std::equal_to<>> index_;
};

// Per-node degree and the multiset of its neighbors' degrees in both sort orders.
struct DegreeSequenceView {
    NodeId node = 0;
    std::size_t degree = 0;
    std::vector<std::uint32_t> neighbor_degrees_desc;
    std::vector<std::uint32_t> neighbor_degrees_asc;
};

DegreeSequenceView degree_view(const Graph& graph, NodeId node);

/**
 * Reads a whitespace-separated edge list. Blank lines and lines whose first
 * non-blank character is '#' are skipped; every other line must hold exactly two
 * tokens. Node ids follow first appearance. Throws ParseError on a malformed line.
 */
Graph parse_edge_list(std::istream& source, DropCounts* drops = nullptr);
Graph parse_edge_list(std::string_view text, DropCounts* drops = nullptr);

/**
 * Writes one "label label" line per link. Links are emitted grouped by their larger
 * endpoint id (ascending), and within a group by the smaller endpoint descending,
 * which makes re-parsing reproduce the ids of any graph whose ids are a
 * first-appearance order of some edge sequence (every parsed or generated graph).
 * Isolated nodes have no line and are not representable.
 */
void write_edge_list(const Graph& graph, std::ostream& sink);

/// Subgraph induced on nodes; nodes[i] becomes id i. Labels carry over.
Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes);

/// Induced subgraph on the largest connected component, ties going to the component
/// holding the smallest id. Relative id order is preserved.
Graph largest_component(const Graph& graph);

}  // namespace bosam
