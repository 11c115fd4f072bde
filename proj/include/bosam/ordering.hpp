#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "bosam/graph.hpp"

namespace bosam {

// Tie-break basis within a group of equal-degree nodes.
//   Cohesion:  neighbor degrees sorted descending, lexicographically larger first.
//   Radiation: neighbor degrees sorted ascending, lexicographically smaller first.
enum class OrderingMode { Cohesion, Radiation };

std::string_view to_string(OrderingMode mode);
OrderingMode parse_ordering_mode(std::string_view text);

/**
 * A bijection between node ids and 1-based sorted indices. Index 1 is the top row
 * (and left column) of the sorted adjacency matrix.
 */
class NodeOrdering {
public:
    /// Wraps an explicit permutation: sequence[i] is the node at sorted index i + 1.
    /// Throws SpecError unless sequence is a permutation of [0, sequence.size()).
    static NodeOrdering from_sequence(OrderingMode mode, std::vector<NodeId> sequence);

    OrderingMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return node_at_.size(); }

    NodeId node_at(std::size_t index) const;       // index in [1, N]
    std::size_t position_of(NodeId node) const;    // result in [1, N]

    /// Nodes in sorted order (0-based view of node_at).
    std::span<const NodeId> sequence() const noexcept { return node_at_; }

private:
    NodeOrdering(OrderingMode mode, std::vector<NodeId> node_at, std::vector<std::size_t> position_of)
        : mode_(mode), node_at_(std::move(node_at)), position_of_(std::move(position_of)) {}

    OrderingMode mode_ = OrderingMode::Cohesion;
    std::vector<NodeId> node_at_;
    std::vector<std::size_t> position_of_;  // 1-based
};

/**
 * Sorts nodes by decreasing degree; equal degrees are split by comparing full
 * neighbor-degree sequences as described for OrderingMode, and exact ties fall back
 * to ascending node id. Deterministic for a given graph and mode.
 */
NodeOrdering bosam_order(const Graph& graph, OrderingMode mode = OrderingMode::Cohesion);

/// One line per sorted index: "<index> <label> <degree>".
void write_ordering(const Graph& graph, const NodeOrdering& ordering, std::ostream& sink);

/// Reads the write_ordering format back against graph. Indices must be 1..N in order
/// and every label must name a distinct node of graph; the degree column is checked.
NodeOrdering read_ordering(const Graph& graph, std::istream& source, OrderingMode mode);

}  // namespace bosam
