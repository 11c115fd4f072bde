#include "bosam/ordering.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bosam/error.hpp"

namespace bosam {

std::string_view to_string(OrderingMode mode) {
    return mode == OrderingMode::Cohesion ? "cohesion" : "radiation";
}

OrderingMode parse_ordering_mode(std::string_view text) {
    if (text == "cohesion") return OrderingMode::Cohesion;
    if (text == "radiation") return OrderingMode::Radiation;
    throw SpecError("unknown ordering mode '" + std::string(text) + "'");
}

NodeOrdering NodeOrdering::from_sequence(OrderingMode mode, std::vector<NodeId> sequence) {
    std::vector<std::size_t> position(sequence.size(), 0);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const NodeId node = sequence[i];
        if (node >= sequence.size() || position[node] != 0)
            throw SpecError("ordering is not a permutation of the node set");
        position[node] = i + 1;
    }
    return NodeOrdering(mode, std::move(sequence), std::move(position));
}

NodeId NodeOrdering::node_at(std::size_t index) const {
    if (index < 1 || index > node_at_.size()) throw std::out_of_range("sorted index out of range");
    return node_at_[index - 1];
}

std::size_t NodeOrdering::position_of(NodeId node) const {
    if (node >= position_of_.size()) throw std::out_of_range("node out of range");
    return position_of_[node];
}

NodeOrdering bosam_order(const Graph& graph, OrderingMode mode) {
    const std::size_t n = graph.node_count();
    const std::vector<std::uint32_t> degree = graph.degrees();

    // Each node's neighbor degrees, stored back to back in the order the mode compares
    // them: descending for cohesion, ascending for radiation.
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) offset[u + 1] = offset[u] + degree[u];
    if (offset[n] != 2 * graph.link_count()) throw InvariantError("degree sum differs from 2M");

    std::vector<std::uint32_t> keys(offset[n]);
    for (NodeId u = 0; u < n; ++u) {
        auto out = keys.begin() + static_cast<std::ptrdiff_t>(offset[u]);
        auto first = out;
        for (NodeId w : graph.neighbors(u)) *out++ = degree[w];
        if (mode == OrderingMode::Cohesion)
            std::sort(first, out, std::greater<>{});
        else
            std::sort(first, out);
    }

    auto seq = [&](NodeId u) {
        return std::span<const std::uint32_t>(keys.data() + offset[u], degree[u]);
    };

    std::vector<NodeId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);

    // Equal degrees mean equal sequence lengths, so the first mismatch decides.
    auto precedes = [&](NodeId a, NodeId b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        const auto sa = seq(a);
        const auto sb = seq(b);
        const auto [ia, ib] = std::mismatch(sa.begin(), sa.end(), sb.begin());
        if (ia != sa.end()) {
            return mode == OrderingMode::Cohesion ? *ia > *ib : *ia < *ib;
        }
        return a < b;
    };
    std::sort(order.begin(), order.end(), precedes);

    return NodeOrdering::from_sequence(mode, std::move(order));
}

void write_ordering(const Graph& graph, const NodeOrdering& ordering, std::ostream& sink) {
    if (ordering.size() != graph.node_count()) throw SpecError("ordering does not match graph");
    std::string line;
    const auto nodes = ordering.sequence();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        line.clear();
        line += std::to_string(i + 1);
        line += ' ';
        line += graph.label(nodes[i]);
        line += ' ';
        line += std::to_string(graph.degree(nodes[i]));
        line += '\n';
        sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
    if (!sink) throw IoError("failed writing ordering");
}

NodeOrdering read_ordering(const Graph& graph, std::istream& source, OrderingMode mode) {
    std::vector<NodeId> sequence;
    sequence.reserve(graph.node_count());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::size_t index = 0;
        std::string label;
        std::size_t degree = 0;
        std::string extra;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!(fields >> index >> label >> degree) || (fields >> extra))
            throw ParseError(line_no, "expected '<index> <label> <degree>'");
        if (index != sequence.size() + 1)
            throw ParseError(line_no, "index " + std::to_string(index) + " out of sequence");
        const auto node = graph.find(label);
        if (!node) throw ParseError(line_no, "unknown node label '" + label + "'");
        if (graph.degree(*node) != degree)
            throw ParseError(line_no, "degree mismatch for node '" + label + "'");
        sequence.push_back(*node);
    }
    if (source.bad()) throw IoError("failed reading ordering");
    if (sequence.size() != graph.node_count())
        throw SpecError("ordering lists " + std::to_string(sequence.size()) + " nodes, graph has " +
                        std::to_string(graph.node_count()));
    return NodeOrdering::from_sequence(mode, std::move(sequence));
}

}  // namespace bosam
