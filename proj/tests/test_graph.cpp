#include <doctest.h>

#include <sstream>

#include "bosam/error.hpp"
#include "bosam/graph.hpp"
#include "test_support.hpp"

using namespace bosam;
using bosam::testing::parse;

namespace {

std::size_t degree_of(const Graph& g, std::string_view label) { return g.degree(*g.find(label)); }

}  // namespace

TEST_CASE("parse: two-edge path") {
    const Graph g = parse("a b\nb c\n");
    CHECK(g.node_count() == 3);
    CHECK(g.link_count() == 2);
    CHECK(degree_of(g, "a") == 1);
    CHECK(degree_of(g, "b") == 2);
    CHECK(degree_of(g, "c") == 1);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
}

TEST_CASE("parse: self-loop and reversed duplicate are dropped and counted") {
    DropCounts drops;
    const Graph g = parse_edge_list(std::string_view("1 1\n1 2\n2 1\n"), &drops);
    CHECK(g.node_count() == 2);
    CHECK(g.link_count() == 1);
    CHECK(drops.self_loops == 1);
    CHECK(drops.duplicates == 1);
}

TEST_CASE("parse: comments, blank lines, tabs and CRLF") {
    CHECK(parse("# header\nx y\n").link_count() == 1);
    CHECK(parse("# header\nx y\n").node_count() == 2);
    const Graph g = parse("\n  # indented comment\r\nx\ty\r\n\n\t\ny z\n");
    CHECK(g.node_count() == 3);
    CHECK(g.link_count() == 2);
    CHECK(g.label(0) == "x");
}

TEST_CASE("parse: arbitrary byte-string labels") {
    const Graph g = parse("AS701 AS1239\n42 AS701\n\xc3\xa9t\xc3\xa9 42\n");
    CHECK(g.node_count() == 4);
    CHECK(g.find("AS701").value() == 0);
    CHECK(g.find("\xc3\xa9t\xc3\xa9").value() == 3);
    CHECK_FALSE(g.find("missing").has_value());
}

TEST_CASE("parse: malformed line reports its line number") {
    try {
        parse("a b\n# fine\nc d e\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse("lonely\n"), ParseError);
}

TEST_CASE("parse: empty input is an empty graph") {
    const Graph g = parse("");
    CHECK(g.node_count() == 0);
    CHECK(g.link_count() == 0);
    CHECK(parse("# only comments\n\n").node_count() == 0);
    std::istringstream empty;
    CHECK(parse_edge_list(empty).node_count() == 0);
}

TEST_CASE("degree_view on the 4-path, a star and an isolated node") {
    const Graph path = parse("a b\nb c\nc d\n");
    const auto b = degree_view(path, *path.find("b"));
    CHECK(b.degree == 2);
    CHECK(b.neighbor_degrees_desc == std::vector<std::uint32_t>{2, 1});
    CHECK(b.neighbor_degrees_asc == std::vector<std::uint32_t>{1, 2});

    const Graph star = parse("c x\nc y\nc z\n");
    const auto center = degree_view(star, 0);
    CHECK(center.degree == 3);
    CHECK(center.neighbor_degrees_desc == std::vector<std::uint32_t>{1, 1, 1});

    const std::vector<Edge> none;
    const Graph lone = Graph::from_edges(1, none);
    const auto iso = degree_view(lone, 0);
    CHECK(iso.degree == 0);
    CHECK(iso.neighbor_degrees_desc.empty());
    CHECK(iso.neighbor_degrees_asc.empty());

    CHECK_THROWS_AS(degree_view(path, 4), std::out_of_range);
}

TEST_CASE("largest_component") {
    SUBCASE("tie goes to the component with the smaller id") {
        const Graph g = parse("a b\nc d\n");
        const Graph c = largest_component(g);
        CHECK(c.node_count() == 2);
        CHECK(c.link_count() == 1);
        CHECK(c.label(0) == "a");
        CHECK(c.label(1) == "b");
    }
    SUBCASE("connected graph is returned unchanged") {
        const Graph g = parse("a b\nb c\nc a\n");
        const Graph c = largest_component(g);
        CHECK(c.node_count() == 3);
        CHECK(c.link_count() == 3);
    }
    SUBCASE("triangle plus isolated node") {
        const std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 1}};
        const Graph g = Graph::from_edges(4, edges, {"iso", "a", "b", "c"});
        const Graph c = largest_component(g);
        CHECK(c.node_count() == 3);
        CHECK(c.link_count() == 3);
        CHECK_FALSE(c.find("iso").has_value());
        CHECK(c.find("a").value() == 0);
    }
    SUBCASE("empty graph") { CHECK_THROWS_WITH_AS(largest_component(Graph{}), "no component", DomainError); }
}

TEST_CASE("from_edges rejects inconsistent input") {
    const std::vector<Edge> bad{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, bad), SpecError);
    const std::vector<Edge> ok{{0, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, ok, {"x", "x"}), SpecError);
    CHECK_THROWS_AS(Graph::from_edges(2, ok, {"x"}), SpecError);
}

TEST_CASE("property: parsed graphs satisfy every invariant and round-trip with identical ids") {
    Rng rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(40);
        const double p = rng.uniform();
        std::string text = bosam::testing::random_edge_text(rng, n, p);
        // Sprinkle noise the parser must drop.
        if (!text.empty()) {
            const std::string first = text.substr(0, text.find(' '));
            text += first + " " + first + "\n";
        }
        const Graph g = parse(text);
        CHECK_NOTHROW(g.validate());

        std::size_t degree_sum = 0;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            degree_sum += g.degree(u);
            const auto view = degree_view(g, u);
            CHECK(std::equal(view.neighbor_degrees_desc.rbegin(), view.neighbor_degrees_desc.rend(),
                             view.neighbor_degrees_asc.begin(), view.neighbor_degrees_asc.end()));
        }
        CHECK(degree_sum == 2 * g.link_count());

        std::ostringstream out;
        write_edge_list(g, out);
        const Graph back = parse(out.str());
        REQUIRE(back.node_count() == g.node_count());
        CHECK(back.link_count() == g.link_count());
        for (NodeId u = 0; u < g.node_count(); ++u) {
            CHECK(back.label(u) == g.label(u));
            CHECK(std::ranges::equal(back.neighbors(u), g.neighbors(u)));
        }
    }
}

TEST_CASE("has_edge and induced_subgraph") {
    const Graph g = parse("a b\nb c\nc d\nd a\na c\n");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 3));
    const std::vector<NodeId> pick{2, 0, 1};
    const Graph sub = induced_subgraph(g, pick);
    CHECK(sub.label(0) == "c");
    CHECK(sub.link_count() == 3);
    CHECK_NOTHROW(sub.validate());
}
