#include <doctest.h>

#include <sstream>

#include "bosam/error.hpp"
#include "bosam/render.hpp"
#include "test_support.hpp"

using namespace bosam;
using bosam::testing::parse;
using bosam::testing::pbm_bytes;
using bosam::testing::slurp;

namespace {

const std::string kFixtures = BOSAM_FIXTURE_DIR;

Bitmap render_text(std::string_view text, OrderingMode mode, std::size_t r, std::size_t s = 1) {
    const Graph g = parse(text);
    return rasterize(g, bosam_order(g, mode), RenderSpec{r, s});
}

}  // namespace

TEST_CASE("3-path at full resolution") {
    const Bitmap b = render_text("a b\nb c\n", OrderingMode::Cohesion, 3);
    // 1-based (row, col) black set {(1,2),(2,1),(1,3),(3,1)}.
    const int expected[3][3] = {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
    for (std::size_t y = 0; y < 3; ++y)
        for (std::size_t x = 0; x < 3; ++x) CHECK(b.at(y, x) == (expected[y][x] == 1));
    CHECK(pbm_bytes(b) == slurp(kFixtures + "/path3_cohesion_3.pbm"));
}

TEST_CASE("nine-node golden files") {
    const std::string text = slurp(kFixtures + "/nine.txt");
    CHECK(pbm_bytes(render_text(text, OrderingMode::Cohesion, 9)) == slurp(kFixtures + "/nine_cohesion_9.pbm"));
    CHECK(pbm_bytes(render_text(text, OrderingMode::Radiation, 9)) == slurp(kFixtures + "/nine_radiation_9.pbm"));
}

TEST_CASE("no links renders all white at any resolution") {
    const std::vector<Edge> none;
    const Graph g = Graph::from_edges(2, none);
    for (std::size_t r : {1, 2, 3, 7, 64}) CHECK(rasterize(g, bosam_order(g), RenderSpec{r, 1}).black_count() == 0);
}

TEST_CASE("4-path pooled to 2x2") {
    // Cohesion order b, c, a, d: a_12 (b-c), a_13 (b-a), a_24 (c-d) and mirrors.
    const Bitmap b = render_text("a b\nb c\nc d\n", OrderingMode::Cohesion, 2);
    CHECK(b.at(0, 0));  // {1,2} x {1,2} holds a_12
    CHECK(b.at(0, 1));  // {1,2} x {3,4} holds a_13, a_24
    CHECK(b.at(1, 0));
    CHECK_FALSE(b.at(1, 1));  // a - d not adjacent
}

TEST_CASE("upsampling replicates entries into blocks") {
    const Bitmap b = render_text("a b\nb c\n", OrderingMode::Cohesion, 6);
    for (std::size_t y = 0; y < 6; ++y)
        for (std::size_t x = 0; x < 6; ++x) {
            const bool expected = (y / 2 == 0) != (x / 2 == 0);
            CHECK(b.at(y, x) == expected);
        }
}

TEST_CASE("rasterize errors") {
    const Graph g = parse("a b\n");
    const auto o = bosam_order(g);
    CHECK_THROWS_WITH_AS(rasterize(Graph{}, bosam_order(Graph{}), RenderSpec{4, 1}), "empty graph", DomainError);
    CHECK_THROWS_AS(rasterize(g, o, RenderSpec{0, 1}), SpecError);
    CHECK_THROWS_AS(rasterize(g, o, RenderSpec{4, 0}), SpecError);
}

TEST_CASE("PBM encoding is bit-exact") {
    Bitmap two(2, 2);
    two.set(0, 1);
    two.set(1, 0);
    CHECK(pbm_bytes(two) == std::string("P4\n2 2\n\x40\x80", 9));

    CHECK(pbm_bytes(Bitmap(1, 1)) == std::string("P4\n1 1\n\x00", 8));

    Bitmap row(8, 1);
    for (std::size_t x = 0; x < 8; ++x) row.set(0, x);
    CHECK(pbm_bytes(row) == std::string("P4\n8 1\n\xff", 8));

    std::ostringstream out;
    CHECK(encode_pbm(two, out) == 9);
}

TEST_CASE("property: PBM decode inverts encode") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Bitmap b(1 + rng.below(40), 1 + rng.below(40));
        for (std::size_t y = 0; y < b.height(); ++y)
            for (std::size_t x = 0; x < b.width(); ++x) b.set(y, x, rng.below(3) == 0);
        std::istringstream in(pbm_bytes(b));
        CHECK(decode_pbm(in) == b);
    }
    std::istringstream junk("P1\n1 1\n0");
    CHECK_THROWS_AS(decode_pbm(junk), ParseError);
}

TEST_CASE("border_density") {
    Bitmap full(4, 4);
    for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t x = 0; x < 4; ++x) full.set(y, x);
    CHECK(border_density(full, 0.5) == doctest::Approx(0.75));

    Bitmap corner(4, 4);
    corner.set(0, 1);
    corner.set(1, 0);
    CHECK(border_density(corner, 0.5) == 1.0);

    CHECK_THROWS_WITH_AS(border_density(Bitmap(4, 4), 0.5), "no links rendered", DomainError);
    CHECK_THROWS_AS(border_density(full, 0.0), SpecError);
    CHECK_THROWS_AS(border_density(full, 1.5), SpecError);
}

TEST_CASE("property: random renders agree with dense OR-pooling and are symmetric") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = bosam::testing::random_graph(rng, 2 + rng.below(40), 0.03 + 0.3 * rng.uniform());
        if (g.node_count() == 0) continue;
        const auto mode = rng.below(2) ? OrderingMode::Cohesion : OrderingMode::Radiation;
        const auto o = bosam_order(g, mode);
        const auto matrix = bosam::testing::sorted_matrix(g, o.sequence());
        const std::size_t r = 1 + rng.below(60);
        const std::size_t s = 1 + rng.below(5);
        const Bitmap b = rasterize(g, o, RenderSpec{r, s});
        const std::size_t window = (g.node_count() + s - 1) / s;
        const auto expected = bosam::testing::pooled(matrix, window, r);
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t x = 0; x < r; ++x) {
                CHECK(b.at(y, x) == (expected[y][x] == 1));
                CHECK(b.at(y, x) == b.at(x, y));
            }
    }
}

TEST_CASE("property: full-resolution faithfulness and white diagonal") {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = bosam::testing::random_graph(rng, 2 + rng.below(60), 0.2 * rng.uniform() + 0.01);
        const auto o = bosam_order(g);
        const std::size_t n = g.node_count();
        const Bitmap b = rasterize(g, o, RenderSpec{n, 1});
        for (std::size_t i = 0; i < n; ++i) {
            CHECK_FALSE(b.at(i, i));
            for (std::size_t j = 0; j < n; ++j) CHECK(b.at(i, j) == g.has_edge(o.node_at(i + 1), o.node_at(j + 1)));
        }
    }
}

TEST_CASE("property: halving resolution never whitens a black region") {
    // Index range [lo, hi) of pixel x at resolution r over n indices.
    auto coverage = [](std::size_t x, std::size_t n, std::size_t r) {
        const std::size_t lo = x * n / r;
        return std::pair{lo, std::max(lo + 1, (x + 1) * n / r)};
    };
    auto contains = [](std::pair<std::size_t, std::size_t> outer, std::pair<std::size_t, std::size_t> inner) {
        return outer.first <= inner.first && inner.second <= outer.second;
    };
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = bosam::testing::random_graph(rng, 10 + rng.below(120), 0.05 * rng.uniform() + 0.005);
        const std::size_t n = g.node_count();
        const auto o = bosam_order(g);
        const std::size_t r = 2 * (1 + rng.below(64));
        const Bitmap fine = rasterize(g, o, RenderSpec{r, 1});
        const Bitmap coarse = rasterize(g, o, RenderSpec{r / 2, 1});
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t x = 0; x < r; ++x) {
                if (!fine.at(y, x)) continue;
                std::size_t covering = 0;
                for (std::size_t cy = 0; cy < r / 2; ++cy) {
                    if (!contains(coverage(cy, n, r / 2), coverage(y, n, r))) continue;
                    for (std::size_t cx = 0; cx < r / 2; ++cx) {
                        if (!contains(coverage(cx, n, r / 2), coverage(x, n, r))) continue;
                        ++covering;
                        CHECK(coarse.at(cy, cx));
                    }
                }
                CHECK(covering > 0);
            }
    }
}

TEST_CASE("property: zoom equals a full render of the top-left induced submatrix") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = bosam::testing::random_graph(rng, 20 + rng.below(200), 0.1 * rng.uniform() + 0.01);
        const auto o = bosam_order(g);
        for (std::size_t s : {4, 16, 64}) {
            const std::size_t window = (g.node_count() + s - 1) / s;
            const auto top = o.sequence().first(window);
            const Graph sub = induced_subgraph(g, top);
            std::vector<NodeId> identity(window);
            std::iota(identity.begin(), identity.end(), NodeId{0});
            const auto sub_order = NodeOrdering::from_sequence(o.mode(), identity);
            const std::size_t r = 1 + rng.below(80);
            CHECK(rasterize(g, o, RenderSpec{r, s}) == rasterize(sub, sub_order, RenderSpec{r, 1}));
        }
    }
}
