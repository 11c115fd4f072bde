#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bosam/graph.hpp"
#include "bosam/ordering.hpp"

namespace bosam {

/// Binary image, row-major, true = black.
class Bitmap {
public:
    Bitmap(std::size_t width, std::size_t height);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }

    // 0-based (row, col); row grows downward.
    bool at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool black = true) {
        pixels_[row * width_ + col] = black ? 1 : 0;
    }

    std::size_t black_count() const noexcept;

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<std::uint8_t> pixels_;
};

struct RenderSpec {
    std::size_t resolution = 1024;  // square R x R output
    std::size_t zoom_scale = 1;     // keep sorted indices 1..ceil(N / zoom_scale)
};

/**
 * Rasterizes the sorted adjacency matrix restricted to indices 1..N' with
 * N' = ceil(N / zoom_scale). Pixel x covers 0-based indices
 * [floor(x N' / R), floor((x + 1) N' / R)), widened to one index when that range is
 * empty (R > N'), so downsampling OR-pools blocks and upsampling replicates entries.
 * A pixel is black iff any covered entry is a link.
 */
Bitmap rasterize(const Graph& graph, const NodeOrdering& ordering, const RenderSpec& spec);

/// Binary PBM: "P4\n<w> <h>\n" then rows packed MSB first, each padded to a byte.
/// Returns the number of bytes written.
std::size_t encode_pbm(const Bitmap& bitmap, std::ostream& sink);

/// Inverse of encode_pbm. Accepts comments and arbitrary whitespace in the header.
Bitmap decode_pbm(std::istream& source);

/// Share of black pixels lying in the top or left band
/// (row < fraction * H or col < fraction * W). Throws DomainError on an all-white image.
double border_density(const Bitmap& bitmap, double fraction);

}  // namespace bosam
