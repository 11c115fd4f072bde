#include "bosam/render.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "bosam/error.hpp"

namespace bosam {

Bitmap::Bitmap(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(width * height, 0) {
    if (width == 0 || height == 0) throw SpecError("bitmap dimensions must be positive");
}

std::size_t Bitmap::black_count() const noexcept {
    return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

namespace {

struct PixelSpan {
    std::size_t first;
    std::size_t last;  // inclusive
};

// For each 0-based index in [0, indices), the pixels whose coverage includes it.
std::vector<PixelSpan> index_to_pixels(std::size_t indices, std::size_t resolution) {
    std::vector<PixelSpan> spans(indices, PixelSpan{resolution, 0});
    for (std::size_t x = 0; x < resolution; ++x) {
        const std::size_t lo = x * indices / resolution;
        const std::size_t hi = std::max(lo + 1, (x + 1) * indices / resolution);
        for (std::size_t i = lo; i < hi; ++i) {
            spans[i].first = std::min(spans[i].first, x);
            spans[i].last = std::max(spans[i].last, x);
        }
    }
    return spans;
}

}  // namespace

Bitmap rasterize(const Graph& graph, const NodeOrdering& ordering, const RenderSpec& spec) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw DomainError("empty graph");
    if (spec.resolution < 1) throw SpecError("resolution must be at least 1");
    if (spec.zoom_scale < 1) throw SpecError("zoom scale must be at least 1");
    if (ordering.size() != n) throw SpecError("ordering does not match graph");

    const std::size_t r = spec.resolution;
    const std::size_t window = (n + spec.zoom_scale - 1) / spec.zoom_scale;
    const auto spans = index_to_pixels(window, r);
    const auto nodes = ordering.sequence();

    Bitmap bitmap(r, r);
    for (std::size_t i = 0; i < window; ++i) {
        const PixelSpan rows = spans[i];
        for (NodeId w : graph.neighbors(nodes[i])) {
            const std::size_t j = ordering.position_of(w) - 1;
            if (j >= window) continue;
            const PixelSpan cols = spans[j];
            for (std::size_t y = rows.first; y <= rows.last; ++y)
                for (std::size_t x = cols.first; x <= cols.last; ++x) bitmap.set(y, x);
        }
    }
    return bitmap;
}

std::size_t encode_pbm(const Bitmap& bitmap, std::ostream& sink) {
    const std::string header =
        "P4\n" + std::to_string(bitmap.width()) + " " + std::to_string(bitmap.height()) + "\n";
    const std::size_t row_bytes = (bitmap.width() + 7) / 8;
    std::vector<char> row(row_bytes);

    sink.write(header.data(), static_cast<std::streamsize>(header.size()));
    for (std::size_t y = 0; y < bitmap.height(); ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t x = 0; x < bitmap.width(); ++x) {
            if (bitmap.at(y, x)) row[x / 8] = static_cast<char>(row[x / 8] | (0x80 >> (x % 8)));
        }
        sink.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
    if (!sink) throw IoError("failed writing PBM");
    return header.size() + row_bytes * bitmap.height();
}

namespace {

std::size_t read_header_number(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string skip;
            std::getline(in, skip);
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in.get();
        } else {
            break;
        }
    }
    std::size_t value = 0;
    if (!(in >> value)) throw ParseError(1, "malformed PBM header");
    return value;
}

}  // namespace

Bitmap decode_pbm(std::istream& source) {
    char magic[2] = {};
    if (!source.read(magic, 2) || magic[0] != 'P' || magic[1] != '4')
        throw ParseError(1, "not a binary PBM (P4) stream");
    const std::size_t width = read_header_number(source);
    const std::size_t height = read_header_number(source);
    if (width == 0 || height == 0) throw ParseError(1, "PBM dimensions must be positive");
    source.get();  // single whitespace before the raster

    Bitmap bitmap(width, height);
    const std::size_t row_bytes = (width + 7) / 8;
    std::vector<char> row(row_bytes);
    for (std::size_t y = 0; y < height; ++y) {
        if (!source.read(row.data(), static_cast<std::streamsize>(row_bytes)))
            throw IoError("truncated PBM raster");
        for (std::size_t x = 0; x < width; ++x) {
            if (static_cast<unsigned char>(row[x / 8]) & (0x80u >> (x % 8))) bitmap.set(y, x);
        }
    }
    return bitmap;
}

double border_density(const Bitmap& bitmap, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) throw SpecError("fraction must lie in (0, 1]");
    const double row_band = fraction * static_cast<double>(bitmap.height());
    const double col_band = fraction * static_cast<double>(bitmap.width());
    std::size_t total = 0;
    std::size_t border = 0;
    for (std::size_t y = 0; y < bitmap.height(); ++y) {
        for (std::size_t x = 0; x < bitmap.width(); ++x) {
            if (!bitmap.at(y, x)) continue;
            ++total;
            if (static_cast<double>(y) < row_band || static_cast<double>(x) < col_band) ++border;
        }
    }
    if (total == 0) throw DomainError("no links rendered");
    return static_cast<double>(border) / static_cast<double>(total);
}

}  // namespace bosam
