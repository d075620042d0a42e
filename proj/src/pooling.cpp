#include "stfv/pooling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace stfv {

namespace {

std::uint32_t parse_positive(std::string_view part, std::string_view whole) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v < 1)
        throw UsageError("bad pyramid spec '" + std::string(whole) + "': expected items like 2x2x1");
    return v;
}

}  // namespace

PyramidSpec PyramidSpec::parse(std::string_view text) {
    PyramidSpec spec;
    std::string_view rest = text;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const std::size_t a = item.find('x');
        const std::size_t b = a == std::string_view::npos ? a : item.find('x', a + 1);
        if (a == std::string_view::npos || b == std::string_view::npos)
            throw UsageError("bad pyramid spec '" + std::string(text) + "': expected items like 2x2x1");
        GridSpec g;
        g.kx = parse_positive(item.substr(0, a), text);
        g.ky = parse_positive(item.substr(a + 1, b - a - 1), text);
        g.l = parse_positive(item.substr(b + 1), text);
        spec.grids.push_back(g);
    }
    if (spec.grids.empty()) throw UsageError("pyramid spec must contain at least one grid");
    return spec;
}

std::string PyramidSpec::str() const {
    std::string out;
    for (const GridSpec& g : grids) {
        if (!out.empty()) out += ',';
        out += std::to_string(g.kx) + "x" + std::to_string(g.ky) + "x" + std::to_string(g.l);
    }
    return out;
}

std::size_t PyramidSpec::total_cells() const {
    std::size_t n = 0;
    for (const GridSpec& g : grids) n += g.cells();
    return n;
}

CellIndex cell_of(const Location& loc, const GridSpec& grid) {
    const auto clamp_floor = [](double x, std::uint32_t k) {
        const auto i = static_cast<std::int64_t>(std::floor(x * k));
        return static_cast<std::uint32_t>(std::clamp<std::int64_t>(i, 0, k - 1));
    };
    return CellIndex{clamp_floor(loc.u, grid.kx), clamp_floor(loc.v, grid.ky), clamp_floor(loc.w, grid.l)};
}

std::size_t cell_linear_index(const CellIndex& c, const GridSpec& grid) {
    if (c.ix >= grid.kx || c.iy >= grid.ky || c.it >= grid.l)
        throw std::out_of_range("cell index outside grid");
    return c.ix + std::size_t(grid.kx) * (c.iy + std::size_t(grid.ky) * c.it);
}

std::size_t representation_dim(std::size_t dim, std::size_t K, const PyramidSpec& pyramid, bool sted,
                               std::size_t channels) {
    if (dim < 1 || K < 1 || channels < 1) throw UsageError("representation_dim: arguments must be positive");
    if (sted && !pyramid.is_trivial())
        throw UsageError("STED replaces grid pooling and uses the trivial 1x1x1 grid");
    const std::size_t d = dim + (sted ? 3 : 0);
    return channels * pyramid.total_cells() * 2 * K * d;
}

PooledAccumulator::PooledAccumulator(const PyramidSpec& pyramid, std::size_t block_len)
    : pyramid_(pyramid),
      block_len_(block_len),
      sums_(pyramid.total_cells() * block_len, 0.0),
      counts_(pyramid.total_cells(), 0) {
    if (pyramid_.grids.empty()) throw UsageError("pyramid must contain at least one grid");
}

void PooledAccumulator::add(const Location& loc, std::span<const double> contribution) {
    if (contribution.size() != block_len_)
        throw std::invalid_argument("contribution length does not match pooling block length");
    std::size_t cell_base = 0;
    for (const GridSpec& g : pyramid_.grids) {
        const std::size_t cell = cell_base + cell_linear_index(cell_of(loc, g), g);
        double* dst = sums_.data() + cell * block_len_;
        for (std::size_t j = 0; j < block_len_; ++j) dst[j] += contribution[j];
        ++counts_[cell];
        cell_base += g.cells();
    }
}

Vec PooledAccumulator::finalize() const {
    Vec out(sums_.size(), 0.0);
    for (std::size_t cell = 0; cell < counts_.size(); ++cell) {
        if (counts_[cell] == 0) continue;
        const double inv = 1.0 / static_cast<double>(counts_[cell]);
        const double* src = sums_.data() + cell * block_len_;
        double* dst = out.data() + cell * block_len_;
        for (std::size_t j = 0; j < block_len_; ++j) dst[j] = src[j] * inv;
    }
    return out;
}

Vec pooled_encode(const Mat& contributions, const std::vector<Location>& locations,
                  const PyramidSpec& pyramid) {
    if (contributions.rows != locations.size())
        throw std::invalid_argument("pooled_encode: contribution/location count mismatch");
    PooledAccumulator acc(pyramid, contributions.cols);
    for (std::size_t i = 0; i < contributions.rows; ++i) acc.add(locations[i], contributions.row_span(i));
    return acc.finalize();
}

}  // namespace stfv
