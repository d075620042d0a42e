#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stfv/common.hpp"
#include "stfv/core.hpp"

namespace stfv {

/// One pooling grid: kx * ky spatial cells times l temporal divisions.
struct GridSpec {
    std::uint32_t kx = 1;
    std::uint32_t ky = 1;
    std::uint32_t l = 1;

    std::size_t cells() const { return std::size_t(kx) * ky * l; }
    bool operator==(const GridSpec&) const = default;
};

/// Ordered set of grids whose cells are concatenated into one representation.
struct PyramidSpec {
    std::vector<GridSpec> grids;

    static PyramidSpec trivial() { return PyramidSpec{{GridSpec{1, 1, 1}}}; }
    /// Parses the textual form "1x1x1,2x2x3".
    static PyramidSpec parse(std::string_view text);
    std::string str() const;

    std::size_t total_cells() const;
    bool is_trivial() const { return grids.size() == 1 && grids.front() == GridSpec{1, 1, 1}; }
    bool operator==(const PyramidSpec&) const = default;
};

struct CellIndex {
    std::uint32_t ix = 0;
    std::uint32_t iy = 0;
    std::uint32_t it = 0;
    bool operator==(const CellIndex&) const = default;
};

/// Maps a normalized location to its cell: ix = min(floor(u*kx), kx-1) and
/// likewise for y and t, so u = 1.0 lands in the last cell.
CellIndex cell_of(const Location& loc, const GridSpec& grid);

/// Canonical cell order within a grid: x fastest, then y, then t.
std::size_t cell_linear_index(const CellIndex& c, const GridSpec& grid);

/// Length of the final representation:
///   channels * total_cells * 2 * K * (dim + 3 if sted).
/// STED replaces grid pooling, so it requires the trivial single-cell pyramid.
std::size_t representation_dim(std::size_t dim, std::size_t K, const PyramidSpec& pyramid, bool sted,
                               std::size_t channels);

/// Shape metadata carried with an encoding. `dim` is the per-channel
/// descriptor dimension before the STED location extension.
struct EncodingLayout {
    PyramidSpec pyramid = PyramidSpec::trivial();
    std::uint32_t K = 0;
    std::uint32_t dim = 0;
    bool sted = false;
    std::uint32_t channels = 1;

    std::size_t length() const { return representation_dim(dim, K, pyramid, sted, channels); }
};

struct VideoEncoding {
    Vec values;
    EncodingLayout layout;
};

/// Streaming average pooling over pyramid cells. Feed one contribution per
/// descriptor; finalize() divides each cell by its member count (empty cells
/// stay zero) and returns cell blocks concatenated in canonical order.
class PooledAccumulator {
public:
    PooledAccumulator(const PyramidSpec& pyramid, std::size_t block_len);

    void add(const Location& loc, std::span<const double> contribution);
    Vec finalize() const;
    const std::vector<std::size_t>& cell_counts() const { return counts_; }
    std::size_t block_len() const { return block_len_; }

private:
    PyramidSpec pyramid_;
    std::size_t block_len_;
    Vec sums_;
    std::vector<std::size_t> counts_;
};

/// Average pooling of precomputed contributions (rows of `contributions`,
/// one per descriptor). Returns the pre-normalization concatenated encoding.
Vec pooled_encode(const Mat& contributions, const std::vector<Location>& locations,
                  const PyramidSpec& pyramid);

}  // namespace stfv
