#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmusik/dyadic.hpp"
#include "qmusik/multi_index.hpp"

namespace qmusik {

/// Number of nodes prod_p (2^{l_p} + 1) without materializing the grid.
/// Throws std::overflow_error when the product leaves the 64-bit range.
inline std::uint64_t point_count(const MultiIndex& l) {
    unsigned __int128 total = 1;
    for (auto lp : l) {
        if (lp > 62) throw std::overflow_error("grid level too large: 2^l + 1 overflows");
        total *= (std::uint64_t{1} << lp) + 1;
        if (total > UINT64_MAX)
            throw std::overflow_error("grid of " + l.to_string() +
                                      " exceeds 64-bit node count");
    }
    return static_cast<std::uint64_t>(total);
}

/// The full tensor lattice of index l: nodes (i_1 2^{-l_1}, ..., i_d 2^{-l_d})
/// with i_p in {0, ..., 2^{l_p}}, ordered lexicographically in i (last
/// direction fastest). Nodes are generated on demand; nothing is stored
/// beyond the index.
class AnisotropicGrid {
  public:
    explicit AnisotropicGrid(MultiIndex index) : index_(std::move(index)) {
        strides_.resize(static_cast<std::size_t>(index_.dim()));
        std::uint64_t s = 1;
        for (std::int32_t p = index_.dim() - 1; p >= 0; --p) {
            strides_[static_cast<std::size_t>(p)] = s;
            s *= axis_size(p);
        }
        size_ = point_count(index_);
    }

    const MultiIndex& index() const { return index_; }
    std::int32_t dim() const { return index_.dim(); }
    std::uint64_t size() const { return size_; }

    /// Nodes along direction p: i in {0, ..., 2^{l_p}}.
    std::uint64_t axis_size(std::int32_t p) const {
        return (std::uint64_t{1} << index_[static_cast<std::size_t>(p)]) + 1;
    }

    double axis_coordinate(std::int32_t p, std::uint64_t i) const {
        return std::ldexp(static_cast<double>(i), -index_[static_cast<std::size_t>(p)]);
    }

    /// Decode the flat lexicographic position into per-direction indices.
    void decode(std::uint64_t flat, std::span<std::uint64_t> idx) const {
        for (std::int32_t p = 0; p < dim(); ++p) {
            const auto sp = strides_[static_cast<std::size_t>(p)];
            idx[static_cast<std::size_t>(p)] = flat / sp;
            flat %= sp;
        }
    }

    /// Write the coordinates of the flat-indexed node into `x`.
    void coordinates(std::uint64_t flat, std::span<double> x) const {
        for (std::int32_t p = 0; p < dim(); ++p) {
            const auto sp = strides_[static_cast<std::size_t>(p)];
            x[static_cast<std::size_t>(p)] = axis_coordinate(p, flat / sp);
            flat %= sp;
        }
    }

    /// Exact dyadic node at flat position k.
    GridPoint point(std::uint64_t flat) const {
        std::vector<DyadicCoord> coords;
        coords.reserve(static_cast<std::size_t>(dim()));
        for (std::int32_t p = 0; p < dim(); ++p) {
            const auto sp = strides_[static_cast<std::size_t>(p)];
            coords.emplace_back(static_cast<std::int64_t>(flat / sp),
                                index_[static_cast<std::size_t>(p)]);
            flat %= sp;
        }
        return GridPoint(std::move(coords));
    }

    /// Materialize every node (tests and small grids only).
    std::vector<GridPoint> points() const {
        std::vector<GridPoint> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (std::uint64_t k = 0; k < size_; ++k) out.push_back(point(k));
        return out;
    }

  private:
    MultiIndex index_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 0;
};

inline AnisotropicGrid grid_points(const MultiIndex& l) { return AnisotropicGrid(l); }

/// The deduplicated union of all subgrids with |l|_1 = n + d - 1.
struct SparseGridLevel {
    std::int32_t n = 0;
    std::int32_t d = 0;
    std::vector<GridPoint> distinct_points;  // sorted lexicographically

    bool contains(const GridPoint& p) const {
        return std::binary_search(distinct_points.begin(), distinct_points.end(), p);
    }
};

inline SparseGridLevel sparse_grid(std::int32_t n, std::int32_t d) {
    if (n < 1) throw std::invalid_argument("sparse level must be >= 1");
    if (d < 2) throw std::invalid_argument("sparse grid needs d >= 2");
    SparseGridLevel out{n, d, {}};
    for (const auto& l : enumerate_level_indices(n + d - 1, d)) {
        AnisotropicGrid grid(l);
        for (std::uint64_t k = 0; k < grid.size(); ++k)
            out.distinct_points.push_back(grid.point(k));
    }
    std::sort(out.distinct_points.begin(), out.distinct_points.end());
    out.distinct_points.erase(
        std::unique(out.distinct_points.begin(), out.distinct_points.end()),
        out.distinct_points.end());
    return out;
}

/// |sparse_grid(n, d)| by direct counting, no materialization. A node
/// contributes iff its per-direction minimal levels m_p (0 for the
/// endpoints 0 and 1) satisfy sum_p max(m_p, 1) <= n + d - 1, and there
/// are 3 nodes with max(m,1) = 1 and 2^{w-1} nodes with minimal level
/// w >= 2, so the count is a d-fold convolution.
inline std::uint64_t sparse_grid_size(std::int32_t n, std::int32_t d) {
    if (n < 1) throw std::invalid_argument("sparse level must be >= 1");
    if (d < 2) throw std::invalid_argument("sparse grid needs d >= 2");
    const std::int32_t budget = n + d - 1;
    // count[w]: 1-D nodes whose clamped minimal level is exactly w.
    std::vector<std::uint64_t> axis(static_cast<std::size_t>(budget) + 1, 0);
    for (std::int32_t w = 1; w <= budget; ++w)
        axis[static_cast<std::size_t>(w)] =
            (w == 1) ? 3 : (std::uint64_t{1} << (w - 1));
    // dp[s]: points of the first p directions whose clamped levels sum to s.
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(budget) + 1, 0);
    dp[0] = 1;
    for (std::int32_t p = 0; p < d; ++p) {
        std::vector<std::uint64_t> next(dp.size(), 0);
        for (std::int32_t s = 0; s <= budget; ++s) {
            if (dp[static_cast<std::size_t>(s)] == 0) continue;
            for (std::int32_t w = 1; s + w <= budget; ++w)
                next[static_cast<std::size_t>(s + w)] +=
                    dp[static_cast<std::size_t>(s)] * axis[static_cast<std::size_t>(w)];
        }
        dp.swap(next);
    }
    std::uint64_t total = 0;
    for (auto v : dp) total += v;
    return total;
}

/// Total nodes visited across all combination terms, counting overlaps:
/// the true sampling cost of the combined operator.
inline std::uint64_t nodes_visited(std::int32_t n, std::int32_t d) {
    std::uint64_t total = 0;
    for (const auto& term : combination_terms(n, d)) {
        const std::uint64_t c = point_count(term.index);
        if (total > UINT64_MAX - c) throw std::overflow_error("nodes_visited overflow");
        total += c;
    }
    return total;
}

}  // namespace qmusik
