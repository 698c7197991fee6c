#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmusik {

/// Per-direction refinement levels l = (l_1, ..., l_d); every component is
/// >= 1 and direction p carries mesh width 2^{-l_p}.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<std::int32_t> levels)
        : levels_(std::move(levels)) {
        if (levels_.empty())
            throw std::invalid_argument("multi-index must have dimension >= 1");
        for (auto l : levels_)
            if (l < 1)
                throw std::invalid_argument(
                    "multi-index components must be >= 1, got " +
                    std::to_string(l));
    }

    MultiIndex(std::initializer_list<std::int32_t> levels)
        : MultiIndex(std::vector<std::int32_t>(levels)) {}

    /// Isotropic index (n, ..., n) in d dimensions.
    static MultiIndex uniform(std::int32_t n, std::int32_t d) {
        return MultiIndex(std::vector<std::int32_t>(static_cast<std::size_t>(d), n));
    }

    std::int32_t dim() const { return static_cast<std::int32_t>(levels_.size()); }
    std::int32_t operator[](std::size_t p) const { return levels_[p]; }

    /// |l|_1 = l_1 + ... + l_d.
    std::int64_t level_sum() const {
        return std::accumulate(levels_.begin(), levels_.end(), std::int64_t{0});
    }

    const std::vector<std::int32_t>& levels() const { return levels_; }
    auto begin() const { return levels_.begin(); }
    auto end() const { return levels_.end(); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t p = 0; p < levels_.size(); ++p) {
            if (p) s += ",";
            s += std::to_string(levels_[p]);
        }
        return s + ")";
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.levels_ <=> b.levels_;
    }

  private:
    std::vector<std::int32_t> levels_;
};

/// Binomial coefficient for the small arguments used by the combination
/// technique; exact in 64 bits for everything reachable here.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        result = result * static_cast<std::uint64_t>(n - k + j) /
                 static_cast<std::uint64_t>(j);
    }
    return result;
}

/// All multi-indices with components >= 1 and |l|_1 = sum, in lexicographic
/// order. There are binomial(sum-1, d-1) of them.
inline std::vector<MultiIndex> enumerate_level_indices(std::int64_t sum,
                                                       std::int32_t d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (sum < d)
        throw std::invalid_argument("no multi-indices with positive parts: |l|_1 = " +
                                    std::to_string(sum) + " < d = " +
                                    std::to_string(d));
    std::vector<MultiIndex> out;
    out.reserve(binomial(sum - 1, d - 1));
    std::vector<std::int32_t> current(static_cast<std::size_t>(d), 1);
    // Walk compositions in lexicographic order with a manual stack over the
    // first d-1 positions; the last component absorbs the remainder.
    const auto fill_tail = [&](std::int32_t from, std::int64_t remaining) {
        for (std::int32_t p = from; p < d - 1; ++p) {
            current[static_cast<std::size_t>(p)] = 1;
            remaining -= 1;
        }
        current[static_cast<std::size_t>(d - 1)] =
            static_cast<std::int32_t>(remaining);
    };
    fill_tail(0, sum);
    while (true) {
        out.emplace_back(current);
        // Find the rightmost position (excluding the last) that can still grow.
        std::int32_t p = d - 2;
        while (p >= 0) {
            std::int64_t tail = 0;
            for (std::int32_t r = p + 1; r < d; ++r)
                tail += current[static_cast<std::size_t>(r)];
            if (tail > d - 1 - p) break;  // room to shift one unit left
            --p;
        }
        if (p < 0) break;
        current[static_cast<std::size_t>(p)] += 1;
        std::int64_t remaining = sum;
        for (std::int32_t r = 0; r <= p; ++r)
            remaining -= current[static_cast<std::size_t>(r)];
        fill_tail(p + 1, remaining);
    }
    return out;
}

/// One term of the combination technique: subgrid index and its signed
/// integer coefficient (-1)^q * binomial(d-1, q).
struct CombinationTerm {
    MultiIndex index;
    std::int64_t coefficient;
};

/// Combination-technique terms for sparse level n in d dimensions: for each
/// q = 0..d-1 with a non-empty index set, every l with |l|_1 = n + (d-1) - q
/// carries coefficient (-1)^q * binomial(d-1, q). Ordered by ascending q,
/// lexicographic within a q block.
inline std::vector<CombinationTerm> combination_terms(std::int32_t n,
                                                      std::int32_t d) {
    if (n < 1) throw std::invalid_argument("sparse level must be >= 1");
    if (d < 2) throw std::invalid_argument("combination technique needs d >= 2");
    std::vector<CombinationTerm> terms;
    for (std::int32_t q = 0; q < d; ++q) {
        const std::int64_t sum = n + (d - 1) - q;
        if (sum < d) continue;  // empty index set, e.g. |l|_1 = 1 in 2-D
        const std::int64_t coeff =
            (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(binomial(d - 1, q));
        for (auto& l : enumerate_level_indices(sum, d))
            terms.push_back(CombinationTerm{std::move(l), coeff});
    }
    return terms;
}

}  // namespace qmusik
