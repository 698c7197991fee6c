#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmusik {

/// A dyadic rational i / 2^level in [0, 1], stored exactly and kept in
/// lowest terms so that the same point produced by different grids
/// compares equal. Conversion to floating point happens only at kernel
/// evaluation time; i / 2^level is exact in a double for level <= 52.
struct DyadicCoord {
    std::int64_t numerator = 0;
    std::int32_t level = 0;

    DyadicCoord() = default;

    /// Construct i / 2^level and reduce to lowest terms.
    DyadicCoord(std::int64_t i, std::int32_t lev) : numerator(i), level(lev) {
        if (lev < 0 || lev > 62)
            throw std::invalid_argument("dyadic level out of range: " +
                                        std::to_string(lev));
        if (i < 0 || i > (std::int64_t{1} << lev))
            throw std::invalid_argument("dyadic numerator out of [0, 2^level]");
        while (level > 0 && numerator % 2 == 0) {
            numerator /= 2;
            --level;
        }
    }

    double value() const { return std::ldexp(static_cast<double>(numerator), -level); }

    friend bool operator==(const DyadicCoord&, const DyadicCoord&) = default;

    friend std::strong_ordering operator<=>(const DyadicCoord& a,
                                            const DyadicCoord& b) {
        // Compare a.num * 2^(L - a.level) with b.num * 2^(L - b.level);
        // reduced numerators are <= 2^level so the shifts cannot overflow.
        const std::int32_t common = std::max(a.level, b.level);
        const std::int64_t lhs = a.numerator << (common - a.level);
        const std::int64_t rhs = b.numerator << (common - b.level);
        return lhs <=> rhs;
    }
};

/// One node of an anisotropic grid with exactly representable coordinates.
struct GridPoint {
    std::vector<DyadicCoord> coords;

    GridPoint() = default;
    explicit GridPoint(std::vector<DyadicCoord> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }

    std::vector<double> to_doubles() const {
        std::vector<double> out(coords.size());
        for (std::size_t p = 0; p < coords.size(); ++p) out[p] = coords[p].value();
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t p = 0; p < coords.size(); ++p) {
            if (p) s += ", ";
            s += std::to_string(coords[p].numerator) + "/2^" +
                 std::to_string(coords[p].level);
        }
        return s + ")";
    }

    friend bool operator==(const GridPoint&, const GridPoint&) = default;

    friend std::strong_ordering operator<=>(const GridPoint& a,
                                            const GridPoint& b) {
        const std::size_t n = std::min(a.coords.size(), b.coords.size());
        for (std::size_t p = 0; p < n; ++p) {
            const auto c = a.coords[p] <=> b.coords[p];
            if (c != std::strong_ordering::equal) return c;
        }
        return a.coords.size() <=> b.coords.size();
    }
};

struct GridPointHash {
    std::size_t operator()(const GridPoint& p) const {
        std::size_t h = p.coords.size();
        for (const auto& c : p.coords) {
            const std::size_t k =
                static_cast<std::size_t>(c.numerator) * 0x9e3779b97f4a7c15ULL +
                static_cast<std::size_t>(c.level);
            h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace qmusik
