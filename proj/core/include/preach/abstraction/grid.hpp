#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "preach/numerics/geometry.hpp"

namespace preach::abstraction {

/// Flat cell index: axis 0 most significant, so flat order is the
/// lexicographic order of per-axis indices.
using FlatCell = std::uint64_t;

struct CellId {
    std::vector<std::int64_t> index;

    friend bool operator==(const CellId&, const CellId&) = default;
    friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// Uniform grid of closed cells of side 2^-m over a box domain. Along each
/// axis cell i is [lo + i 2^-m, min(lo + (i+1) 2^-m, hi)], so the last cell
/// may be narrower and the grid covers exactly the domain.
class AbstractionGrid {
public:
    AbstractionGrid(RatBox domain, int m);

    const RatBox& domain() const { return domain_; }
    std::size_t dimension() const { return domain_.dimension(); }
    int resolution() const { return m_; }
    const Rational& side() const { return side_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::uint64_t cellCount() const { return total_; }

    FlatCell flatten(const CellId& c) const;
    CellId unflatten(FlatCell f) const;

    RatBox cellBox(FlatCell f) const;
    RatBox cellBox(const CellId& c) const;

    /// Closed cells containing x: one in general, up to 2^d on shared faces.
    /// Sorted. Throws DomainError when x is outside the domain.
    std::vector<FlatCell> cellsContaining(const RatPoint& x) const;

    /// Closed cells meeting the box, after clipping it to the domain. Sorted.
    std::vector<FlatCell> cellsIntersecting(const RatBox& box) const;

    /// Index range [first, last] of cells along `axis` meeting [a, b], or
    /// nullopt when [a, b] misses the domain along that axis.
    std::optional<std::pair<std::int64_t, std::int64_t>> axisRange(std::size_t axis, const Rational& a,
                                                                   const Rational& b) const;

private:
    RatBox domain_;
    int m_;
    Rational side_;
    std::vector<std::int64_t> counts_;
    std::uint64_t total_ = 1;
};

AbstractionGrid makeGrid(const RatBox& domain, int m);

/// Calls fn(flat) for every cell in the per-axis index ranges, in flat order.
template <typename Fn>
void forEachInRanges(const AbstractionGrid& grid, const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges,
                     Fn&& fn) {
    const std::size_t d = ranges.size();
    std::vector<std::int64_t> idx(d);
    for (std::size_t a = 0; a < d; ++a) {
        idx[a] = ranges[a].first;
    }
    while (true) {
        FlatCell flat = 0;
        for (std::size_t a = 0; a < d; ++a) {
            flat = flat * static_cast<FlatCell>(grid.counts()[a]) + static_cast<FlatCell>(idx[a]);
        }
        fn(flat);
        std::size_t a = d;
        while (a > 0) {
            --a;
            if (idx[a] < ranges[a].second) {
                ++idx[a];
                break;
            }
            idx[a] = ranges[a].first;
            if (a == 0) {
                return;
            }
        }
        if (d == 0) {
            return;
        }
    }
}

}  // namespace preach::abstraction
