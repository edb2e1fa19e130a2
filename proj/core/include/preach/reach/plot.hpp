#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "preach/abstraction/graph.hpp"

namespace preach::reach {

struct OverApprox {
    abstraction::AbstractionGrid grid;
    /// Sorted flat indices of the cells reachable in G_m from the cells of x.
    std::vector<abstraction::FlatCell> cells;
};

/// Superset of the cells met by the closure of the orbit of x.
OverApprox reachOverApprox(const pam::PamSystem& sys, const RatPoint& x, int m);

/// Bits on the lattice 2^-n Z (or Z^2) covering the projected domain.
/// Bit z is 1 iff the open ball B(z/2^n, 2^-n) meets a cell of the
/// over-approximation at m = n+2 projected on the chosen axes. A 1 is
/// therefore forced whenever the ball meets the reach set, and a 0 whenever
/// the ball of radius 2 * 2^-n misses the over-approximation.
struct PixelGrid {
    int n = 0;
    std::size_t xAxis = 0;
    std::optional<std::size_t> yAxis;
    std::int64_t x0 = 0, x1 = 0;
    std::int64_t y0 = 0, y1 = 0;
    /// Row-major, rows by increasing y.
    std::vector<std::uint8_t> bits;

    std::size_t width() const { return static_cast<std::size_t>(x1 - x0 + 1); }
    std::size_t height() const { return static_cast<std::size_t>(y1 - y0 + 1); }
    bool at(std::int64_t zx, std::int64_t zy = 0) const {
        return bits[static_cast<std::size_t>(zy - y0) * width() + static_cast<std::size_t>(zx - x0)] != 0;
    }
};

PixelGrid plotPixels(const pam::PamSystem& sys, const RatPoint& x, int n, std::size_t xAxis,
                     std::optional<std::size_t> yAxis = std::nullopt);

/// Lattice points z whose open ball of radius 2^-n meets [a, b].
std::pair<std::int64_t, std::int64_t> pixelSpan(const Rational& a, const Rational& b, int n);

}  // namespace preach::reach
