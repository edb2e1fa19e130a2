#include "preach/reach/plot.hpp"

#include <algorithm>

#include "preach/error.hpp"
#include "preach/reach/search.hpp"

namespace preach::reach {

OverApprox reachOverApprox(const pam::PamSystem& sys, const RatPoint& x, int m) {
    const abstraction::AbstractionGraph g(sys, m);
    const auto sources = g.grid().cellsContaining(x);
    return {g.grid(), graphReachBFS(g, sources)};
}

std::pair<std::int64_t, std::int64_t> pixelSpan(const Rational& a, const Rational& b, int n) {
    // (z-1)/2^n < b and (z+1)/2^n > a.
    const Rational scale = Rational::pow2(n);
    return {(a * scale).floor(), (b * scale).ceil()};
}

PixelGrid plotPixels(const pam::PamSystem& sys, const RatPoint& x, int n, std::size_t xAxis,
                     std::optional<std::size_t> yAxis) {
    if (n < 0) {
        throw DomainError("plot resolution must be nonnegative");
    }
    if (xAxis >= sys.dimension() || (yAxis && (*yAxis >= sys.dimension() || *yAxis == xAxis))) {
        throw DomainError("invalid plot axes");
    }
    const OverApprox over = reachOverApprox(sys, x, n + 2);
    const Rational scale = Rational::pow2(n);
    const RatBox& dom = sys.domain();

    PixelGrid px;
    px.n = n;
    px.xAxis = xAxis;
    px.yAxis = yAxis;
    px.x0 = (dom.lo()[xAxis] * scale).floor();
    px.x1 = (dom.hi()[xAxis] * scale).ceil();
    if (yAxis) {
        px.y0 = (dom.lo()[*yAxis] * scale).floor();
        px.y1 = (dom.hi()[*yAxis] * scale).ceil();
    }
    px.bits.assign(px.width() * px.height(), 0);

    for (auto f : over.cells) {
        const RatBox cell = over.grid.cellBox(f);
        auto [ax, bx] = pixelSpan(cell.lo()[xAxis], cell.hi()[xAxis], n);
        std::int64_t ay = 0;
        std::int64_t by = 0;
        if (yAxis) {
            std::tie(ay, by) = pixelSpan(cell.lo()[*yAxis], cell.hi()[*yAxis], n);
        }
        ax = std::max(ax, px.x0);
        bx = std::min(bx, px.x1);
        ay = std::max(ay, px.y0);
        by = std::min(by, px.y1);
        for (std::int64_t zy = ay; zy <= by; ++zy) {
            for (std::int64_t zx = ax; zx <= bx; ++zx) {
                px.bits[static_cast<std::size_t>(zy - px.y0) * px.width() + static_cast<std::size_t>(zx - px.x0)] = 1;
            }
        }
    }
    return px;
}

}  // namespace preach::reach
