#include "preach/abstraction/grid.hpp"

#include <algorithm>
#include <limits>

#include "preach/error.hpp"

namespace preach::abstraction {

AbstractionGrid::AbstractionGrid(RatBox domain, int m) : domain_(std::move(domain)), m_(m), side_(Rational::pow2(-m)) {
    if (m < 0) {
        throw DomainError("grid resolution must be nonnegative");
    }
    constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 40;
    for (std::size_t a = 0; a < dimension(); ++a) {
        const Rational w = domain_.width(a);
        if (w.sign() <= 0) {
            throw DomainError("grid domain is degenerate along axis " + std::to_string(a));
        }
        const std::int64_t c = (w / side_).ceil();
        counts_.push_back(c);
        if (static_cast<std::uint64_t>(c) > kMaxCells / total_) {
            throw DomainError("grid at resolution " + std::to_string(m) + " has too many cells");
        }
        total_ *= static_cast<std::uint64_t>(c);
    }
}

FlatCell AbstractionGrid::flatten(const CellId& c) const {
    requireSameDimension(c.index.size(), dimension(), "cell id");
    FlatCell flat = 0;
    for (std::size_t a = 0; a < dimension(); ++a) {
        if (c.index[a] < 0 || c.index[a] >= counts_[a]) {
            throw DomainError("cell index out of range on axis " + std::to_string(a));
        }
        flat = flat * static_cast<FlatCell>(counts_[a]) + static_cast<FlatCell>(c.index[a]);
    }
    return flat;
}

CellId AbstractionGrid::unflatten(FlatCell f) const {
    CellId c{std::vector<std::int64_t>(dimension())};
    for (std::size_t a = dimension(); a-- > 0;) {
        const auto n = static_cast<FlatCell>(counts_[a]);
        c.index[a] = static_cast<std::int64_t>(f % n);
        f /= n;
    }
    return c;
}

RatBox AbstractionGrid::cellBox(const CellId& c) const {
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    for (std::size_t a = 0; a < dimension(); ++a) {
        const Rational start = domain_.lo()[a] + Rational(c.index[a]) * side_;
        lo.push_back(start);
        hi.push_back(min(start + side_, domain_.hi()[a]));
    }
    return RatBox(RatPoint(std::move(lo)), RatPoint(std::move(hi)));
}

RatBox AbstractionGrid::cellBox(FlatCell f) const { return cellBox(unflatten(f)); }

std::optional<std::pair<std::int64_t, std::int64_t>> AbstractionGrid::axisRange(std::size_t axis, const Rational& a,
                                                                                const Rational& b) const {
    const Rational& lo = domain_.lo()[axis];
    const Rational& hi = domain_.hi()[axis];
    if (a > b || a > hi || b < lo) {
        return std::nullopt;
    }
    const Rational scale = Rational::pow2(m_);
    const std::int64_t last = counts_[axis] - 1;
    const std::int64_t first = std::max<std::int64_t>(0, ((max(a, lo) - lo) * scale).ceil() - 1);
    const std::int64_t upto = std::min<std::int64_t>(last, ((min(b, hi) - lo) * scale).floor());
    return std::make_pair(first, upto);
}

std::vector<FlatCell> AbstractionGrid::cellsContaining(const RatPoint& x) const {
    requireSameDimension(x.dimension(), dimension(), "point");
    if (!boxContains(domain_, x)) {
        throw DomainError("point " + x.str() + " outside the grid domain " + domain_.str());
    }
    return cellsIntersecting(RatBox::point(x));
}

std::vector<FlatCell> AbstractionGrid::cellsIntersecting(const RatBox& box) const {
    requireSameDimension(box.dimension(), dimension(), "box");
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (std::size_t a = 0; a < dimension(); ++a) {
        const auto r = axisRange(a, box.lo()[a], box.hi()[a]);
        if (!r) {
            return {};
        }
        ranges.push_back(*r);
    }
    std::vector<FlatCell> out;
    forEachInRanges(*this, ranges, [&out](FlatCell f) { out.push_back(f); });
    return out;
}

AbstractionGrid makeGrid(const RatBox& domain, int m) { return AbstractionGrid(domain, m); }

}  // namespace preach::abstraction
