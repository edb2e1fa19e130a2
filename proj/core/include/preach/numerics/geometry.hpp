#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "preach/numerics/rational.hpp"

namespace preach {

/// A point of Q^d.
class RatPoint {
public:
    RatPoint() = default;
    explicit RatPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RatPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// Parses a comma-separated list of rational literals, e.g. "1/2,0".
    static RatPoint parse(std::string_view text);

    std::size_t dimension() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    std::string str() const;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;

private:
    std::vector<Rational> coords_;
};

/// Closed axis-aligned box prod [lo_i, hi_i]. Degenerate sides are allowed.
/// The closed sup-norm ball of radius r around c is exactly the box [c - r, c + r].
class RatBox {
public:
    RatBox() = default;
    RatBox(RatPoint lo, RatPoint hi);

    static RatBox point(const RatPoint& p) { return RatBox(p, p); }
    static RatBox ball(const RatPoint& center, const Rational& radius);

    std::size_t dimension() const { return lo_.dimension(); }
    const RatPoint& lo() const { return lo_; }
    const RatPoint& hi() const { return hi_; }

    RatPoint center() const;
    Rational width(std::size_t axis) const { return hi_[axis] - lo_[axis]; }
    bool isDegenerate() const;

    /// Box grown by r on every side.
    RatBox inflated(const Rational& r) const;

    std::string str() const;

    friend bool operator==(const RatBox&, const RatBox&) = default;

private:
    RatPoint lo_;
    RatPoint hi_;
};

Rational supDist(const RatPoint& p, const RatPoint& q);

/// Closed-box semantics: boxes sharing only a face or a corner intersect.
bool boxIntersects(const RatBox& a, const RatBox& b);
bool boxContains(const RatBox& b, const RatPoint& p);
bool boxContainsBox(const RatBox& outer, const RatBox& inner);

/// Intersection of two boxes; nullopt-free variant, caller checks boxIntersects first.
RatBox boxIntersection(const RatBox& a, const RatBox& b);

/// Intersection of the interiors is nonempty (positive-volume overlap).
bool interiorsOverlap(const RatBox& a, const RatBox& b);

void requireSameDimension(std::size_t a, std::size_t b, const char* what);

}  // namespace preach
