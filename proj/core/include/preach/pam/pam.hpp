#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "preach/numerics/geometry.hpp"

namespace preach::pam {

/// Dense d x d rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::vector<std::vector<Rational>> rows);
    static Matrix identity(std::size_t d);
    static Matrix diagonal(const std::vector<Rational>& diag);

    std::size_t dimension() const { return rows_.size(); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    RatPoint apply(const RatPoint& x) const;

    /// Max over rows of the absolute row sum: the operator norm induced by the sup-norm.
    Rational supNorm() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// x -> A x + b on a closed box region.
struct AffinePiece {
    RatBox region;
    Matrix matrix;
    RatPoint offset;

    RatPoint apply(const RatPoint& x) const;

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Piecewise affine map on a rational box domain. Regions must have
/// pairwise-disjoint interiors; on shared faces the lowest-index piece owns
/// the point. The map may be partial (regions need not cover the domain).
class PamSystem {
public:
    PamSystem(RatBox domain, std::vector<AffinePiece> pieces);

    std::size_t dimension() const { return domain_.dimension(); }
    const RatBox& domain() const { return domain_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    /// Cached global Lipschitz bound (max induced sup-norm over pieces).
    const Rational& lipschitz() const { return lipschitz_; }

    /// Lowest-index piece whose closed region contains x.
    std::optional<std::size_t> selectPiece(const RatPoint& x) const;

private:
    RatBox domain_;
    std::vector<AffinePiece> pieces_;
    Rational lipschitz_;
};

/// Exact image of x. Throws DomainError (x outside the domain),
/// UndefinedError (x in no region) or EscapeError (image outside the domain).
RatPoint evalPam(const PamSystem& sys, const RatPoint& x);

/// Image of x without the closure check on the result; nullopt where the map is undefined.
std::optional<RatPoint> tryEvalPam(const PamSystem& sys, const RatPoint& x);

Rational lipschitzConst(const PamSystem& sys);

/// Smallest box containing the affine image of `box`. Exact: each output
/// coordinate is an affine form, extremal at a corner. Requires box inside the region.
RatBox imageBox(const AffinePiece& piece, const RatBox& box);

/// Same computation without the region precondition.
RatBox affineImageBox(const Matrix& a, const RatPoint& b, const RatBox& box);

}  // namespace preach::pam
