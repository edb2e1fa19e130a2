#include "preach/pam/pam.hpp"

#include "preach/error.hpp"

namespace preach::pam {

Matrix::Matrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        requireSameDimension(row.size(), rows_.size(), "Matrix (must be square)");
    }
}

Matrix Matrix::identity(std::size_t d) {
    std::vector<Rational> diag(d, Rational(1));
    return diagonal(diag);
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
    std::vector<std::vector<Rational>> rows(diag.size(), std::vector<Rational>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) {
        rows[i][i] = diag[i];
    }
    return Matrix(std::move(rows));
}

RatPoint Matrix::apply(const RatPoint& x) const {
    requireSameDimension(dimension(), x.dimension(), "Matrix::apply");
    std::vector<Rational> out(dimension());
    for (std::size_t r = 0; r < dimension(); ++r) {
        for (std::size_t c = 0; c < dimension(); ++c) {
            if (rows_[r][c].sign() != 0) {
                out[r] += rows_[r][c] * x[c];
            }
        }
    }
    return RatPoint(std::move(out));
}

Rational Matrix::supNorm() const {
    Rational best;
    for (const auto& row : rows_) {
        Rational sum;
        for (const auto& v : row) {
            sum += abs(v);
        }
        best = max(best, sum);
    }
    return best;
}

RatPoint AffinePiece::apply(const RatPoint& x) const {
    RatPoint y = matrix.apply(x);
    for (std::size_t i = 0; i < y.dimension(); ++i) {
        y[i] += offset[i];
    }
    return y;
}

PamSystem::PamSystem(RatBox domain, std::vector<AffinePiece> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
    if (domain_.dimension() == 0) {
        throw DimensionError("PAM domain must have dimension >= 1");
    }
    if (pieces_.empty()) {
        throw DomainError("PAM needs at least one piece");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        const std::string tag = "piece " + std::to_string(i);
        requireSameDimension(p.region.dimension(), dimension(), tag.c_str());
        requireSameDimension(p.matrix.dimension(), dimension(), tag.c_str());
        requireSameDimension(p.offset.dimension(), dimension(), tag.c_str());
        if (!boxContainsBox(domain_, p.region)) {
            throw DomainError(tag + ": region " + p.region.str() + " not inside domain " + domain_.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (interiorsOverlap(pieces_[j].region, p.region)) {
                throw DomainError("regions of pieces " + std::to_string(j) + " and " + std::to_string(i) +
                                  " have overlapping interiors");
            }
        }
        lipschitz_ = max(lipschitz_, p.matrix.supNorm());
    }
}

std::optional<std::size_t> PamSystem::selectPiece(const RatPoint& x) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (boxContains(pieces_[i].region, x)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<RatPoint> tryEvalPam(const PamSystem& sys, const RatPoint& x) {
    const auto piece = sys.selectPiece(x);
    if (!piece) {
        return std::nullopt;
    }
    return sys.pieces()[*piece].apply(x);
}

RatPoint evalPam(const PamSystem& sys, const RatPoint& x) {
    if (!boxContains(sys.domain(), x)) {
        throw DomainError("point " + x.str() + " outside domain " + sys.domain().str());
    }
    auto y = tryEvalPam(sys, x);
    if (!y) {
        throw UndefinedError("partial map undefined at " + x.str());
    }
    if (!boxContains(sys.domain(), *y)) {
        throw EscapeError("image " + y->str() + " of " + x.str() + " escapes domain");
    }
    return std::move(*y);
}

Rational lipschitzConst(const PamSystem& sys) { return sys.lipschitz(); }

RatBox affineImageBox(const Matrix& a, const RatPoint& b, const RatBox& box) {
    const std::size_t d = box.dimension();
    std::vector<Rational> lo(d);
    std::vector<Rational> hi(d);
    for (std::size_t r = 0; r < d; ++r) {
        lo[r] = b[r];
        hi[r] = b[r];
        for (std::size_t c = 0; c < d; ++c) {
            const Rational& v = a(r, c);
            if (v.sign() > 0) {
                lo[r] += v * box.lo()[c];
                hi[r] += v * box.hi()[c];
            } else if (v.sign() < 0) {
                lo[r] += v * box.hi()[c];
                hi[r] += v * box.lo()[c];
            }
        }
    }
    return RatBox(RatPoint(std::move(lo)), RatPoint(std::move(hi)));
}

RatBox imageBox(const AffinePiece& piece, const RatBox& box) {
    if (!boxContainsBox(piece.region, box)) {
        throw DomainError("imageBox: box " + box.str() + " not inside region " + piece.region.str());
    }
    return affineImageBox(piece.matrix, piece.offset, box);
}

}  // namespace preach::pam
