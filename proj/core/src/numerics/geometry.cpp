#include "preach/numerics/geometry.hpp"

#include "preach/error.hpp"

namespace preach {

void requireSameDimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

RatPoint RatPoint::parse(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        std::string_view item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        coords.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return RatPoint(std::move(coords));
}

std::string RatPoint::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += coords_[i].str();
    }
    return out + ")";
}

RatBox::RatBox(RatPoint lo, RatPoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    requireSameDimension(lo_.dimension(), hi_.dimension(), "RatBox");
    for (std::size_t i = 0; i < lo_.dimension(); ++i) {
        if (hi_[i] < lo_[i]) {
            throw DomainError("RatBox: lo > hi on axis " + std::to_string(i));
        }
    }
}

RatBox RatBox::ball(const RatPoint& center, const Rational& radius) {
    if (radius.sign() < 0) {
        throw DomainError("negative ball radius");
    }
    return RatBox::point(center).inflated(radius);
}

RatPoint RatBox::center() const {
    std::vector<Rational> c;
    c.reserve(dimension());
    const Rational half(1, 2);
    for (std::size_t i = 0; i < dimension(); ++i) {
        c.push_back((lo_[i] + hi_[i]) * half);
    }
    return RatPoint(std::move(c));
}

bool RatBox::isDegenerate() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (lo_[i] == hi_[i]) {
            return true;
        }
    }
    return false;
}

RatBox RatBox::inflated(const Rational& r) const {
    RatPoint lo = lo_;
    RatPoint hi = hi_;
    for (std::size_t i = 0; i < dimension(); ++i) {
        lo[i] -= r;
        hi[i] += r;
    }
    return RatBox(std::move(lo), std::move(hi));
}

std::string RatBox::str() const {
    std::string out;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (i) {
            out += "x";
        }
        out += "[" + lo_[i].str() + "," + hi_[i].str() + "]";
    }
    return out;
}

Rational supDist(const RatPoint& p, const RatPoint& q) {
    requireSameDimension(p.dimension(), q.dimension(), "supDist");
    Rational best;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        const Rational d = abs(p[i] - q[i]);
        if (best < d) {
            best = d;
        }
    }
    return best;
}

bool boxIntersects(const RatBox& a, const RatBox& b) {
    requireSameDimension(a.dimension(), b.dimension(), "boxIntersects");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (min(a.hi()[i], b.hi()[i]) < max(a.lo()[i], b.lo()[i])) {
            return false;
        }
    }
    return true;
}

bool interiorsOverlap(const RatBox& a, const RatBox& b) {
    requireSameDimension(a.dimension(), b.dimension(), "interiorsOverlap");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (!(max(a.lo()[i], b.lo()[i]) < min(a.hi()[i], b.hi()[i]))) {
            return false;
        }
    }
    return true;
}

bool boxContains(const RatBox& b, const RatPoint& p) {
    requireSameDimension(b.dimension(), p.dimension(), "boxContains");
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        if (p[i] < b.lo()[i] || b.hi()[i] < p[i]) {
            return false;
        }
    }
    return true;
}

bool boxContainsBox(const RatBox& outer, const RatBox& inner) {
    return boxContains(outer, inner.lo()) && boxContains(outer, inner.hi());
}

RatBox boxIntersection(const RatBox& a, const RatBox& b) {
    requireSameDimension(a.dimension(), b.dimension(), "boxIntersection");
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        lo.push_back(max(a.lo()[i], b.lo()[i]));
        hi.push_back(min(a.hi()[i], b.hi()[i]));
    }
    return RatBox(RatPoint(std::move(lo)), RatPoint(std::move(hi)));
}

}  // namespace preach
