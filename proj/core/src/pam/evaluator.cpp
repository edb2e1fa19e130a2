#include "preach/pam/evaluator.hpp"

#include "preach/error.hpp"

namespace preach::pam {

RatPoint PamEvaluator::approximate(const RatPoint& x, int /*precision*/) const {
    auto y = tryEvalPam(sys_, x);
    if (!y) {
        throw UndefinedError("partial map undefined at " + x.str());
    }
    return std::move(*y);
}

Rational truncateDyadic(const Rational& v, int m) {
    mpz_class scaled;
    mpq_class t = v.raw();
    mpq_class s = t * mpq_class(Rational::pow2(m).raw());
    mpz_fdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return Rational(mpq_class(scaled)) * Rational::pow2(-m);
}

RatPoint DyadicEvaluator::approximate(const RatPoint& x, int precision) const {
    RatPoint y = f_(x);
    for (std::size_t i = 0; i < y.dimension(); ++i) {
        y[i] = truncateDyadic(y[i], precision);
    }
    return y;
}

RatPoint evalApprox(const MapEvaluator& ev, const RatPoint& x, int m) {
    if (m < 0) {
        throw DomainError("evalApprox: precision must be >= 0");
    }
    if (!boxContains(ev.domain(), x)) {
        throw DomainError("point " + x.str() + " outside domain " + ev.domain().str());
    }
    return ev.approximate(x, m);
}

}  // namespace preach::pam
