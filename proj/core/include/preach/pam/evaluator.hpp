#pragma once

#include <functional>

#include "preach/pam/pam.hpp"

namespace preach::pam {

/// Finite-precision access to a Lipschitz map f: X -> X.
///
/// approximate(x, m) returns a rational point within sup-distance 2^-m of
/// f(x). Successive refinements must be consistent, which follows from the
/// per-call contract: |f_m - f_m'| <= 2^-m + 2^-m'.
/// Implementations are used concurrently by const reference and must not
/// mutate shared state.
class MapEvaluator {
public:
    virtual ~MapEvaluator() = default;

    virtual const RatBox& domain() const = 0;
    virtual std::size_t dimension() const { return domain().dimension(); }

    /// Declared global Lipschitz bound in the sup-norm.
    virtual Rational lipschitz() const = 0;

    /// Throws UndefinedError where the map is undefined.
    virtual RatPoint approximate(const RatPoint& x, int precision) const = 0;
};

/// Exact backend: a PAM evaluated with rational arithmetic ignores the precision.
class PamEvaluator final : public MapEvaluator {
public:
    explicit PamEvaluator(const PamSystem& sys) : sys_(sys) {}

    const RatBox& domain() const override { return sys_.domain(); }
    Rational lipschitz() const override { return sys_.lipschitz(); }
    RatPoint approximate(const RatPoint& x, int precision) const override;

private:
    const PamSystem& sys_;
};

/// Wraps an exactly computable rational map and truncates every coordinate
/// down to the dyadic lattice 2^-m Z, which realizes the 2^-m contract.
class DyadicEvaluator final : public MapEvaluator {
public:
    using Function = std::function<RatPoint(const RatPoint&)>;

    DyadicEvaluator(RatBox domain, Rational lipschitz, Function f)
        : domain_(std::move(domain)), lipschitz_(std::move(lipschitz)), f_(std::move(f)) {}

    const RatBox& domain() const override { return domain_; }
    Rational lipschitz() const override { return lipschitz_; }
    RatPoint approximate(const RatPoint& x, int precision) const override;

private:
    RatBox domain_;
    Rational lipschitz_;
    Function f_;
};

/// Checked entry point: x must lie in the domain and m >= 0.
RatPoint evalApprox(const MapEvaluator& ev, const RatPoint& x, int m);

/// Floor of v onto the lattice 2^-m Z.
Rational truncateDyadic(const Rational& v, int m);

}  // namespace preach::pam
