#include "preach/numerics/rational.hpp"

#include <cctype>
#include <ostream>

#include "preach/error.hpp"

namespace preach {

namespace {

bool isDecimalInteger(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::int64_t toInt64(const mpz_class& z) {
    if (!z.fits_slong_p()) {
        throw DomainError("integer part does not fit in 64 bits");
    }
    return z.get_si();
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!isDecimalInteger(num) || den.empty() || den.front() == '-' || !isDecimalInteger(den)) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::pow2(long exponent) {
    mpz_class p = 1;
    const unsigned long magnitude = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
    if (exponent >= 0) {
        return Rational(mpq_class(p));
    }
    return Rational(mpq_class(mpz_class(1), p));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return toInt64(q);
}

std::int64_t Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return toInt64(q);
}

bool Rational::isInteger() const { return value_.get_den() == 1; }

std::size_t Rational::bitLength() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational& Rational::operator/=(const Rational& o) {
    if (sgn(o.value_) == 0) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace preach
