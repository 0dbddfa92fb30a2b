#include "expalg/ratfunc.hpp"

namespace expalg {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)) {
    den_ = MultiPoly::constant(num_.alphabet(), Rational(1));
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) {
    auto [n, d] = expalg::unify(std::move(num), std::move(den));
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.alphabet(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = num_.divided_exactly_by(g).value();
            den_ = den_.divided_exactly_by(g).value();
        }
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw domain_error("rational function is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

std::pair<RatFunc, RatFunc> unify(const RatFunc& a, const RatFunc& b) {
    if (a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet()) return {a, b};
    AlphabetPtr merged = Alphabet::merge(a.alphabet(), b.alphabet());
    return {a.extended_to(merged), b.extended_to(merged)};
}

RatFunc RatFunc::extended_to(const AlphabetPtr& target) const {
    RatFunc out = *this;
    out.num_ = num_.extended_to(target);
    out.den_ = den_.extended_to(target);
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    auto [x, y] = unify(a, b);
    RatFunc out;
    if (x.den_ == y.den_) {  // includes the common polynomial case den = 1
        out.num_ = x.num_ + y.num_;
        out.den_ = x.den_;
    } else {
        out.num_ = x.num_ * y.den_ + y.num_ * x.den_;
        out.den_ = x.den_ * y.den_;
    }
    out.normalize();
    return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    auto [x, y] = unify(a, b);
    RatFunc out;
    out.num_ = x.num_ * y.num_;
    if (x.is_polynomial() && y.is_polynomial()) {
        out.den_ = MultiPoly::constant(out.num_.alphabet(), x.den_.constant_value() *
                                                                y.den_.constant_value());
    } else {
        out.den_ = x.den_ * y.den_;
    }
    out.normalize();
    return out;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw domain_error("inverse of the zero rational function");
    RatFunc out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc out;
    out.num_ = num_.pow(static_cast<unsigned>(e));
    out.den_ = den_.pow(static_cast<unsigned>(e));
    out.normalize();
    return out;
}

RatFunc RatFunc::scaled(const Rational& c) const {
    RatFunc out = *this;
    out.num_ = num_.scaled(c);
    out.normalize();
    return out;
}

Rational RatFunc::eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw domain_error("evaluation at a pole");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet())
        return a.num_ == b.num_ && a.den_ == b.den_;
    auto [x, y] = unify(a, b);
    return x.num_ == y.num_ && x.den_ == y.den_;
}

}  // namespace expalg
