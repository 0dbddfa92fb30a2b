#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace expalg {

using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Thrown on mathematical domain violations (division by zero, pole
/// evaluation, exp of a non-ideal series, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational in canonical lowest terms.
/// Invariants: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(unchecked(), -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return num_ > 0 ? Rational(unchecked(), den_, num_) : Rational(unchecked(), -den_, -num_);
    }

    /// Exact integer power; negative exponents invert (error on zero base).
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc(1);
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

  private:
    struct unchecked {};
    Rational(unchecked, Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        Integer g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    void normalize() {
        if (den_.is_zero()) throw domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    Integer num_;
    Integer den_;
};

/// gcd for rationals: the positive generator of the fractional ideal
/// (a, b), i.e. gcd(na, nb)/lcm(da, db). gcd(0, 0) = 0.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) return Rational(0);
    return Rational(gcd(a.num(), b.num()), lcm(a.den(), b.den()));
}

}  // namespace expalg
