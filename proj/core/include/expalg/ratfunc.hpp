#pragma once

#include "expalg/multipoly.hpp"

namespace expalg {

/// Canonical rational function over Q: num/den with gcd(num, den) = 1 and
/// den grlex-monic, so structural equality is mathematical equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_(MultiPoly::constant(Alphabet::empty(), Rational(1))) {}
    RatFunc(MultiPoly num, MultiPoly den);
    /* implicit */ RatFunc(MultiPoly num);
    RatFunc(AlphabetPtr alphabet, Rational c)
        : RatFunc(MultiPoly::constant(std::move(alphabet), std::move(c))) {}

    static RatFunc variable(AlphabetPtr alphabet, std::string_view name) {
        return RatFunc(MultiPoly::variable(std::move(alphabet), name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const AlphabetPtr& alphabet() const { return num_.alphabet(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const;
    RatFunc pow(long long e) const;
    RatFunc scaled(const Rational& c) const;

    /// Exact evaluation; throws domain_error at a pole.
    Rational eval(std::span<const Rational> point) const;

    RatFunc extended_to(const AlphabetPtr& target) const;
    bool uses_var(size_t index) const { return num_.uses_var(index) || den_.uses_var(index); }

    /// Combined size heuristic used for pivot selection.
    size_t term_count() const { return num_.term_count() + den_.term_count(); }

    std::string str() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b);

  private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

std::pair<RatFunc, RatFunc> unify(const RatFunc& a, const RatFunc& b);

}  // namespace expalg
