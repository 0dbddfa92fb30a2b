#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "expalg/rational.hpp"
#include "expalg/variables.hpp"

namespace expalg {

/// Sparse multivariate polynomial over Q with grlex-ordered terms.
/// No zero coefficients are stored; the zero polynomial has no terms.
/// All exponent vectors have the full arity of the alphabet.
class MultiPoly {
  public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    MultiPoly() : alphabet_(Alphabet::empty()) {}
    explicit MultiPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static MultiPoly constant(AlphabetPtr alphabet, Rational c);
    static MultiPoly variable(AlphabetPtr alphabet, size_t index);
    static MultiPoly variable(AlphabetPtr alphabet, std::string_view name);
    static MultiPoly monomial(AlphabetPtr alphabet, Monomial m, Rational c);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the empty monomial).
    Rational constant_value() const;

    /// Total degree; -1 for the zero polynomial.
    long long total_degree() const;
    long long degree_in(size_t var) const;
    bool uses_var(size_t var) const { return degree_in(var) > 0; }

    /// Leading term under grlex.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// Full substitution; point has one value per alphabet variable.
    Rational eval(std::span<const Rational> point) const;
    /// Formal partial derivative.
    MultiPoly derivative(size_t var) const;

    /// Rational content: gcd(numerators)/lcm(denominators); dividing by it
    /// leaves coprime integer coefficients. Zero for the zero polynomial.
    Rational content() const;
    /// this / content(), sign-normalized so the leading coefficient is > 0.
    MultiPoly primitive_part() const;
    /// this / leading_coeff(): grlex-monic.
    MultiPoly monic() const;

    /// Exact division; nullopt unless divisor divides exactly.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

    /// Rewrites over a (super-)alphabet.
    MultiPoly extended_to(const AlphabetPtr& target) const;

    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  private:
    friend class RatFunc;
    void add_term(const Monomial& m, const Rational& c);

    AlphabetPtr alphabet_;
    Terms terms_;
};

/// Unifies two polynomials over the merged alphabet.
std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b);

/// GCD via primitive polynomial remainder sequences, normalized grlex-monic.
/// gcd(0, g) is the monic normalization of g; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// LCM normalized grlex-monic; lcm(0, g) = 0.
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

}  // namespace expalg
