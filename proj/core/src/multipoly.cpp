#include "expalg/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace expalg {

MultiPoly MultiPoly::constant(AlphabetPtr alphabet, Rational c) {
    MultiPoly p(std::move(alphabet));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.alphabet_->size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(AlphabetPtr alphabet, size_t index) {
    if (index >= alphabet->size()) throw std::invalid_argument("variable index out of range");
    MultiPoly p(std::move(alphabet));
    Monomial m(p.alphabet_->size(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(AlphabetPtr alphabet, std::string_view name) {
    auto idx = alphabet->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return variable(alphabet, *idx);
}

MultiPoly MultiPoly::monomial(AlphabetPtr alphabet, Monomial m, Rational c) {
    if (m.size() != alphabet->size()) throw std::invalid_argument("monomial arity mismatch");
    MultiPoly p(std::move(alphabet));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const auto& front = *terms_.begin();
    if (total_degree(front.first) == 0) return front.second;
    return Rational(0);
}

long long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long long>(expalg::total_degree(terms_.rbegin()->first));
}

long long MultiPoly::degree_in(size_t var) const {
    long long d = 0;
    for (const auto& [m, c] : terms_)
        if (var < m.size()) d = std::max(d, static_cast<long long>(m[var]));
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b) {
    if (a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet()) return {a, b};
    AlphabetPtr merged = Alphabet::merge(a.alphabet(), b.alphabet());
    return {a.extended_to(merged), b.extended_to(merged)};
}

MultiPoly MultiPoly::extended_to(const AlphabetPtr& target) const {
    if (target == alphabet_ || *target == *alphabet_) return *this;
    MultiPoly out(target);
    for (const auto& [m, c] : terms_) out.terms_.emplace(remap_monomial(m, *alphabet_, *target), c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(alphabet_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = unify(a, b);
    MultiPoly out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = unify(a, b);
    MultiPoly out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = unify(a, b);
    MultiPoly out(x.alphabet_);
    Monomial prod;
    for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
            prod.assign(ma.begin(), ma.end());
            for (size_t i = 0; i < mb.size(); ++i) prod[i] += mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(alphabet_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != alphabet_->size())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) term *= point[i].pow(m[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(size_t var) const {
    if (var >= alphabet_->size()) throw std::invalid_argument("derivative variable out of range");
    MultiPoly out(alphabet_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * Rational(m[var]));
    }
    return out;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coeff().sign() < 0) c = -c;
    return scaled(c.inverse());
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    auto [r0, dd] = unify(*this, d);
    MultiPoly r = r0;
    MultiPoly q(r.alphabet_);
    const Monomial& dl = dd.leading_monomial();
    const Rational& dc = dd.leading_coeff();
    Monomial shift(dl.size(), 0);
    while (!r.is_zero()) {
        const Monomial& rl = r.leading_monomial();
        bool divisible = true;
        for (size_t i = 0; i < rl.size(); ++i) {
            if (rl[i] < dl[i]) {
                divisible = false;
                break;
            }
            shift[i] = rl[i] - dl[i];
        }
        if (!divisible) return std::nullopt;
        Rational qc = r.leading_coeff() / dc;
        q.add_term(shift, qc);
        // r -= qc * shift * dd
        MultiPoly sub(r.alphabet_);
        Monomial prod(dl.size(), 0);
        for (const auto& [m, c] : dd.terms_) {
            for (size_t i = 0; i < m.size(); ++i) prod[i] = m[i] + shift[i];
            sub.terms_.emplace(prod, c * qc);
        }
        r = r - sub;
    }
    return q;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_) return a.terms_ == b.terms_;
    auto [x, y] = unify(a, b);
    return x.terms_ == y.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex-descending: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = expalg::total_degree(m) > 0;
        if (!abs.is_one() || !has_vars) {
            os << abs.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << alphabet_->var(i).name;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD via primitive PRS, recursing on the highest occurring variable.

namespace {

// f as a univariate polynomial in `var` with MultiPoly coefficients.
std::map<std::uint32_t, MultiPoly> as_univariate(const MultiPoly& f, size_t var) {
    std::map<std::uint32_t, MultiPoly> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        std::uint32_t e = rest[var];
        rest[var] = 0;
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, MultiPoly(f.alphabet())).first;
        it->second += MultiPoly::monomial(f.alphabet(), rest, c);
    }
    return out;
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g);

// gcd of the univariate coefficient list (the content w.r.t. `var`).
MultiPoly content_wrt(const MultiPoly& f, size_t var) {
    auto coeffs = as_univariate(f, var);
    MultiPoly acc(f.alphabet());
    for (const auto& [e, c] : coeffs) {
        acc = gcd_rec(acc, c);
        if (!acc.is_zero() && acc.is_constant()) break;  // content will be a unit
    }
    return acc;
}

// Pseudo-remainder of f by g in `var` (lazy variant: multiplies by the
// leading coefficient of g only when a reduction step is taken).
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, size_t var) {
    auto gu = as_univariate(g, var);
    std::uint32_t dg = gu.rbegin()->first;
    const MultiPoly& glc = gu.rbegin()->second;
    MultiPoly x = MultiPoly::variable(f.alphabet(), var);

    MultiPoly r = f;
    while (!r.is_zero()) {
        auto ru = as_univariate(r, var);
        std::uint32_t dr = ru.rbegin()->first;
        if (dr < dg) break;
        const MultiPoly& rlc = ru.rbegin()->second;
        r = r * glc - g * rlc * x.pow(dr - dg);
    }
    return r;
}

// Removes the content w.r.t. var and the rational content.
MultiPoly primitive_wrt(const MultiPoly& f, size_t var) {
    MultiPoly c = content_wrt(f, var);
    MultiPoly pp = f.divided_exactly_by(c).value();
    return pp.primitive_part();
}

// Highest canonical-order variable occurring in f or g, if any.
std::optional<size_t> top_variable(const MultiPoly& f, const MultiPoly& g) {
    size_t n = f.alphabet()->size();
    for (size_t i = n; i-- > 0;) {
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) return i;
    }
    return std::nullopt;
}

// Both arguments integer-primitive (or zero); returns a primitive gcd.
MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto var = top_variable(f, g);
    if (!var) return MultiPoly::constant(f.alphabet(), Rational(1));
    size_t x = *var;
    if (f.degree_in(x) == 0) return gcd_rec(f, content_wrt(g, x));
    if (g.degree_in(x) == 0) return gcd_rec(g, content_wrt(f, x));

    MultiPoly cf = content_wrt(f, x);
    MultiPoly cg = content_wrt(g, x);
    MultiPoly c = gcd_rec(cf, cg);
    MultiPoly a = f.divided_exactly_by(cf).value();
    MultiPoly b = g.divided_exactly_by(cg).value();

    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    for (;;) {
        MultiPoly r = prem(a, b, x);
        if (r.is_zero()) return (c * b).primitive_part();
        if (r.degree_in(x) == 0) return c.primitive_part();
        a = std::move(b);
        b = primitive_wrt(r, x);
    }
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    auto [f, g] = unify(a, b);
    if (f.is_zero() && g.is_zero()) return f;
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    return gcd_rec(f.primitive_part(), g.primitive_part()).monic();
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(Alphabet::merge(a.alphabet(), b.alphabet()));
    MultiPoly g = poly_gcd(a, b);
    MultiPoly q = a.divided_exactly_by(g).value();
    return (q * b).monic();
}

}  // namespace expalg
