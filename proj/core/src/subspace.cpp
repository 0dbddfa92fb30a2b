#include "expalg/subspace.hpp"

#include <algorithm>
#include <set>

namespace expalg {

CoefficientField CoefficientField::rationals_with(std::vector<std::string> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return {std::move(vs)};
}

bool CoefficientField::contains_var(std::string_view name) const {
    return std::find(vars.begin(), vars.end(), name) != vars.end();
}

std::string CoefficientField::str() const {
    if (vars.empty()) return "Q";
    std::string s = "Q(";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    return s + ")";
}

RatFunc FlatteningContext::reconstruct(const std::vector<RatFunc>& coords) const {
    RatFunc acc(alphabet, Rational(0));
    for (size_t j = 0; j < support.size() && j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        acc += coords[j] * RatFunc(MultiPoly::monomial(alphabet, support[j], Rational(1)));
    }
    return acc / RatFunc(denominator);
}

FlattenResult flatten(const std::vector<RatFunc>& elements, const CoefficientField& field) {
    // unified alphabet: element variables plus the coefficient-field variables
    std::vector<Variable> field_vars;
    for (const auto& v : field.vars) field_vars.push_back({v, VarKind::power});
    AlphabetPtr alphabet = Alphabet::make(field_vars);
    for (const auto& e : elements) alphabet = Alphabet::merge(alphabet, e.alphabet());
    for (const auto& v : field.vars) {
        if (alphabet->var(*alphabet->index_of(v)).kind == VarKind::series)
            throw domain_error("series variable '" + v + "' cannot be a coefficient variable");
    }

    FlatteningContext ctx;
    ctx.field = field;
    ctx.alphabet = alphabet;
    for (size_t i = 0; i < alphabet->size(); ++i) {
        if (field.contains_var(alphabet->var(i).name))
            ctx.coeff_vars.push_back(i);
        else
            ctx.residual_vars.push_back(i);
    }

    // common denominator (monic by poly_lcm)
    MultiPoly d = MultiPoly::constant(alphabet, Rational(1));
    for (const auto& e : elements)
        if (!e.is_zero()) d = poly_lcm(d, e.den().extended_to(alphabet));
    ctx.denominator = d;

    // numerators n_i = e_i * d, split into residual monomial -> coefficient
    struct SplitTerm {
        Monomial residual;
        Monomial coeff;
    };
    auto split = [&](const Monomial& m) {
        SplitTerm st{Monomial(alphabet->size(), 0), Monomial(alphabet->size(), 0)};
        for (size_t i : ctx.residual_vars) st.residual[i] = m[i];
        for (size_t i : ctx.coeff_vars) st.coeff[i] = m[i];
        return st;
    };

    std::set<Monomial, GrlexLess> support_set;
    std::vector<std::map<Monomial, MultiPoly, GrlexLess>> rows;
    rows.reserve(elements.size());
    for (const auto& e : elements) {
        std::map<Monomial, MultiPoly, GrlexLess> row;
        if (!e.is_zero()) {
            MultiPoly n =
                e.num().extended_to(alphabet) * d.divided_exactly_by(e.den().extended_to(alphabet)).value();
            for (const auto& [m, c] : n.terms()) {
                auto st = split(m);
                auto it = row.find(st.residual);
                if (it == row.end()) it = row.emplace(st.residual, MultiPoly(alphabet)).first;
                it->second += MultiPoly::monomial(alphabet, st.coeff, c);
                support_set.insert(st.residual);
            }
        }
        rows.push_back(std::move(row));
    }

    ctx.support.assign(support_set.rbegin(), support_set.rend());  // grlex-descending

    Matrix<RatFunc> coords(elements.size(), ctx.support.size(), RatFunc(alphabet, Rational(0)));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < ctx.support.size(); ++j) {
            auto it = rows[i].find(ctx.support[j]);
            if (it != rows[i].end()) coords.at(i, j) = RatFunc(it->second);
        }
    }
    return {std::move(ctx), std::move(coords)};
}

namespace {

Matrix<Rational> to_rational_matrix(const Matrix<RatFunc>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).constant_value();
    return out;
}

Matrix<RatFunc> to_ratfunc_matrix(const Matrix<Rational>& m, const AlphabetPtr& alphabet) {
    Matrix<RatFunc> out(m.rows(), m.cols(), RatFunc(alphabet, Rational(0)));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = RatFunc(alphabet, m.at(i, j));
    return out;
}

// RREF over the stated coefficient field; plain-Q coordinates take the
// Rational fast path.
Matrix<RatFunc> coord_rref(const Matrix<RatFunc>& m, const CoefficientField& field,
                           const AlphabetPtr& alphabet, size_t* rank_out) {
    if (field.is_plain_rationals()) {
        auto ech = reduced_row_echelon(to_rational_matrix(m));
        if (rank_out) *rank_out = ech.rank;
        return to_ratfunc_matrix(ech.mat, alphabet);
    }
    auto ech = reduced_row_echelon(m);
    if (rank_out) *rank_out = ech.rank;
    return std::move(ech.mat);
}

}  // namespace

size_t coord_rank(const Matrix<RatFunc>& m, const CoefficientField& field) {
    if (field.is_plain_rationals()) return rank(to_rational_matrix(m));
    return rank(m);
}

size_t ldim(const CoefficientField& field, const std::vector<RatFunc>& x,
            const std::vector<RatFunc>& y) {
    std::vector<RatFunc> all = x;
    all.insert(all.end(), y.begin(), y.end());
    FlattenResult fr = flatten(all, field);
    size_t rank_all = coord_rank(fr.coords, field);
    if (y.empty()) return rank_all;
    Matrix<RatFunc> ymat(y.size(), fr.coords.cols(), RatFunc(fr.ctx.alphabet, Rational(0)));
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = 0; j < fr.coords.cols(); ++j) ymat.at(i, j) = fr.coords.at(x.size() + i, j);
    return rank_all - coord_rank(ymat, field);
}

SubspaceBasis SubspaceBasis::span(const CoefficientField& field,
                                  const std::vector<RatFunc>& gens) {
    FlattenResult fr = flatten(gens, field);
    size_t rk = 0;
    Matrix<RatFunc> rref = coord_rref(fr.coords, field, fr.ctx.alphabet, &rk);
    SubspaceBasis out;
    out.ctx_ = fr.ctx;
    out.basis_ = Matrix<RatFunc>(rk, rref.cols(), RatFunc(fr.ctx.alphabet, Rational(0)));
    for (size_t i = 0; i < rk; ++i)
        for (size_t j = 0; j < rref.cols(); ++j) out.basis_.at(i, j) = rref.at(i, j);
    for (size_t i = 0; i < rk; ++i) out.elements_.push_back(fr.ctx.reconstruct(out.basis_.row(i)));
    return out;
}

SubspaceBasis SubspaceBasis::scaled(const RatFunc& c) const {
    std::vector<RatFunc> gens;
    gens.reserve(elements_.size());
    for (const auto& e : elements_) gens.push_back(e * c);
    return span(ctx_.field, gens);
}

namespace {

void require_same_field(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("subspace operation across different coefficient fields");
}

}  // namespace

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_field(a, b);
    const CoefficientField& field = a.field();
    // shared context for both bases
    std::vector<RatFunc> all = a.elements();
    all.insert(all.end(), b.elements().begin(), b.elements().end());
    FlattenResult fr = flatten(all, field);
    size_t na = a.dim(), nb = b.dim(), s = fr.coords.cols();

    // Zassenhaus block [A A; B 0]; rows ending with a zero left half span the
    // intersection in the right half.
    Matrix<RatFunc> z(na + nb, 2 * s, RatFunc(fr.ctx.alphabet, Rational(0)));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < s; ++j) {
            z.at(i, j) = fr.coords.at(i, j);
            z.at(i, s + j) = fr.coords.at(i, j);
        }
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < s; ++j) z.at(na + i, j) = fr.coords.at(na + i, j);

    size_t zrank = 0;
    Matrix<RatFunc> ech = coord_rref(z, field, fr.ctx.alphabet, &zrank);

    std::vector<RatFunc> gens;
    for (size_t i = 0; i < zrank; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < s && left_zero; ++j) left_zero = ech.at(i, j).is_zero();
        if (!left_zero) continue;
        std::vector<RatFunc> coords;
        coords.reserve(s);
        for (size_t j = 0; j < s; ++j) coords.push_back(ech.at(i, s + j));
        gens.push_back(fr.ctx.reconstruct(coords));
    }
    return SubspaceBasis::span(field, gens);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_field(a, b);
    std::vector<RatFunc> gens = a.elements();
    gens.insert(gens.end(), b.elements().begin(), b.elements().end());
    return SubspaceBasis::span(a.field(), gens);
}

bool member(const RatFunc& element, const SubspaceBasis& a) {
    std::vector<RatFunc> with = a.elements();
    with.push_back(element);
    return ldim(a.field(), with) == a.dim();
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_field(a, b);
    if (a.dim() != b.dim()) return false;
    std::vector<RatFunc> all = a.elements();
    all.insert(all.end(), b.elements().begin(), b.elements().end());
    FlattenResult fr = flatten(all, a.field());
    size_t na = a.dim(), nb = b.dim(), s = fr.coords.cols();
    Matrix<RatFunc> ma(na, s, RatFunc(fr.ctx.alphabet, Rational(0)));
    Matrix<RatFunc> mb(nb, s, RatFunc(fr.ctx.alphabet, Rational(0)));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < s; ++j) ma.at(i, j) = fr.coords.at(i, j);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < s; ++j) mb.at(i, j) = fr.coords.at(na + i, j);
    return coord_rref(ma, a.field(), fr.ctx.alphabet, nullptr) ==
           coord_rref(mb, a.field(), fr.ctx.alphabet, nullptr);
}

// ---------------------------------------------------------------------------
// Linear disjointness

namespace {

std::set<std::string> used_variables(const std::vector<RatFunc>& gens) {
    std::set<std::string> out;
    for (const auto& g : gens) {
        const auto& alphabet = *g.alphabet();
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (g.uses_var(i)) out.insert(alphabet.var(i).name);
    }
    return out;
}

// a generator that is literally a single variable (num = 1 * var, den = 1)
std::optional<std::string> as_plain_variable(const RatFunc& g) {
    if (!g.is_polynomial() || g.num().term_count() != 1) return std::nullopt;
    const auto& [m, c] = *g.num().terms().begin();
    if (!c.is_one() || total_degree(m) != 1) return std::nullopt;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] == 1) return g.alphabet()->var(i).name;
    return std::nullopt;
}

// random element of Q(gens): a small polynomial in the generators, with an
// occasional generator-polynomial denominator
RatFunc random_field_element(Rng& rng, const std::vector<RatFunc>& gens) {
    RatFunc acc(gens.front().alphabet(), rng.small_rational(2));
    size_t picks = 1 + rng.below(2);
    for (size_t i = 0; i < picks; ++i) {
        RatFunc term = gens[rng.below(gens.size())].scaled(rng.small_nonzero_rational(3));
        if (rng.chance(30)) term = term * gens[rng.below(gens.size())];
        acc = acc + term;
    }
    if (rng.chance(25)) {
        RatFunc d = RatFunc(gens.front().alphabet(), Rational(1)) +
                    gens[rng.below(gens.size())].scaled(rng.small_nonzero_rational(2));
        if (!d.is_zero()) acc = acc / d;
    }
    return acc;
}

}  // namespace

DisjointnessResult disjointness_check(const std::vector<RatFunc>& k_gens,
                                      const std::vector<RatFunc>& l_gens, size_t samples,
                                      std::uint64_t seed) {
    if (k_gens.empty())
        return {DisjointnessResult::Outcome::disjoint_by_criterion, {}, "K = E = Q"};

    auto vars_k = used_variables(k_gens);
    auto vars_l = used_variables(l_gens);
    bool overlap = false;
    for (const auto& v : vars_k)
        if (vars_l.count(v)) overlap = true;
    if (!overlap)
        return {DisjointnessResult::Outcome::disjoint_by_criterion,
                {},
                "generator variables are distinct transcendentals"};

    // sampled refutation needs ldim over K, available when K = Q(variables)
    std::vector<std::string> k_var_names;
    for (const auto& g : k_gens) {
        auto v = as_plain_variable(g);
        if (!v) {
            return {DisjointnessResult::Outcome::inconclusive,
                    {},
                    "K is not presented as Q(variables); no criterion applies"};
        }
        k_var_names.push_back(*v);
    }
    CoefficientField k_field = CoefficientField::rationals_with(k_var_names);
    CoefficientField q = CoefficientField::rationals();

    if (l_gens.empty())
        return {DisjointnessResult::Outcome::inconclusive, {}, "no L generators to sample"};

    AlphabetPtr alphabet = l_gens.front().alphabet();
    RatFunc one(alphabet, Rational(1));

    std::vector<std::vector<RatFunc>> candidates;
    for (const auto& g : l_gens) candidates.push_back({one, g});
    for (size_t i = 0; i < l_gens.size(); ++i)
        for (size_t j = i + 1; j < l_gens.size(); ++j)
            candidates.push_back({l_gens[i], l_gens[j], l_gens[i] * l_gens[j]});

    Rng rng(seed);
    while (candidates.size() < samples) {
        std::vector<RatFunc> tuple;
        size_t len = 2 + rng.below(2);
        for (size_t i = 0; i < len; ++i) tuple.push_back(random_field_element(rng, l_gens));
        candidates.push_back(std::move(tuple));
    }
    if (candidates.size() > samples) candidates.resize(std::max(samples, size_t(1)));

    for (const auto& tuple : candidates) {
        if (ldim(k_field, tuple) != ldim(q, tuple)) {
            return {DisjointnessResult::Outcome::counterexample, tuple,
                    "sampled L-tuple loses K-independence"};
        }
    }
    return {DisjointnessResult::Outcome::inconclusive,
            {},
            "no refutation found on the sampled tuples"};
}

}  // namespace expalg
