#include "expalg/chain.hpp"

#include <sstream>

namespace expalg {

namespace {

RatFunc power_variable(const std::vector<RatFunc>& elements, const std::string& name) {
    AlphabetPtr alphabet = Alphabet::make({{name, VarKind::power}});
    for (const auto& e : elements) alphabet = Alphabet::merge(alphabet, e.alphabet());
    if (alphabet->var(*alphabet->index_of(name)).kind != VarKind::power)
        throw std::invalid_argument("'" + name + "' is not a power variable");
    return RatFunc::variable(alphabet, name);
}

std::vector<RatFunc> scaled_all(const std::vector<RatFunc>& xs, const RatFunc& c) {
    std::vector<RatFunc> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x * c);
    return out;
}

std::vector<RatFunc> concat(std::vector<RatFunc> a, const std::vector<RatFunc>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

ChainCertificate chain_descent(const std::vector<RatFunc>& a0_gens,
                               const std::string& power_var) {
    RatFunc p = power_variable(a0_gens, power_var);
    RatFunc p_inv = p.inverse();
    CoefficientField q = CoefficientField::rationals();

    ChainCertificate cert;
    cert.power_var = power_var;
    cert.qp_dim = ldim(CoefficientField::rationals_with({power_var}), a0_gens);

    SubspaceBasis a = SubspaceBasis::span(q, a0_gens);
    cert.chain.push_back(a);
    cert.dims.push_back(a.dim());

    size_t guard = a.dim() + 1;
    while (cert.dims.back() > 0) {
        if (cert.chain.size() > guard)
            throw std::logic_error("descent chain failed to terminate within dim(A_0) steps");
        SubspaceBasis next = intersect(a, a.scaled(p_inv));
        if (next.dim() == a.dim())
            throw std::logic_error(
                "descent chain hit a nonzero fixed point; A_i would be a Q(p)-space");
        cert.chain.push_back(next);
        cert.dims.push_back(next.dim());
        a = cert.chain.back();
    }

    // step terms ldim_Q(A_i / (A_{i+1} + p A_{i+1}))
    for (size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        const auto& cur = cert.chain[i];
        const auto& nxt = cert.chain[i + 1];
        std::vector<RatFunc> cond = concat(nxt.elements(), scaled_all(nxt.elements(), p));
        cert.step_terms.push_back(ldim(q, cur.elements(), cond));
    }
    cert.telescoping_lhs =
        cert.dims.size() > 1 ? cert.dims[0] - cert.dims[1] : 0;
    return cert;
}

bool telescoping_check(const ChainCertificate& cert, std::string* diagnostics) {
    if (cert.chain.empty()) {
        if (diagnostics) *diagnostics = "empty certificate";
        return false;
    }
    CoefficientField q = CoefficientField::rationals();
    RatFunc p = power_variable(cert.chain.front().elements(), cert.power_var);

    auto elements_of = [&](size_t i) -> std::vector<RatFunc> {
        if (i < cert.chain.size()) return cert.chain[i].elements();
        return {};
    };

    size_t lhs = cert.chain.size() > 1
                     ? ldim(q, elements_of(0), elements_of(1))
                     : 0;
    if (lhs != cert.telescoping_lhs) {
        if (diagnostics) *diagnostics = "stored telescoping lhs does not recompute";
        return false;
    }

    size_t sum = 0;
    for (size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        std::vector<RatFunc> cond =
            concat(elements_of(i + 1), scaled_all(elements_of(i + 1), p));
        size_t term = ldim(q, elements_of(i), cond);
        if (i >= cert.step_terms.size() || term != cert.step_terms[i]) {
            if (diagnostics) {
                std::ostringstream os;
                os << "step term " << i << " recomputes to " << term;
                *diagnostics = os.str();
            }
            return false;
        }
        sum += term;

        // intermediate identity:
        // ldim(A_i/A_{i+1}) = term + ldim(A_{i+1}/A_{i+2})
        size_t lhs_i = ldim(q, elements_of(i), elements_of(i + 1));
        size_t rec = ldim(q, elements_of(i + 1), elements_of(i + 2));
        if (lhs_i != term + rec) {
            if (diagnostics) {
                std::ostringstream os;
                os << "intermediate identity fails at step " << i << ": " << lhs_i
                   << " != " << term << " + " << rec;
                *diagnostics = os.str();
            }
            return false;
        }
    }
    if (sum != cert.telescoping_lhs) {
        if (diagnostics) {
            std::ostringstream os;
            os << "telescoping sum " << sum << " != lhs " << cert.telescoping_lhs;
            *diagnostics = os.str();
        }
        return false;
    }
    return true;
}

PowerInequalityReport power_inequality_check(const std::vector<RatFunc>& xs,
                                             const std::vector<RatFunc>& kernel_gens,
                                             const std::string& power_var) {
    for (const auto& k : kernel_gens) {
        const auto& alphabet = *k.alphabet();
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet.var(i).kind == VarKind::power && k.uses_var(i))
                throw std::invalid_argument(
                    "kernel generators must lie in the power-free subfield");
    }

    std::vector<RatFunc> all = concat(xs, kernel_gens);
    RatFunc p = power_variable(all, power_var);
    RatFunc p_inv = p.inverse();
    CoefficientField q = CoefficientField::rationals();
    CoefficientField qp = CoefficientField::rationals_with({power_var});

    std::vector<RatFunc> pxs = scaled_all(xs, p);
    std::vector<RatFunc> pinv_ks = scaled_all(kernel_gens, p_inv);

    PowerInequalityReport rep;
    rep.cert = chain_descent(concat(pxs, kernel_gens), power_var);
    rep.telescoping_ok = telescoping_check(rep.cert, &rep.failure);

    rep.e7_lhs = ldim(q, concat(pxs, kernel_gens), concat(xs, pinv_ks));
    rep.e7_rhs = ldim(qp, concat(xs, pinv_ks));

    rep.e8_a = ldim(qp, concat(xs, pinv_ks));
    rep.e8_b = ldim(qp, concat(xs, kernel_gens));
    rep.e8_c = ldim(qp, xs, kernel_gens) + ldim(qp, kernel_gens);

    rep.e9_l1 = ldim(q, concat(pxs, kernel_gens), concat(xs, pinv_ks));
    rep.e9_l2 = ldim(q, concat(pxs, kernel_gens), xs);
    rep.e9_l3 = ldim(q, pxs, concat(kernel_gens, xs)) + ldim(q, kernel_gens, xs);
    rep.e9_l4 = ldim(q, pxs, concat(kernel_gens, xs)) + ldim(q, kernel_gens);
    rep.e9_l5 = ldim(q, pxs, concat(kernel_gens, xs)) + ldim(qp, kernel_gens);

    rep.final_lhs = ldim(q, pxs, concat(xs, kernel_gens));
    rep.final_rhs = ldim(qp, xs, kernel_gens);

    // per-step Q(p)-quotients for the domination property
    for (size_t i = 0; i + 1 < rep.cert.chain.size(); ++i) {
        const auto& nxt = rep.cert.chain[i + 1];
        std::vector<RatFunc> cond = concat(nxt.elements(), scaled_all(nxt.elements(), p));
        rep.step_qp_terms.push_back(ldim(qp, rep.cert.chain[i].elements(), cond));
    }

    rep.holds = rep.telescoping_ok;
    auto fail = [&](const char* what) {
        rep.holds = false;
        if (rep.failure.empty()) rep.failure = what;
    };
    if (rep.e7_lhs < rep.e7_rhs) fail("(e7) fails");
    if (rep.e8_a != rep.e8_b || rep.e8_b != rep.e8_c) fail("(e8) fails");
    if (rep.e9_l1 > rep.e9_l2 || rep.e9_l2 != rep.e9_l3 || rep.e9_l3 > rep.e9_l4 ||
        rep.e9_l4 != rep.e9_l5)
        fail("(e9) fails");
    if (rep.final_lhs < rep.final_rhs) fail("final inequality fails");
    if (rep.e7_lhs != (rep.cert.dims.size() > 1 ? rep.cert.dims[0] - rep.cert.dims[1]
                                                : rep.cert.dims.empty() ? 0 : rep.cert.dims[0]))
        fail("(e7) lhs does not match ldim_Q(A_0/A_1)");
    for (size_t i = 0; i < rep.cert.step_terms.size(); ++i)
        if (rep.cert.step_terms[i] < rep.step_qp_terms[i]) fail("step domination fails");
    return rep;
}

}  // namespace expalg
