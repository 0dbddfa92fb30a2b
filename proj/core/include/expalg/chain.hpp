#pragma once

#include "expalg/subspace.hpp"

namespace expalg {

/// Full record of one descent run A_0 > A_1 > ... > A_N = {0}, where
/// A_{i+1} = A_i n p^-1 A_i, with the per-step quotient dimensions and the
/// telescoping bookkeeping.
struct ChainCertificate {
    std::string power_var;
    std::vector<SubspaceBasis> chain;  // A_0 .. A_N
    std::vector<size_t> dims;          // Q-dimensions of the A_i
    std::vector<size_t> step_terms;    // ldim_Q(A_i / (A_{i+1} + p A_{i+1})), i = 0..N-1
    size_t telescoping_lhs = 0;        // ldim_Q(A_0 / A_1)
    size_t qp_dim = 0;                 // ldim_{Q(p)} of the A_0 generators

    size_t steps() const { return dims.empty() ? 0 : dims.size() - 1; }
};

/// Runs the descent from span_Q(a0_gens). Terminates with A_N = {0}; the
/// iteration guard dim(A_0) + 1 only trips on an implementation bug, since
/// the dimension drops strictly while nonzero (a fixed point would make A_i
/// a Q(p)-vector space, impossible for finite nonzero dimension with p
/// transcendental).
ChainCertificate chain_descent(const std::vector<RatFunc>& a0_gens, const std::string& power_var);

/// Recomputes both sides of the telescoping identity
///   ldim_Q(A_0/A_1) = sum_i ldim_Q(A_i/(A_{i+1} + p A_{i+1}))
/// and each intermediate step identity from the stored bases. On mismatch
/// returns false and reports the failing step in `diagnostics`.
bool telescoping_check(const ChainCertificate& cert, std::string* diagnostics = nullptr);

/// The inequality assembly behind the power theorem, on concrete input.
struct PowerInequalityReport {
    ChainCertificate cert;

    // (e7)  ldim_Q(p xbar, kbar / xbar, p^-1 kbar) >= ldim_{Q(p)}(xbar, p^-1 kbar)
    size_t e7_lhs = 0, e7_rhs = 0;
    // (e8)  ldim_{Q(p)}(xbar, p^-1 kbar) = ldim_{Q(p)}(xbar, kbar)
    //                                    = ldim_{Q(p)}(xbar/kbar) + ldim_{Q(p)}(kbar)
    size_t e8_a = 0, e8_b = 0, e8_c = 0;
    // (e9)  chain of bounds ending at ldim_Q(p xbar/kbar, xbar) + ldim_{Q(p)}(kbar)
    size_t e9_l1 = 0, e9_l2 = 0, e9_l3 = 0, e9_l4 = 0, e9_l5 = 0;
    // final: ldim_Q(p xbar / xbar, kbar) >= ldim_{Q(p)}(xbar / kbar)
    size_t final_lhs = 0, final_rhs = 0;

    // per-step domination ldim_Q(A_i/(A_{i+1}+pA_{i+1})) >= ldim_{Q(p)}(same)
    std::vector<size_t> step_qp_terms;

    bool telescoping_ok = false;
    bool holds = false;  // every equality/inequality above verified
    std::string failure;
};

/// Computes A_0 = span_Q(p xbar u kbar), runs the descent, and evaluates
/// (e7), (e8), (e9) and the final inequality exactly. Kernel generators must
/// avoid power variables (they model elements of the constant subfield).
PowerInequalityReport power_inequality_check(const std::vector<RatFunc>& xs,
                                             const std::vector<RatFunc>& kernel_gens,
                                             const std::string& power_var);

}  // namespace expalg
