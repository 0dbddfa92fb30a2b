#pragma once

#include <string>
#include <vector>

#include "expalg/matrix.hpp"
#include "expalg/rng.hpp"

namespace expalg {

/// The coefficient field of a linear-dimension computation: Q itself, or
/// Q(vars) for a set of variables adjoined as transcendentals.
struct CoefficientField {
    std::vector<std::string> vars;  // sorted, unique; empty means plain Q

    static CoefficientField rationals() { return {}; }
    static CoefficientField rationals_with(std::vector<std::string> vs);

    bool is_plain_rationals() const { return vars.empty(); }
    bool contains_var(std::string_view name) const;
    std::string str() const;

    friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

/// The coordinatization that makes ldim computable: every element of the
/// input list equals (sum of coordinates * support monomials) / denominator,
/// with coordinates in the coefficient field. Negative powers of the field
/// variables are realized by the cleared common denominator.
struct FlatteningContext {
    CoefficientField field;
    AlphabetPtr alphabet;
    MultiPoly denominator;          // common denominator, grlex-monic
    std::vector<Monomial> support;  // residual monomials, grlex-descending
    std::vector<size_t> coeff_vars;
    std::vector<size_t> residual_vars;

    RatFunc reconstruct(const std::vector<RatFunc>& coords) const;
};

struct FlattenResult {
    FlatteningContext ctx;
    Matrix<RatFunc> coords;  // row i = coordinates of element i
};

/// Coordinatizes the elements over the coefficient field.
FlattenResult flatten(const std::vector<RatFunc>& elements, const CoefficientField& field);

/// Rank of a coordinate matrix over the coefficient field.
size_t coord_rank(const Matrix<RatFunc>& m, const CoefficientField& field);

/// ldim_K(X/Y): dimension of span(X u Y) modulo span(Y). ldim(K, X, {}) is
/// the plain span dimension.
size_t ldim(const CoefficientField& field, const std::vector<RatFunc>& x,
            const std::vector<RatFunc>& y = {});

/// Echelonized basis of a finite-dimensional K-subspace given by generators.
/// Within a shared context the basis matrix is canonical, so structural
/// equality of bases decides subspace equality.
class SubspaceBasis {
  public:
    static SubspaceBasis span(const CoefficientField& field, const std::vector<RatFunc>& gens);

    size_t dim() const { return basis_.rows(); }
    const CoefficientField& field() const { return ctx_.field; }
    const FlatteningContext& context() const { return ctx_; }
    const Matrix<RatFunc>& coords() const { return basis_; }
    /// Canonical generators reconstructed from the echelon coordinates.
    const std::vector<RatFunc>& elements() const { return elements_; }

    SubspaceBasis scaled(const RatFunc& c) const;

  private:
    SubspaceBasis() = default;
    FlatteningContext ctx_;
    Matrix<RatFunc> basis_;
    std::vector<RatFunc> elements_;
};

/// A n B via the Zassenhaus block matrix [A A; B 0] in a shared re-flattened
/// context.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
bool member(const RatFunc& element, const SubspaceBasis& a);
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

/// Linear-disjointness check for K = Q(K_gens), L = Q(L_gens) over E = Q.
struct DisjointnessResult {
    enum class Outcome { disjoint_by_criterion, counterexample, inconclusive };
    Outcome outcome;
    std::vector<RatFunc> tuple;  // the refuting L-tuple, if any
    std::string note;
};

DisjointnessResult disjointness_check(const std::vector<RatFunc>& k_gens,
                                      const std::vector<RatFunc>& l_gens, size_t samples,
                                      std::uint64_t seed);

}  // namespace expalg
