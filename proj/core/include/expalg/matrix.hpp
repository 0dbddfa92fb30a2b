#pragma once

#include <cstddef>
#include <vector>

#include "expalg/ratfunc.hpp"

namespace expalg {

/// Scalar adapters for the elimination kernels. K must be an exact field
/// (Rational, RatFunc) or, for the fraction-free paths, an integral domain
/// with exact division (MultiPoly, Integer).
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
    static size_t weight(const Rational&) { return 1; }
};

template <>
struct ScalarOps<RatFunc> {
    static RatFunc zero(const RatFunc& like) { return RatFunc(like.alphabet(), Rational(0)); }
    static RatFunc one(const RatFunc& like) { return RatFunc(like.alphabet(), Rational(1)); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }
    static RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
    static size_t weight(const RatFunc& x) { return x.term_count(); }
};

template <>
struct ScalarOps<MultiPoly> {
    static MultiPoly zero(const MultiPoly& like) { return MultiPoly(like.alphabet()); }
    static MultiPoly one(const MultiPoly& like) {
        return MultiPoly::constant(like.alphabet(), Rational(1));
    }
    static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
        return a.divided_exactly_by(b).value();
    }
    static size_t weight(const MultiPoly& x) { return x.term_count(); }
};

template <>
struct ScalarOps<Integer> {
    static Integer zero(const Integer&) { return Integer(0); }
    static Integer one(const Integer&) { return Integer(1); }
    static bool is_zero(const Integer& x) { return x.is_zero(); }
    static Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
    static size_t weight(const Integer&) { return 1; }
};

/// Dense rectangular matrix with value semantics.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, K fill = K())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::vector<K> row(size_t i) const {
        return std::vector<K>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix<K> transposed() const {
        Matrix<K> t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    size_t rows_, cols_;
    std::vector<K> data_;
};

template <class K>
struct EchelonForm {
    Matrix<K> mat;                   // reduced row-echelon form
    std::vector<size_t> pivot_cols;  // ascending
    size_t rank = 0;
};

/// Gauss-Jordan over an exact field. Pivot choice: leftmost column, then the
/// smallest-weight nonzero candidate (first such row on ties); deterministic,
/// and immaterial for the result since RREF is unique.
template <class K>
EchelonForm<K> reduced_row_echelon(Matrix<K> m) {
    using Ops = ScalarOps<K>;
    EchelonForm<K> out;
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        size_t best = m.rows();
        size_t best_weight = 0;
        for (size_t i = r; i < m.rows(); ++i) {
            if (Ops::is_zero(m.at(i, col))) continue;
            size_t w = Ops::weight(m.at(i, col));
            if (best == m.rows() || w < best_weight) {
                best = i;
                best_weight = w;
            }
        }
        if (best == m.rows()) continue;
        m.swap_rows(r, best);
        K inv_pivot = Ops::div(Ops::one(m.at(r, col)), m.at(r, col));
        for (size_t j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv_pivot;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || Ops::is_zero(m.at(i, col))) continue;
            K factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

template <class K>
size_t rank(const Matrix<K>& m) {
    return reduced_row_echelon(m).rank;
}

/// Kernel basis from the RREF: one vector per free column, with 1 at the
/// free column and the negated pivot-row entries at the pivot columns.
/// The basis is in reduced echelon shape with respect to the free columns.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m, K like = K()) {
    using Ops = ScalarOps<K>;
    EchelonForm<K> ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(m.cols(), Ops::zero(like));
        v[j] = Ops::one(like);
        for (size_t i = 0; i < ech.pivot_cols.size(); ++i) {
            const K& entry = ech.mat.at(i, j);
            if (!Ops::is_zero(entry)) v[ech.pivot_cols[i]] = Ops::zero(like) - entry;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct PivotProfile {
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Fraction-free Bareiss row echelon over an integral domain; returns the
/// pivot column profile. Only exact divisions by previous pivots are used,
/// which keeps entries polynomial and controls expression swell.
template <class K>
PivotProfile bareiss_pivot_profile(Matrix<K> m, K like = K()) {
    using Ops = ScalarOps<K>;
    PivotProfile out;
    K prev = Ops::one(like);
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        size_t best = m.rows();
        size_t best_weight = 0;
        for (size_t i = r; i < m.rows(); ++i) {
            if (Ops::is_zero(m.at(i, col))) continue;
            size_t w = Ops::weight(m.at(i, col));
            if (best == m.rows() || w < best_weight) {
                best = i;
                best_weight = w;
            }
        }
        if (best == m.rows()) continue;
        m.swap_rows(r, best);
        const K pivot = m.at(r, col);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            for (size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = Ops::exact_div(m.at(i, j) * pivot - m.at(i, col) * m.at(r, j), prev);
            m.at(i, col) = Ops::zero(like);
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    return out;
}

template <class K>
size_t bareiss_rank(const Matrix<K>& m, K like = K()) {
    return bareiss_pivot_profile(m, like).rank;
}

/// Determinant of a square matrix by fraction-free elimination.
template <class K>
K bareiss_determinant(Matrix<K> m, K like = K()) {
    using Ops = ScalarOps<K>;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Ops::one(like);
    K prev = Ops::one(like);
    bool negate = false;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i) {
            if (!Ops::is_zero(m.at(i, k))) {
                piv = i;
                break;
            }
        }
        if (piv == n) return Ops::zero(like);
        if (piv != k) {
            m.swap_rows(k, piv);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) =
                    Ops::exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Ops::zero(like);
        }
        prev = m.at(k, k);
    }
    K det = m.at(n - 1, n - 1);
    return negate ? Ops::zero(like) - det : det;
}

/// Multiplies each row by the lcm of its entries' denominators, turning a
/// RatFunc matrix into a polynomial one with the same row space and rank.
inline Matrix<MultiPoly> cleared_denominators(const Matrix<RatFunc>& m,
                                              const AlphabetPtr& alphabet) {
    Matrix<MultiPoly> out(m.rows(), m.cols(), MultiPoly(alphabet));
    for (size_t i = 0; i < m.rows(); ++i) {
        MultiPoly d = MultiPoly::constant(alphabet, Rational(1));
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) d = poly_lcm(d, m.at(i, j).den().extended_to(alphabet));
        for (size_t j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m.at(i, j);
            if (e.is_zero()) continue;
            MultiPoly num = e.num().extended_to(alphabet);
            MultiPoly den = e.den().extended_to(alphabet);
            out.at(i, j) = num * d.divided_exactly_by(den).value();
        }
    }
    return out;
}

}  // namespace expalg
