#include "expalg/intmatrix.hpp"

namespace expalg {

IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, n, Integer(0));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols(), Integer(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Integer int_determinant(const IntMatrix& m) { return bareiss_determinant(m); }

namespace {

// floor division (round toward -infinity), for the HNF reduction step
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

void add_row_multiple(IntMatrix& m, size_t dst, size_t src, const Integer& q) {
    if (q.is_zero()) return;
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void negate_row(IntMatrix& m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

void add_col_multiple(IntMatrix& m, size_t dst, size_t src, const Integer& q) {
    if (q.is_zero()) return;
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMatrix& m, size_t j) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

HermiteForm hermite_normal_form(IntMatrix m) {
    size_t rows = m.rows(), cols = m.cols();
    IntMatrix u = identity_matrix(rows);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        // gcd the column entries below r into position r by repeated reduction
        for (;;) {
            size_t smallest = rows;
            for (size_t i = r; i < rows; ++i) {
                if (m.at(i, col).is_zero()) continue;
                if (smallest == rows || abs_int(m.at(i, col)) < abs_int(m.at(smallest, col)))
                    smallest = i;
            }
            if (smallest == rows) break;  // column clear
            if (smallest != r) {
                m.swap_rows(r, smallest);
                u.swap_rows(r, smallest);
            }
            bool done = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, col).is_zero()) continue;
                Integer q = m.at(i, col) / m.at(r, col);  // truncated is fine here
                add_row_multiple(m, i, r, q);
                add_row_multiple(u, i, r, q);
                if (!m.at(i, col).is_zero()) done = false;
            }
            if (done) break;
        }
        if (m.at(r, col).is_zero()) continue;  // no pivot in this column
        if (m.at(r, col) < 0) {
            negate_row(m, r);
            negate_row(u, r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Integer q = floor_div(m.at(i, col), m.at(r, col));
            add_row_multiple(m, i, r, q);
            add_row_multiple(u, i, r, q);
        }
        ++r;
    }
    return {std::move(m), std::move(u)};
}

SmithForm smith_normal_form(IntMatrix m) {
    size_t rows = m.rows(), cols = m.cols();
    IntMatrix u = identity_matrix(rows);
    IntMatrix v = identity_matrix(cols);

    size_t t = 0;
    size_t bound = std::min(rows, cols);
    while (t < bound) {
        // locate a nonzero entry of smallest absolute value in the block
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m.at(i, j).is_zero()) continue;
                if (pi == rows || abs_int(m.at(i, j)) < abs_int(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // block is zero
        if (pi != t) {
            m.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            swap_cols(m, t, pj);
            swap_cols(v, t, pj);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t).is_zero()) continue;
                Integer q = m.at(i, t) / m.at(t, t);
                add_row_multiple(m, i, t, q);
                add_row_multiple(u, i, t, q);
                if (!m.at(i, t).is_zero()) {
                    // remainder is strictly smaller: promote it and restart
                    m.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j).is_zero()) continue;
                Integer q = m.at(t, j) / m.at(t, t);
                add_col_multiple(m, j, t, q);
                add_col_multiple(v, j, t, q);
                if (!m.at(t, j).is_zero()) {
                    swap_cols(m, t, j);
                    swap_cols(v, t, j);
                    clean = false;
                }
            }
        }

        // enforce divisibility of the rest of the block by the pivot
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols && divides_all; ++j)
                if (!(m.at(i, j) % m.at(t, t)).is_zero()) {
                    // fold row i into row t to pull the offending entry in range
                    add_row_multiple(m, t, i, Integer(-1));
                    add_row_multiple(u, t, i, Integer(-1));
                    divides_all = false;
                }
        if (!divides_all) continue;  // redo elimination at the same t

        if (m.at(t, t) < 0) {
            negate_row(m, t);
            negate_row(u, t);
        }
        ++t;
    }
    return {std::move(m), std::move(u), std::move(v)};
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    size_t n = m.cols();
    std::vector<std::vector<Integer>> out;
    size_t diag = std::min(m.rows(), m.cols());
    for (size_t j = 0; j < n; ++j) {
        bool in_kernel = j >= diag || s.d.at(j, j).is_zero();
        if (!in_kernel) continue;
        std::vector<Integer> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = s.v.at(i, j);
        // make primitive with a deterministic sign
        Integer g(0);
        for (const auto& x : col) g = gcd(g, x);
        if (g > 1)
            for (auto& x : col) x /= g;
        for (const auto& x : col) {
            if (x.is_zero()) continue;
            if (x < 0)
                for (auto& y : col) y = -y;
            break;
        }
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace expalg
