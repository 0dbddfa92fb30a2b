#pragma once

#include "expalg/matrix.hpp"

namespace expalg {

using IntMatrix = Matrix<Integer>;

struct HermiteForm {
    IntMatrix h;  // row-style HNF: echelon, positive pivots, entries above in [0, pivot)
    IntMatrix u;  // unimodular, u * m = h
};

struct SmithForm {
    IntMatrix d;  // diagonal, d1 | d2 | ... , nonnegative
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform, u * m * v = d
    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        size_t n = std::min(d.rows(), d.cols());
        for (size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

HermiteForm hermite_normal_form(IntMatrix m);
SmithForm smith_normal_form(IntMatrix m);

IntMatrix identity_matrix(size_t n);
IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
Integer int_determinant(const IntMatrix& m);

/// Basis of the integer kernel lattice {x : m.x = 0}, from the Smith
/// transforms. Vectors are primitive columns of v.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

}  // namespace expalg
