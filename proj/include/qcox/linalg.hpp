#pragma once

#include <cstddef>
#include <vector>

#include "qcox/quadratic.hpp"

namespace qcox {

using Vec = std::vector<QuadraticNumber>;
using Mat = std::vector<Vec>;  // row major

QuadraticNumber dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const QuadraticNumber& c, const Vec& x);
Vec negate(const Vec& x);
bool is_zero(const Vec& x);

Mat identity_matrix(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

// Reduced row echelon form in place; returns the rank.
std::size_t rref(Mat& m);
std::size_t rank(Mat m);

// Canonical echelon basis of the span of the given vectors (unique per
// subspace, so subspace equality is structural equality of the result).
Mat row_space_basis(const std::vector<Vec>& vectors);

// Basis of {x : m x = 0}.
Mat kernel_basis(const Mat& m);

// Inverse of a square invertible matrix.
Mat mat_inverse(const Mat& m);

std::size_t hash_vec(const Vec& v);

// Characteristic polynomial coefficients c_0..c_n of det(xI - M)
// via the Faddeev-LeVerrier recurrence (exact field arithmetic).
std::vector<QuadraticNumber> char_poly(const Mat& m);

}  // namespace qcox
