#include "qcox/linalg.hpp"

#include <stdexcept>

namespace qcox {

QuadraticNumber dot(const Vec& x, const Vec& y) {
    QuadraticNumber s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Vec add(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec sub(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec scale(const QuadraticNumber& c, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Vec negate(const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

bool is_zero(const Vec& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

Mat identity_matrix(std::size_t n) {
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = QuadraticNumber(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat r(n, Vec(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t c = 0; c < p; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

std::size_t rref(Mat& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        QuadraticNumber inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            QuadraticNumber f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return r;
}

std::size_t rank(Mat m) { return rref(m); }

Mat row_space_basis(const std::vector<Vec>& vectors) {
    Mat m = vectors;
    rref(m);
    return m;
}

Mat kernel_basis(const Mat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    Mat r = m;
    std::size_t rk = rref(r);
    std::vector<std::size_t> pivot_col(rk);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t c = 0;
        while (r[i][c].is_zero()) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Mat basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols);
        v[c] = QuadraticNumber(1);
        for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = -r[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat mat_inverse(const Mat& m) {
    std::size_t n = m.size();
    Mat aug(n, Vec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = QuadraticNumber(1);
    }
    if (rref(aug) != n) throw std::domain_error("mat_inverse: singular matrix");
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::size_t hash_vec(const Vec& v) {
    std::size_t h = 1469598103934665603ull;
    for (const auto& c : v) {
        h ^= c.hash();
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<QuadraticNumber> char_poly(const Mat& m) {
    std::size_t n = m.size();
    std::vector<QuadraticNumber> c(n + 1);
    c[n] = QuadraticNumber(1);
    Mat mk = identity_matrix(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = mat_mul(m, mk);
        QuadraticNumber tr;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        QuadraticNumber ck = -(tr * QuadraticNumber(Rational(1, (std::int64_t)k)));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
    }
    return c;
}

}  // namespace qcox
