#include "yrk/matrix.hpp"

#include <algorithm>

namespace yrk {

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool gauss_solve(Matrix a, Matrix& b) {
    int n = a.rows();
    bool exact = a.backend() == Backend::exact;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        double best = 0;
        for (int r = col; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            double mag = a(r, col).abs_approx();
            if (exact) { pivot = r; break; }
            if (mag > best) { best = mag; pivot = r; }
        }
        if (pivot < 0) return false;
        if (!exact && best <= 1e-13) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b(pivot, j), b(col, j));
        }
        Scalar inv = a(col, col).inverse();
        for (int j = col; j < n; ++j) a(col, j) = inv * a(col, j);
        for (int j = 0; j < b.cols(); ++j) b(col, j) = inv * b(col, j);
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    return true;
}

} // namespace

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw math_domain_error("inverse of a non-square matrix");
    Matrix b = Matrix::identity(rows_, backend());
    if (!gauss_solve(*this, b)) throw math_domain_error("singular matrix");
    return b;
}

Matrix Matrix::solve(const Matrix& B) const {
    if (rows_ != cols_ || rows_ != B.rows()) throw math_domain_error("bad solve dimensions");
    Matrix b = B;
    if (!gauss_solve(*this, b)) throw math_domain_error("singular matrix");
    return b;
}

Matrix Matrix::kernel() const {
    // Row-reduce a copy, track pivot columns, read off the free-variable basis.
    Matrix a = *this;
    int nr = a.rows(), nc = a.cols();
    bool exact = backend() == Backend::exact;
    double scale = std::max(1.0, a.sup_norm());
    auto zero = [&](const Scalar& s) {
        return exact ? s.is_zero() : s.abs_approx() <= 1e-10 * scale;
    };
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int pr = -1;
        double best = 0;
        for (int r = row; r < nr; ++r) {
            if (zero(a(r, col))) continue;
            double m = a(r, col).abs_approx();
            if (exact) { pr = r; break; }
            if (m > best) { best = m; pr = r; }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < nc; ++j) std::swap(a(pr, j), a(row, j));
        Scalar inv = a(row, col).inverse();
        for (int j = 0; j < nc; ++j) a(row, j) = inv * a(row, j);
        for (int r = 0; r < nr; ++r) {
            if (r == row || zero(a(r, col))) continue;
            Scalar f = a(r, col);
            for (int j = 0; j < nc; ++j) a(r, j) -= f * a(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < nc; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
            free_cols.push_back(c);
    Matrix k(nc, static_cast<int>(free_cols.size()), backend());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k(fc, static_cast<int>(fi)) = k(fc, static_cast<int>(fi)).one_like();
        for (size_t pr = 0; pr < pivot_col.size(); ++pr)
            k(pivot_col[pr], static_cast<int>(fi)) = -a(static_cast<int>(pr), fc);
    }
    return k;
}

Matrix act_on_legs(const Matrix& m, int leg_a, int leg_b, const std::vector<int>& dims) {
    int total = 1;
    for (int d : dims) total *= d;
    Matrix r(total, total, m.backend());
    int n = static_cast<int>(dims.size());
    std::vector<int> stride(dims.size(), 1);
    for (int k = n - 2; k >= 0; --k) stride[static_cast<size_t>(k)] = stride[static_cast<size_t>(k) + 1] * dims[static_cast<size_t>(k) + 1];
    int da = dims[static_cast<size_t>(leg_a)], db = dims[static_cast<size_t>(leg_b)];

    std::vector<int> idx(dims.size(), 0);
    for (int flat = 0; flat < total; ++flat) {
        int rem = flat;
        for (int k = 0; k < n; ++k) { idx[static_cast<size_t>(k)] = rem / stride[static_cast<size_t>(k)]; rem %= stride[static_cast<size_t>(k)]; }
        int ia = idx[static_cast<size_t>(leg_a)], ib = idx[static_cast<size_t>(leg_b)];
        for (int ja = 0; ja < da; ++ja)
            for (int jb = 0; jb < db; ++jb) {
                const Scalar& v = m(ia * db + ib, ja * db + jb);
                if (v.is_zero()) continue;
                int src = flat + (ja - ia) * stride[static_cast<size_t>(leg_a)] + (jb - ib) * stride[static_cast<size_t>(leg_b)];
                r(flat, src) = v;
            }
    }
    return r;
}

Matrix flip_matrix(int dim_v, int dim_w, Backend b) {
    Matrix p(dim_v * dim_w, dim_v * dim_w, b);
    for (int i = 0; i < dim_v; ++i)
        for (int j = 0; j < dim_w; ++j)
            p(j * dim_v + i, i * dim_w + j) = p(0, 0).one_like();
    return p;
}

} // namespace yrk
