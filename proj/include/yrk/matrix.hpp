#pragma once

#include <functional>
#include <vector>

#include "yrk/scalar.hpp"

namespace yrk {

/// Dense matrix of scalars. Row-major, value semantics.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, Backend b = Backend::exact)
        : rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, b == Backend::exact ? Scalar::exact_int(0) : Scalar::flt(0.0)) {}

    static Matrix identity(int n, Backend b = Backend::exact) {
        Matrix m(n, n, b);
        for (int i = 0; i < n; ++i) m(i, i) = m(i, i).one_like();
        return m;
    }
    static Matrix unit(int rows, int cols, int i, int j, const Scalar& v) {
        Matrix m(rows, cols, v.backend());
        m(i, j) = v;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return e_.empty(); }
    Backend backend() const { return e_.empty() ? Backend::exact : e_.front().backend(); }

    Scalar& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, b.cols_, a.backend());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }
    friend Matrix operator*(const Scalar& s, Matrix m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, backend());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto& x : e_) if (!x.is_zero()) return false;
        return true;
    }

    Scalar trace() const {
        Scalar t = e_.empty() ? Scalar::exact_int(0) : e_.front().zero_like();
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// max |entry|, as a double.
    double sup_norm() const {
        double m = 0;
        for (auto& x : e_) m = std::max(m, x.abs_approx());
        return m;
    }

    friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.backend());
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    Matrix inverse() const;
    /// Solves (*this) X = B.
    Matrix solve(const Matrix& B) const;
    /// Basis of the kernel, as columns.
    Matrix kernel() const;

    Matrix to_float() const {
        Matrix r(rows_, cols_, Backend::floating);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].to_float();
        return r;
    }

    Matrix map(const std::function<Scalar(const Scalar&)>& f) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = f(x);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

/// Embeds an operator on legs (a,b) of a tensor product with the given
/// factor dimensions into the full product (legs are 0-based, a < b).
Matrix act_on_legs(const Matrix& m, int leg_a, int leg_b, const std::vector<int>& dims);

/// The flip V (x) W -> W (x) V as a permutation matrix (dimV*dimW square).
Matrix flip_matrix(int dim_v, int dim_w, Backend b = Backend::exact);

} // namespace yrk
