#pragma once

#include <vector>

#include "yrk/matrix.hpp"
#include "yrk/ratfun.hpp"
#include "yrk/series.hpp"

namespace yrk {

/// Matrix of rational functions of one variable.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols, Backend b = Backend::exact)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, RatFun(Poly(), Poly::one(b))) {}
    explicit RatMat(const Matrix& constant) : RatMat(constant.rows(), constant.cols(), constant.backend()) {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!constant(i, j).is_zero()) (*this)(i, j) = RatFun(constant(i, j));
    }

    static RatMat identity(int n, Backend b = Backend::exact) {
        RatMat m(n, n, b);
        for (int i = 0; i < n; ++i) m(i, i) = RatFun::one(b);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Backend backend() const { return e_.empty() ? Backend::exact : e_.front().backend(); }

    RatFun& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const RatFun& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat operator-() const {
        RatMat r = *this;
        for (auto& f : r.e_) f = -f;
        return r;
    }
    friend RatMat operator+(RatMat a, const RatMat& b) {
        for (size_t k = 0; k < a.e_.size(); ++k)
            if (!b.e_[k].is_zero()) a.e_[k] += b.e_[k];
        return a;
    }
    friend RatMat operator-(RatMat a, const RatMat& b) {
        for (size_t k = 0; k < a.e_.size(); ++k)
            if (!b.e_[k].is_zero()) a.e_[k] -= b.e_[k];
        return a;
    }
    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        RatMat r(a.rows_, b.cols_, a.backend());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const RatFun& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }
    friend RatMat operator*(const RatFun& f, RatMat m) {
        for (auto& x : m.e_) x = f * x;
        return m;
    }
    friend RatMat operator*(const Scalar& s, RatMat m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }
    RatMat& operator+=(const RatMat& o) { *this = *this + o; return *this; }
    RatMat& operator-=(const RatMat& o) { *this = *this - o; return *this; }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_zero() const {
        for (auto& f : e_) if (!f.is_zero()) return false;
        return true;
    }

    Matrix eval(const Scalar& x) const {
        Matrix r(rows_, cols_, x.backend());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r(i, j) = (*this)(i, j).eval(x);
        return r;
    }

    RatMat derivative() const {
        RatMat r = *this;
        for (auto& f : r.e_) f = f.derivative();
        return r;
    }

    /// Entrywise f(a + b*x).
    RatMat compose_affine(const Scalar& a, const Scalar& b) const {
        RatMat r = *this;
        for (auto& f : r.e_) f = f.compose_affine(a, b);
        return r;
    }

    RatMat pow(int n) const {
        RatMat r = RatMat::identity(rows_, backend());
        RatMat base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend RatMat kron(const RatMat& a, const RatMat& b) {
        RatMat r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.backend());
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        if (!b(k, l).is_zero())
                            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    /// Conjugation by a constant matrix: P * this * P^{-1} given both factors.
    RatMat conjugate(const Matrix& p, const Matrix& p_inv) const {
        return RatMat(p) * (*this) * RatMat(p_inv);
    }

    /// Union of denominator roots across entries; exact flag as in find_roots.
    RootList common_poles(const std::vector<Scalar>& candidates = {}) const;

    /// Entrywise Laurent expansion at infinity through s^{-order}; the lead
    /// power is max over entries of deg num - deg den.
    PowerSeries series_at_infinity(int order, const std::string& var = "s") const;

    RatMat to_float() const {
        RatMat r(rows_, cols_, Backend::floating);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].to_float();
        return r;
    }

    /// max over entries of max |coefficient| (diagnostic scale).
    double sup_coeff_norm() const {
        double m = 0;
        for (auto& f : e_) m = std::max(m, std::max(f.num().max_abs_coeff(), f.den().max_abs_coeff()));
        return m;
    }

private:
    int rows_, cols_;
    std::vector<RatFun> e_;
};

/// Solves M X = B over the rational-function field (Gaussian elimination,
/// exactness preserved). Throws on identically singular M. The solution is
/// spot-checked at random sample points away from the poles.
RatMat rat_linear_solve(const RatMat& M, const RatMat& B, unsigned seed = 12345);

RatMat rat_inverse(const RatMat& M);

/// Laurent expansion of a single rational function at infinity.
PowerSeries ratfun_series_at_infinity(const RatFun& f, int order, const std::string& var = "s");

} // namespace yrk
