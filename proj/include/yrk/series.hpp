#pragma once

#include <string>
#include <vector>

#include "yrk/matrix.hpp"

namespace yrk {

/// Truncated Laurent series in 1/s with matrix coefficients:
///   f = sum_{k=0}^{len-1} coeff[k] * s^(lead-k),
/// known exactly down to power `lead - len + 1` (the truncation order).
/// Scalars are handled as 1x1 matrices.
class PowerSeries {
public:
    PowerSeries() : lead_(0) {}
    PowerSeries(std::string var, int lead, std::vector<Matrix> coeffs)
        : var_(std::move(var)), lead_(lead), c_(std::move(coeffs)) {}

    static PowerSeries zero(const std::string& var, int dim, int order, Backend b = Backend::exact) {
        return PowerSeries(var, 0, std::vector<Matrix>(static_cast<size_t>(order) + 1, Matrix(dim, dim, b)));
    }
    static PowerSeries identity(const std::string& var, int dim, int order, Backend b = Backend::exact) {
        auto s = zero(var, dim, order, b);
        s.c_[0] = Matrix::identity(dim, b);
        return s;
    }
    static PowerSeries scalar_series(const std::string& var, int lead, const std::vector<Scalar>& coeffs) {
        std::vector<Matrix> c;
        c.reserve(coeffs.size());
        for (auto& x : coeffs) {
            Matrix m(1, 1, x.backend());
            m(0, 0) = x;
            c.push_back(m);
        }
        return PowerSeries(var, lead, std::move(c));
    }

    const std::string& var() const { return var_; }
    int lead() const { return lead_; }
    /// Lowest power of s still represented.
    int lowest_power() const { return lead_ - static_cast<int>(c_.size()) + 1; }
    int dim() const { return c_.empty() ? 0 : c_.front().rows(); }
    size_t length() const { return c_.size(); }
    Backend backend() const { return c_.empty() ? Backend::exact : c_.front().backend(); }

    /// Coefficient of s^k (zero matrix if above the lead, throws below truncation).
    Matrix coeff_of_power(int k) const {
        if (k > lead_) return Matrix(dim(), dim(), backend());
        int idx = lead_ - k;
        if (idx >= static_cast<int>(c_.size()))
            throw math_domain_error("series coefficient below truncation order");
        return c_[static_cast<size_t>(idx)];
    }
    const std::vector<Matrix>& coeffs() const { return c_; }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& m : r.c_) m = -m;
        return r;
    }
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Scalar& s, PowerSeries f) {
        for (auto& m : f.c_) m = s * m;
        return f;
    }
    friend PowerSeries operator*(const Matrix& m, PowerSeries f) {
        for (auto& x : f.c_) x = m * x;
        return f;
    }

    /// Multiplicative inverse; the top coefficient must be invertible and
    /// must sit at power 0 (series of the form c0 + c1/s + ...).
    PowerSeries inverse() const;

    /// log of a series of the form I + (lower order); result has lead 0... -N.
    PowerSeries log() const;
    /// exp of a series with no constant or positive-power part.
    PowerSeries exp() const;

    /// d/ds, applied to s^k -> k s^(k-1).
    PowerSeries derivative() const;

    /// Recentering f(s) -> f(s + c), exact binomial expansion, truncated.
    PowerSeries recenter(const Scalar& c) const;

    /// Substitute s -> c*s (c nonzero scalar).
    PowerSeries scale_arg(const Scalar& c) const;

    /// Strips zero top coefficients (tightens the lead without losing data).
    PowerSeries compact() const;

    /// Discard powers of s above `power` (keeps truncation order).
    PowerSeries drop_above(int power) const;
    /// Truncate below: keep powers >= lead - order.
    PowerSeries truncate_to(int order) const;

    /// Partial sum through s^(-k) evaluated at a numeric point.
    Matrix eval_partial(std::complex<double> s, int through_inverse_power) const;

    bool is_zero() const {
        for (auto& m : c_) if (!m.is_zero()) return false;
        return true;
    }
    double sup_norm() const {
        double r = 0;
        for (auto& m : c_) r = std::max(r, m.sup_norm());
        return r;
    }

private:
    std::string var_;
    int lead_ = 0;
    std::vector<Matrix> c_;
};

} // namespace yrk
