#pragma once

#include <climits>
#include <vector>

#include "yrk/scalar.hpp"

namespace yrk {

/// Degree of the zero polynomial.
constexpr int neg_inf_degree = INT_MIN;

/// Univariate polynomial, coefficients in ascending order, trailing zeros
/// stripped. The variable is contextual (u, v, s or q).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { strip(); }
    explicit Poly(const Scalar& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Poly zero() { return Poly(); }
    static Poly one(Backend b = Backend::exact) {
        return Poly(b == Backend::exact ? Scalar::exact_int(1) : Scalar::flt(1.0));
    }
    /// The monomial x.
    static Poly x(Backend b = Backend::exact) {
        Scalar z = b == Backend::exact ? Scalar::exact_int(0) : Scalar::flt(0.0);
        Scalar o = b == Backend::exact ? Scalar::exact_int(1) : Scalar::flt(1.0);
        return Poly(std::vector<Scalar>{z, o});
    }
    /// x - a
    static Poly linear_root(const Scalar& a) {
        return Poly(std::vector<Scalar>{-a, a.one_like()});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? neg_inf_degree : static_cast<int>(c_.size()) - 1; }
    Backend backend() const { return c_.empty() ? Backend::exact : c_.front().backend(); }

    const Scalar& operator[](size_t k) const { return c_[k]; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero_scalar();
        return c_[static_cast<size_t>(k)];
    }
    const Scalar& leading() const {
        if (c_.empty()) throw math_domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()),
                              a.c_.empty() ? (b.c_.empty() ? Scalar() : b.zero_scalar()) : a.zero_scalar());
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, a.zero_scalar());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        Poly r = p;
        for (auto& x : r.c_) x = s * x;
        r.strip();
        return r;
    }

    Poly pow(int n) const {
        if (n < 0) throw math_domain_error("negative polynomial power");
        Poly r = Poly::one(backend());
        Poly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc = x.zero_like();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Scalar> c(c_.size() - 1, zero_scalar());
        for (size_t k = 1; k < c_.size(); ++k) {
            Scalar kk = c_[k].is_exact() ? Scalar::exact_int(static_cast<long>(k))
                                         : Scalar::flt(static_cast<double>(k));
            c[k - 1] = kk * c_[k];
        }
        return Poly(std::move(c));
    }

    /// p(a + b*x); used for arguments like u - s and q + s.
    Poly compose_affine(const Scalar& a, const Scalar& b) const {
        Poly arg(std::vector<Scalar>{a, b});
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + Poly(*it);
        return acc;
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw math_domain_error("polynomial division by zero");
        Poly r = *this;
        std::vector<Scalar> q;
        int dd = d.degree();
        if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, zero_scalar());
        while (!r.is_zero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            Scalar f = r.leading() / d.leading();
            q[static_cast<size_t>(k)] = f;
            // r -= f * x^k * d
            for (size_t j = 0; j < d.c_.size(); ++j)
                r.c_[static_cast<size_t>(k) + j] -= f * d.c_[j];
            r.strip_top();
        }
        r.strip();
        return {Poly(std::move(q)), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    double max_abs_coeff() const {
        double m = 0;
        for (auto& x : c_) m = std::max(m, x.abs_approx());
        return m;
    }

    Poly to_float() const {
        std::vector<Scalar> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(x.to_float());
        return Poly(std::move(c));
    }

    std::string str(const std::string& var = "x") const;

private:
    Scalar zero_scalar() const {
        return c_.empty() ? Scalar::exact_int(0) : c_.front().zero_like();
    }
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void strip_top() {
        // float: exact cancellation of the top term is forced during division
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (!c_.empty() && !c_.front().is_exact()) {
            // discard top coefficients that are pure rounding debris
            double scale = max_abs_coeff();
            while (!c_.empty() && c_.back().abs_approx() <= 1e-13 * scale) c_.pop_back();
        }
    }

    std::vector<Scalar> c_;
};

/// Monic gcd by the Euclidean algorithm (exact backend only).
Poly poly_gcd(const Poly& a, const Poly& b);

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        if (c_[static_cast<size_t>(k)].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[static_cast<size_t>(k)].str() + ")";
        if (k > 0) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
}

} // namespace yrk
