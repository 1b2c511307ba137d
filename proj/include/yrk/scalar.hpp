#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace yrk {

/// Error thrown when exact and floating scalars meet in one expression.
struct backend_mismatch : std::logic_error {
    backend_mismatch() : std::logic_error("scalar backend mismatch: exact and float values cannot mix") {}
};

struct math_domain_error : std::runtime_error {
    explicit math_domain_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Backend { exact, floating };

/// Complex number with Gaussian-rational components (exact) or
/// double-precision components (float). No silent promotion between the two.
class Scalar {
public:
    Scalar() : backend_(Backend::exact), re_(0), im_(0), fl_(0.0, 0.0) {}

    static Scalar exact_int(long n) { return Scalar(mpq_class(n), mpq_class(0)); }
    static Scalar exact_ratio(long p, long q) {
        if (q == 0) throw math_domain_error("rational with zero denominator");
        mpq_class v(p, q);
        v.canonicalize();
        return Scalar(v, mpq_class(0));
    }
    Scalar(mpq_class re, mpq_class im) : backend_(Backend::exact), re_(std::move(re)), im_(std::move(im)), fl_(0, 0) {
        re_.canonicalize();
        im_.canonicalize();
    }
    explicit Scalar(std::complex<double> z) : backend_(Backend::floating), re_(0), im_(0), fl_(z) {}
    static Scalar flt(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::exact; }

    const mpq_class& exact_re() const { check_exact(); return re_; }
    const mpq_class& exact_im() const { check_exact(); return im_; }

    /// Numeric value; exact scalars are converted (lossy but always allowed).
    std::complex<double> to_complex() const {
        if (backend_ == Backend::floating) return fl_;
        return {re_.get_d(), im_.get_d()};
    }

    bool is_zero() const {
        if (backend_ == Backend::exact) return re_ == 0 && im_ == 0;
        return fl_ == std::complex<double>(0.0, 0.0);
    }
    bool is_one() const {
        if (backend_ == Backend::exact) return re_ == 1 && im_ == 0;
        return fl_ == std::complex<double>(1.0, 0.0);
    }

    Scalar operator-() const {
        if (backend_ == Backend::exact) return Scalar(-re_, -im_);
        return Scalar(-fl_);
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (backend_ == Backend::exact) { re_ += o.re_; im_ += o.im_; }
        else fl_ += o.fl_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        match(o);
        if (backend_ == Backend::exact) { re_ -= o.re_; im_ -= o.im_; }
        else fl_ -= o.fl_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (backend_ == Backend::exact) {
            mpq_class r = re_ * o.re_ - im_ * o.im_;
            mpq_class i = re_ * o.im_ + im_ * o.re_;
            re_ = std::move(r);
            im_ = std::move(i);
        } else {
            fl_ *= o.fl_;
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        match(o);
        if (o.is_zero()) throw math_domain_error("scalar division by zero");
        if (backend_ == Backend::exact) {
            mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
            mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
            mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
            re_ = std::move(r);
            im_ = std::move(i);
        } else {
            fl_ /= o.fl_;
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.backend_ != b.backend_) throw backend_mismatch();
        if (a.backend_ == Backend::exact) return a.re_ == b.re_ && a.im_ == b.im_;
        return a.fl_ == b.fl_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar conj() const {
        if (backend_ == Backend::exact) return Scalar(re_, -im_);
        return Scalar(std::conj(fl_));
    }

    Scalar inverse() const {
        Scalar one = is_exact() ? exact_int(1) : flt(1.0);
        return one / *this;
    }

    /// |z| as a double; used for pivoting, bounds and reporting only.
    double abs_approx() const { return std::abs(to_complex()); }

    /// Same-backend zero / one, handy for generic code.
    Scalar zero_like() const { return is_exact() ? exact_int(0) : flt(0.0); }
    Scalar one_like() const { return is_exact() ? exact_int(1) : flt(1.0); }

    Scalar to_float() const { return Scalar(to_complex()); }

    std::string str() const;

private:
    void check_exact() const {
        if (backend_ != Backend::exact) throw backend_mismatch();
    }
    void match(const Scalar& o) const {
        if (backend_ != o.backend_) throw backend_mismatch();
    }

    Backend backend_;
    mpq_class re_, im_;
    std::complex<double> fl_;
};

inline std::string Scalar::str() const {
    if (backend_ == Backend::exact) {
        std::string s = re_.get_str();
        if (im_ != 0) {
            s += (im_ > 0 ? "+" : "") + im_.get_str() + "i";
        }
        return s;
    }
    std::string s = std::to_string(fl_.real());
    if (fl_.imag() != 0.0) s += (fl_.imag() > 0 ? "+" : "") + std::to_string(fl_.imag()) + "i";
    return s;
}

/// Parses "p/q", "p", "p/q+r/si" style exact complex literals.
Scalar parse_exact_scalar(const std::string& text);

/// Parses exact or float literals ("3/4", "1.5", "2+0.5j") per the CLI rules.
Scalar parse_scalar(const std::string& text, Backend preferred);

} // namespace yrk
