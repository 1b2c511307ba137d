#pragma once

#include <map>
#include <vector>

#include "yrk/poly.hpp"
#include "yrk/roots.hpp"

namespace yrk {

/// Tolerance used to match nearby roots / poles in the float backend.
struct RatFunOptions {
    static double cancel_tol;       // numerator root close to a denominator root
    static double pole_cluster_tol; // clustering of numeric denominator roots
};

/// Reduced rational function with monic denominator. Equality is
/// comparison of the canonical form.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    RatFun(Poly num, Poly den) { assign(std::move(num), std::move(den)); }
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.is_zero() ? Backend::exact : num_.backend())) {}
    explicit RatFun(const Scalar& c) : num_(Poly(c)), den_(Poly::one(c.backend())) {}

    static RatFun zero() { return RatFun(); }
    static RatFun one(Backend b = Backend::exact) { return RatFun(Poly::one(b)); }
    static RatFun x(Backend b = Backend::exact) { return RatFun(Poly::x(b)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Backend backend() const { return num_.is_zero() ? den_.backend() : num_.backend(); }

    RatFun operator-() const { return RatFun::raw(-num_, den_); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return -b;
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw math_domain_error("division by the zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFun operator*(const Scalar& s, const RatFun& f) {
        return RatFun::raw(s * f.num_, f.den_);
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const {
        if (is_zero()) throw math_domain_error("inverse of the zero rational function");
        return RatFun(den_, num_);
    }

    Scalar eval(const Scalar& x) const {
        Scalar d = den_.eval(x);
        if (d.is_zero()) throw math_domain_error("rational function evaluated at a pole");
        return num_.eval(x) / d;
    }
    std::complex<double> eval(std::complex<double> x) const {
        return num_.eval(x) / den_.eval(x);
    }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// f(a + b*x)
    RatFun compose_affine(const Scalar& a, const Scalar& b) const {
        return RatFun(num_.compose_affine(a, b), den_.compose_affine(a, b));
    }

    RatFun to_float() const { return RatFun::raw(num_.to_float(), den_.to_float()); }

    /// deg num - deg den; the order of growth at infinity.
    int degree_at_infinity() const {
        if (num_.is_zero()) return neg_inf_degree;
        return num_.degree() - den_.degree();
    }

    std::string str(const std::string& var = "x") const {
        if (den_.degree() == 0) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    static RatFun raw(Poly n, Poly d) {
        RatFun f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        if (f.num_.is_zero()) f.den_ = Poly::one(f.den_.backend());
        return f;
    }
    void assign(Poly n, Poly d);

    Poly num_, den_;
};

/// One term of a partial-fraction decomposition.
struct PoleTerm {
    Scalar pole;
    int order = 0;
    std::vector<Scalar> coeffs; // coeffs[j] multiplies (x-p)^{-(j+1)}, j = 0..order-1
};

struct PartialFractions {
    Poly polynomial_part;
    std::vector<PoleTerm> poles;
    bool exact = true;

    RatFun reconstruct() const;
};

/// Decomposition f = poly + sum c_{p,m}/(x-p)^m. Exact when the denominator
/// factors over Q(i) with the given candidate roots; otherwise numeric roots
/// are used and `exact` is cleared.
PartialFractions partial_fractions(const RatFun& f, const std::vector<Scalar>& pole_candidates = {});

/// Coefficient of (x-p)^{-1}; zero at a regular point.
Scalar residue_at(const RatFun& f, const Scalar& p);

/// Principal part of f at p as a list c[0..m-1], c[j] / (x-p)^{j+1}.
std::vector<Scalar> principal_part_at(const RatFun& f, const Scalar& p);

} // namespace yrk
