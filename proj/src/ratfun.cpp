#include "yrk/ratfun.hpp"

#include <algorithm>

namespace yrk {

double RatFunOptions::cancel_tol = 1e-9;
double RatFunOptions::pole_cluster_tol = 1e-9;

void RatFun::assign(Poly n, Poly d) {
    if (d.is_zero()) throw math_domain_error("rational function with zero denominator");
    if (n.is_zero()) {
        num_ = Poly();
        den_ = Poly::one(d.backend());
        return;
    }
    if (n.backend() != d.backend()) throw backend_mismatch();

    if (n.backend() == Backend::exact) {
        Poly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = n.divmod(g).first;
            d = d.divmod(g).first;
        }
    } else if (n.degree() >= 1 && d.degree() >= 1) {
        // Float backend: cancel numerator roots that sit on denominator roots.
        auto nr = roots_numeric(n);
        auto dr = roots_numeric(d);
        std::vector<bool> used(nr.size(), false);
        std::vector<std::complex<double>> keep_d;
        for (auto p : dr) {
            bool cancelled = false;
            for (size_t k = 0; k < nr.size(); ++k) {
                if (used[k]) continue;
                if (std::abs(nr[k] - p) <= RatFunOptions::cancel_tol * std::max(1.0, std::abs(p))) {
                    used[k] = true;
                    cancelled = true;
                    break;
                }
            }
            if (!cancelled) keep_d.push_back(p);
        }
        if (keep_d.size() != dr.size()) {
            Scalar lead_n = n.leading(), lead_d = d.leading();
            Poly nn(Poly::one(Backend::floating));
            for (size_t k = 0; k < nr.size(); ++k)
                if (!used[k]) nn = nn * Poly::linear_root(Scalar(nr[k]));
            Poly dd(Poly::one(Backend::floating));
            for (auto p : keep_d) dd = dd * Poly::linear_root(Scalar(p));
            n = lead_n * nn;
            d = lead_d * dd;
        }
    }
    Scalar lc = d.leading();
    num_ = lc.inverse() * n;
    den_ = d.monic();
}

RatFun PartialFractions::reconstruct() const {
    RatFun acc(polynomial_part);
    for (const auto& t : poles) {
        for (int j = 0; j < t.order; ++j) {
            RatFun term(Poly(t.coeffs[static_cast<size_t>(j)]),
                        Poly::linear_root(t.pole).pow(j + 1));
            acc += term;
        }
    }
    return acc;
}

PartialFractions partial_fractions(const RatFun& f, const std::vector<Scalar>& pole_candidates) {
    PartialFractions out;
    auto [q, r] = f.num().divmod(f.den());
    out.polynomial_part = q;
    if (f.den().degree() == 0) return out;

    RootList rl = f.backend() == Backend::exact
                      ? find_roots(f.den(), pole_candidates)
                      : RootList{};
    std::vector<std::pair<Scalar, int>> poles;
    if (f.backend() == Backend::exact) {
        if (!rl.exact)
            throw math_domain_error("denominator does not factor over Q(i); supply pole candidates");
        // group multiplicities
        for (const auto& p : rl.roots) {
            bool found = false;
            for (auto& e : poles)
                if (e.first == p) { e.second += 1; found = true; break; }
            if (!found) poles.push_back({p, 1});
        }
    } else {
        out.exact = false;
        auto clusters = cluster_roots(roots_numeric(f.den()), RatFunOptions::pole_cluster_tol);
        for (auto& c : clusters) poles.push_back({Scalar(c.first), c.second});
    }

    // For each pole p of order m, Taylor-expand h = r/(den/(x-p)^m) at p:
    // coefficients of the principal part are h(p), h'(p), ... /k!.
    for (auto& [p, m] : poles) {
        Poly rest = f.den();
        for (int k = 0; k < m; ++k) rest = rest.divmod(Poly::linear_root(p)).first;
        PoleTerm term;
        term.pole = p;
        term.order = m;
        term.coeffs.assign(static_cast<size_t>(m), p.zero_like());
        RatFun h(r, rest);
        Scalar fact = p.one_like();
        for (int k = 0; k < m; ++k) {
            if (k > 0) {
                h = h.derivative();
                fact = fact * (p.is_exact() ? Scalar::exact_int(k) : Scalar::flt(k));
            }
            // c_{p, m-k} = h^{(k)}(p) / k!
            term.coeffs[static_cast<size_t>(m - k - 1)] = h.eval(p) / fact;
        }
        out.poles.push_back(std::move(term));
    }
    return out;
}

namespace {
bool is_root_of(const Poly& poly, const Scalar& p) {
    if (poly.backend() == Backend::exact) return poly.eval(p).is_zero();
    double scale = poly.max_abs_coeff() * std::max(1.0, std::pow(p.abs_approx(), poly.degree()));
    return poly.eval(p).abs_approx() <= RatFunOptions::pole_cluster_tol * std::max(1.0, scale);
}
} // namespace

std::vector<Scalar> principal_part_at(const RatFun& f, const Scalar& p) {
    // multiplicity of p in the denominator
    Poly rest = f.den();
    int m = 0;
    while (rest.degree() >= 1 && is_root_of(rest, p)) {
        rest = rest.divmod(Poly::linear_root(p)).first;
        ++m;
    }
    std::vector<Scalar> coeffs(static_cast<size_t>(m), p.zero_like());
    if (m == 0) return coeffs;
    RatFun h(f.num(), rest);
    Scalar fact = p.one_like();
    for (int k = 0; k < m; ++k) {
        if (k > 0) {
            h = h.derivative();
            fact = fact * (p.is_exact() ? Scalar::exact_int(k) : Scalar::flt(k));
        }
        coeffs[static_cast<size_t>(m - k - 1)] = h.eval(p) / fact;
    }
    return coeffs;
}

Scalar residue_at(const RatFun& f, const Scalar& p) {
    auto pp = principal_part_at(f, p);
    if (pp.empty()) return p.zero_like();
    return pp.front();
}

} // namespace yrk
