#include "yrk/roots.hpp"

#include <algorithm>
#include <cmath>

namespace yrk {

std::vector<std::complex<double>> roots_numeric(const Poly& p) {
    int n = p.degree();
    if (n <= 0) return {};
    std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = p.coeff(k).to_complex();
    for (auto& c : a) c /= a.back();

    // Durand-Kerner from a spiral of start points scaled to the root bound.
    double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<size_t>(k)]));
    bound = 1.0 + bound;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1.0;
    for (int k = 0; k < n; ++k) {
        w *= seed;
        z[static_cast<size_t>(k)] = bound * w / std::abs(w) * (0.3 + 0.7 * (k + 1.0) / n);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int k = n; k >= 0; --k) acc = acc * x + a[static_cast<size_t>(k)];
        return acc;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> d = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) d *= (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
            if (d == std::complex<double>(0.0)) {
                z[static_cast<size_t>(k)] += 1e-6;
                continue;
            }
            std::complex<double> step = eval(z[static_cast<size_t>(k)]) / d;
            z[static_cast<size_t>(k)] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * bound) break;
    }
    return z;
}

std::vector<std::pair<std::complex<double>, int>>
cluster_roots(const std::vector<std::complex<double>>& roots, double tol) {
    std::vector<std::pair<std::complex<double>, int>> clusters;
    for (auto r : roots) {
        bool placed = false;
        for (auto& c : clusters) {
            if (std::abs(r - c.first) <= tol * std::max(1.0, std::abs(c.first))) {
                c.first = (c.first * static_cast<double>(c.second) + r) / static_cast<double>(c.second + 1);
                c.second += 1;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({r, 1});
    }
    for (size_t i = 0; i < clusters.size(); ++i)
        for (size_t j = i + 1; j < clusters.size(); ++j) {
            double sep = std::abs(clusters[i].first - clusters[j].first);
            if (sep < 10 * tol * std::max(1.0, std::abs(clusters[i].first)))
                throw math_domain_error("pole clusters overlap within tolerance (ill-conditioned)");
        }
    return clusters;
}

std::optional<Scalar> exact_sqrt(const Scalar& z) {
    if (!z.is_exact()) return std::nullopt;
    auto sqrt_q = [](const mpq_class& q) -> std::optional<mpq_class> {
        if (q < 0) return std::nullopt;
        mpz_class n = q.get_num(), d = q.get_den();
        mpz_class rn, rd;
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return mpq_class(rn, rd);
    };
    const mpq_class& a = z.exact_re();
    const mpq_class& b = z.exact_im();
    if (b == 0) {
        if (auto r = sqrt_q(a)) return Scalar(*r, mpq_class(0));
        if (auto r = sqrt_q(mpq_class(-a))) return Scalar(mpq_class(0), *r);
        return std::nullopt;
    }
    // sqrt(a+bi) = x+yi with x^2 = (|z|+a)/2, y = b/(2x); needs |z| rational.
    auto nrm = sqrt_q(a * a + b * b);
    if (!nrm) return std::nullopt;
    auto x2 = mpq_class((*nrm + a) / 2);
    auto x = sqrt_q(x2);
    if (!x || *x == 0) return std::nullopt;
    mpq_class y = b / (2 * (*x));
    Scalar r(*x, y);
    if (r * r == z) return r;
    return std::nullopt;
}

RootList find_roots(const Poly& p, const std::vector<Scalar>& candidates) {
    RootList out;
    if (p.degree() <= 0) return out;

    if (p.backend() == Backend::floating) {
        out.exact = false;
        auto rs = roots_numeric(p);
        for (auto r : rs) out.roots.push_back(Scalar(r));
        return out;
    }

    Poly rest = p.monic();
    // Trial division by candidate linear factors, repeated for multiplicity.
    for (const auto& cand : candidates) {
        if (!cand.is_exact()) continue;
        while (rest.degree() >= 1 && rest.eval(cand).is_zero()) {
            rest = rest.divmod(Poly::linear_root(cand)).first;
            out.roots.push_back(cand);
        }
    }
    // Zero root and rational roots of low degree leftovers.
    while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        rest = rest.divmod(Poly::x()).first;
        out.roots.push_back(Scalar::exact_int(0));
    }
    while (rest.degree() == 1) {
        out.roots.push_back(-rest.coeff(0) / rest.coeff(1));
        rest = Poly::one();
    }
    if (rest.degree() == 2) {
        Scalar a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
        Scalar disc = b * b - Scalar::exact_int(4) * a * c;
        if (auto sq = exact_sqrt(disc)) {
            Scalar two_a = Scalar::exact_int(2) * a;
            out.roots.push_back((-b + *sq) / two_a);
            out.roots.push_back((-b - *sq) / two_a);
            rest = Poly::one();
        }
    }
    if (rest.degree() >= 1) {
        // Numeric fallback, flagged so callers can warn or reject.
        out.exact = false;
        for (auto r : roots_numeric(rest)) out.roots.push_back(Scalar(r));
    }
    return out;
}

} // namespace yrk
