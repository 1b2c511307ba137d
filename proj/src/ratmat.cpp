#include "yrk/ratmat.hpp"

#include <random>

namespace yrk {

namespace {

// Coefficients of the Laurent expansion at infinity, powers
// lead, lead-1, ..., -order (lead = deg num - deg den).
std::vector<Scalar> asymptotic_coeffs(const RatFun& f, int order, int pad_lead) {
    Backend bk = f.backend();
    Scalar zero = bk == Backend::exact ? Scalar::exact_int(0) : Scalar::flt(0.0);
    std::vector<Scalar> out;
    if (f.is_zero()) {
        out.assign(static_cast<size_t>(pad_lead + order) + 1, zero);
        return out;
    }
    int dn = f.num().degree(), dd = f.den().degree();
    int lead = dn - dd;
    int count = lead + order + 1; // coefficients down to power -order
    std::vector<Scalar> c;
    if (count > 0) {
        c.reserve(static_cast<size_t>(count));
        // series division: num/den in descending powers, b0 = monic lead of den
        auto a = [&](int k) { return f.num().coeff(dn - k); };
        auto b = [&](int k) { return f.den().coeff(dd - k); };
        for (int k = 0; k < count; ++k) {
            Scalar acc = a(k);
            for (int j = 1; j <= k; ++j) acc -= b(j) * c[static_cast<size_t>(k - j)];
            c.push_back(acc); // b0 == 1
        }
    }
    // pad so the list starts at power pad_lead
    for (int p = pad_lead; p > lead; --p) out.push_back(zero);
    for (auto& x : c) out.push_back(x);
    while (static_cast<int>(out.size()) < pad_lead + order + 1) out.push_back(zero);
    return out;
}

} // namespace

PowerSeries ratfun_series_at_infinity(const RatFun& f, int order, const std::string& var) {
    int lead = std::max(0, f.is_zero() ? 0 : f.degree_at_infinity());
    auto c = asymptotic_coeffs(f, order, lead);
    return PowerSeries::scalar_series(var, lead, c);
}

PowerSeries RatMat::series_at_infinity(int order, const std::string& var) const {
    int lead = 0;
    for (auto& f : e_)
        if (!f.is_zero()) lead = std::max(lead, f.degree_at_infinity());
    std::vector<Matrix> coeffs(static_cast<size_t>(lead + order) + 1, Matrix(rows_, cols_, backend()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            auto c = asymptotic_coeffs((*this)(i, j), order, lead);
            for (size_t k = 0; k < coeffs.size(); ++k) coeffs[k](i, j) = c[k];
        }
    return PowerSeries(var, lead, std::move(coeffs));
}

RootList RatMat::common_poles(const std::vector<Scalar>& candidates) const {
    RootList out;
    for (auto& f : e_) {
        if (f.is_zero() || f.den().degree() == 0) continue;
        RootList r = find_roots(f.den(), candidates);
        out.exact = out.exact && r.exact;
        for (auto& p : r.roots) {
            bool seen = false;
            for (auto& q : out.roots) {
                if (p.is_exact() && q.is_exact() ? p == q
                                                 : std::abs(p.to_complex() - q.to_complex()) < 1e-9)
                    { seen = true; break; }
            }
            if (!seen) out.roots.push_back(p);
        }
    }
    return out;
}

RatMat rat_linear_solve(const RatMat& M, const RatMat& B, unsigned seed) {
    if (M.rows() != M.cols() || M.rows() != B.rows())
        throw math_domain_error("rat_linear_solve: bad dimensions");
    int n = M.rows();
    bool exact = M.backend() == Backend::exact;
    RatMat a = M;
    RatMat x = B;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        long best_complexity = 0;
        for (int r = col; r < n; ++r) {
            const RatFun& f = a(r, col);
            if (f.is_zero()) continue;
            long cx = f.num().degree() + f.den().degree();
            if (pivot < 0 || cx < best_complexity) { pivot = r; best_complexity = cx; }
        }
        if (pivot < 0) throw math_domain_error("rat_linear_solve: identically singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (int j = 0; j < x.cols(); ++j) std::swap(x(pivot, j), x(col, j));
        }
        RatFun inv = a(col, col).inverse();
        for (int j = col; j < n; ++j)
            if (!a(col, j).is_zero()) a(col, j) = inv * a(col, j);
        for (int j = 0; j < x.cols(); ++j)
            if (!x(col, j).is_zero()) x(col, j) = inv * x(col, j);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            RatFun f = a(r, col);
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j)
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
            for (int j = 0; j < x.cols(); ++j)
                if (!x(col, j).is_zero()) x(r, j) -= f * x(col, j);
        }
    }

    // Spot check at sample points away from every pole.
    std::mt19937_64 rng(seed);
    int checks = 0;
    for (int tries = 0; tries < 60 && checks < 3; ++tries) {
        long v = static_cast<long>(rng() % 97) + 2;
        Scalar pt = exact ? Scalar::exact_int(v) : Scalar::flt(static_cast<double>(v));
        try {
            Matrix mm = M.eval(pt), xx = x.eval(pt), bb = B.eval(pt);
            Matrix resid = mm * xx - bb;
            if (exact) {
                if (!resid.is_zero())
                    throw math_domain_error("rat_linear_solve: verification failed");
            } else if (resid.sup_norm() > 1e-8 * std::max(1.0, bb.sup_norm() + mm.sup_norm() * xx.sup_norm())) {
                throw math_domain_error("rat_linear_solve: verification failed");
            }
            ++checks;
        } catch (const math_domain_error& e) {
            if (std::string(e.what()).find("pole") == std::string::npos) throw;
            // sample hit a pole; try another point
        }
    }
    return x;
}

RatMat rat_inverse(const RatMat& M) {
    return rat_linear_solve(M, RatMat::identity(M.rows(), M.backend()));
}

} // namespace yrk
