// Test-only reference computations, kept independent of the library paths
// they are used to check.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "yrk/poly.hpp"
#include "yrk/ratfun.hpp"
#include "yrk/ratmat.hpp"

namespace oracle {

using yrk::Poly;
using yrk::RatFun;
using yrk::RatMat;
using yrk::Scalar;

// Schoolbook long division on raw coefficient vectors (ascending powers).
// Returns {quotient, remainder}.
inline std::pair<std::vector<Scalar>, std::vector<Scalar>>
long_division(std::vector<Scalar> num, const std::vector<Scalar>& den) {
    auto deg = [](const std::vector<Scalar>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int dd = deg(den);
    std::vector<Scalar> q;
    int dn = deg(num);
    if (dn >= dd) q.assign(static_cast<size_t>(dn - dd) + 1, Scalar::exact_int(0));
    while (deg(num) >= dd) {
        int k = deg(num) - dd;
        Scalar f = num[static_cast<size_t>(deg(num))] / den[static_cast<size_t>(dd)];
        q[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(k + j)] -= f * den[static_cast<size_t>(j)];
    }
    return {q, num};
}

// Heaviside cover-up for simple poles: res_p f = num(p) / den'(p).
inline Scalar cover_up_residue(const RatFun& f, const Scalar& p) {
    return f.num().eval(p) / f.den().derivative().eval(p);
}

// Neumann series for (sI - N)^{-1} B with N nilpotent: sum_k N^k B s^{-k-1}.
inline RatMat neumann_solve_nilpotent(const yrk::Matrix& N, const yrk::Matrix& B) {
    int n = N.rows();
    RatMat acc(n, B.cols(), N.backend());
    yrk::Matrix pw = yrk::Matrix::identity(n, N.backend());
    RatFun s_inv = RatFun::one(N.backend()) / RatFun::x(N.backend());
    RatFun coef = s_inv;
    for (int k = 0; k <= n; ++k) {
        yrk::Matrix term = pw * B;
        if (term.is_zero()) break;
        acc += coef * RatMat(term);
        pw = N * pw;
        coef = coef * s_inv;
    }
    return acc;
}

// log Gamma on the positive real axis via the standard library.
inline double gamma_pos(double x) { return std::tgamma(x); }

} // namespace oracle
