#include <doctest.h>

#include "oracles.hpp"
#include "yrk/ratmat.hpp"
#include "yrk/series.hpp"

using namespace yrk;

namespace {
Scalar q(long p, long d = 1) { return Scalar::exact_ratio(p, d); }
}

TEST_CASE("rat_linear_solve examples") {
    // [[s]] x = [[1]] -> [[1/s]]
    RatMat M(1, 1);
    M(0, 0) = RatFun::x();
    RatMat b(1, 1);
    b(0, 0) = RatFun::one();
    RatMat x = rat_linear_solve(M, b);
    CHECK(x(0, 0) == RatFun::one() / RatFun::x());

    // identity case
    RatMat I = RatMat::identity(3);
    RatMat rhs(3, 3);
    rhs(0, 2) = RatFun::x();
    rhs(1, 1) = RatFun(Poly::one(), Poly::x());
    CHECK(rat_linear_solve(I, rhs) == rhs);

    // sI - N with N nilpotent: frozen from the Neumann-series oracle
    Matrix N(2, 2);
    N(0, 1) = q(1);
    RatMat sIminusN(2, 2);
    sIminusN(0, 0) = RatFun::x();
    sIminusN(1, 1) = RatFun::x();
    sIminusN(0, 1) = -RatFun(Poly(q(1)));
    RatMat sol = rat_linear_solve(sIminusN, RatMat::identity(2));
    RatMat expect = oracle::neumann_solve_nilpotent(N, Matrix::identity(2));
    CHECK(sol == expect);
    CHECK(sol(0, 0) == RatFun::one() / RatFun::x());
    CHECK(sol(0, 1) == RatFun(Poly::one(), Poly::x() * Poly::x()));

    // multiply-back reproduces the right-hand side exactly
    CHECK((sIminusN * sol - RatMat::identity(2)).is_zero());

    // identically singular input
    RatMat S(2, 2);
    S(0, 0) = RatFun::x();
    S(1, 0) = RatFun::x();
    CHECK_THROWS_AS(rat_linear_solve(S, RatMat::identity(2)), math_domain_error);
}

TEST_CASE("rat matrix inverse and poles") {
    RatMat m(2, 2);
    m(0, 0) = RatFun::one();
    m(0, 1) = RatFun(Poly::one(), Poly::x() - Poly(q(2)));
    m(1, 1) = RatFun::one();
    RatMat inv = rat_inverse(m);
    CHECK((m * inv) == RatMat::identity(2));
    auto poles = m.common_poles();
    REQUIRE(poles.roots.size() == 1);
    CHECK(poles.roots[0] == q(2));
    CHECK(poles.exact);
}

TEST_CASE("power series algebra") {
    // f = 1 + a/s, g = 1 + b/s^2; check product and inverse
    Matrix a(1, 1), b(1, 1);
    a(0, 0) = q(3);
    b(0, 0) = q(-2);
    PowerSeries f("s", 0, {Matrix::identity(1), a, Matrix(1, 1), Matrix(1, 1)});
    PowerSeries g("s", 0, {Matrix::identity(1), Matrix(1, 1), b, Matrix(1, 1)});
    auto fg = f * g;
    CHECK(fg.coeff_of_power(-1)(0, 0) == q(3));
    CHECK(fg.coeff_of_power(-2)(0, 0) == q(-2));
    CHECK(fg.coeff_of_power(-3)(0, 0) == q(-6));

    auto fi = f.inverse();
    CHECK((f * fi).coeff_of_power(0)(0, 0) == q(1));
    CHECK((f * fi).coeff_of_power(-1)(0, 0) == q(0));
    CHECK((f * fi).coeff_of_power(-2)(0, 0) == q(0));

    // log and exp are mutually inverse
    auto lf = f.log();
    CHECK(lf.coeff_of_power(-1)(0, 0) == q(3));
    CHECK(lf.coeff_of_power(-2)(0, 0) == q(-9, 2));
    auto back = lf.exp();
    for (int k = 0; k >= -3; --k)
        CHECK(back.coeff_of_power(k)(0, 0) == f.coeff_of_power(k)(0, 0));
}

TEST_CASE("power series recentering and derivative") {
    // h = 1/s; h(s+c) = 1/s - c/s^2 + c^2/s^3 - ...
    PowerSeries h = PowerSeries::scalar_series("s", -1, {q(1), q(0), q(0), q(0)});
    auto hc = h.recenter(q(2));
    CHECK(hc.coeff_of_power(-1)(0, 0) == q(1));
    CHECK(hc.coeff_of_power(-2)(0, 0) == q(-2));
    CHECK(hc.coeff_of_power(-3)(0, 0) == q(4));
    CHECK(hc.coeff_of_power(-4)(0, 0) == q(-8));

    // derivative of s^-1 is -s^-2
    auto dh = h.derivative();
    CHECK(dh.coeff_of_power(-2)(0, 0) == q(-1));

    // positive powers recenter exactly: (s+c)^1
    PowerSeries lin = PowerSeries::scalar_series("s", 1, {q(1), q(0), q(0)});
    auto linc = lin.recenter(q(5));
    CHECK(linc.coeff_of_power(1)(0, 0) == q(1));
    CHECK(linc.coeff_of_power(0)(0, 0) == q(5));

    // truncation order bookkeeping: product of two order-3 tails
    CHECK((h * h).lowest_power() == -5);
}

TEST_CASE("series matches rational evaluation (Pade style check)") {
    Poly s = Poly::x();
    RatFun f(s + Poly(q(2)), (s - Poly(q(1))) * (s + Poly(q(3))));
    auto ser = ratfun_series_at_infinity(f, 8);
    std::complex<double> pt(25.0, 0.0);
    auto approx = ser.eval_partial(pt, 8)(0, 0).to_complex();
    auto exactv = f.eval(pt);
    CHECK(std::abs(approx - exactv) < 1e-8);
}
