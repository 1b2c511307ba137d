#include <doctest.h>

#include "fixtures.hpp"
#include "yrk/rfull.hpp"

using namespace yrk;
using fixtures::sl3_eval;

namespace {
Scalar q(long p, long d = 1) { return Scalar::exact_ratio(p, d); }
}

TEST_CASE("rank-2 evaluation module satisfies every defining relation") {
    for (auto a : {q(0), q(2), Scalar(mpq_class(1), mpq_class(1))}) {
        auto v = sl3_eval(a, q(1));
        auto rep = v.verify_relations(13);
        CHECK(rep.all_pass());
        CHECK(rep.max_residual() == 0.0);
        // Serre checks actually ran
        bool has_serre = false;
        for (auto& c : rep.checks) has_serre = has_serre || c.id.rfind("y6.", 0) == 0;
        CHECK(has_serre);
    }
    // currents: node poles split by hbar/2
    auto v = sl3_eval(q(0), q(1));
    RatMat x1 = v.current_xp(0), x2 = v.current_xp(1);
    CHECK(x1(0, 1) == RatFun(Poly::one(), Poly::x()));
    CHECK(x2(1, 2) == RatFun(Poly::one(), Poly::x() - Poly(q(1, 2))));
}

TEST_CASE("rank-2 tensor products are modules") {
    auto v = sl3_eval(q(0), q(1));
    auto w = sl3_eval(q(3), q(1));
    auto st = standard_tensor(v, w, q(0));
    CHECK(st.verify_relations(17).all_pass());
    auto dr = drinfeld_tensor(v, w, q(7));
    CHECK(dr.verify_relations(19).all_pass());
}

TEST_CASE("rank-2 lower factor: intertwining, one-jet, uniqueness") {
    auto v = sl3_eval(q(0), q(1));
    auto w = sl3_eval(q(3), q(1));
    auto rep = check_intertwine_minus(v, w);
    CHECK(rep.all_pass());
    CHECK(rep.max_residual() == 0.0);

    // independence of the regular direction exercises nontrivial beta(h)
    auto r1 = rminus_recursive(v, w, {q(1), q(1)});
    auto r2 = rminus_recursive(v, w, {q(1), q(2)});
    CHECK(r1 == r2);

    // block decay orders: the adjoint-height blocks vanish to their nu order
    auto blocks = rminus_blocks(v, w);
    bool saw_composite = false;
    for (auto& [beta, blk] : blocks.blocks) {
        int nu = v.cartan().nu_min_decomposition(beta);
        PowerSeries ser = blk.series_at_infinity(nu, "s");
        for (int k = 0; k > -nu; --k) CHECK(ser.coeff_of_power(k).is_zero());
        if (CartanData::height(beta) > 1) saw_composite = true;
    }
    CHECK(saw_composite);
}

TEST_CASE("rank-2 abelian factor and difference equation") {
    auto v = sl3_eval(q(0), q(1));
    auto w = sl3_eval(q(1), q(1));
    auto a = abelian_A(v, w);
    CHECK(a.exact);
    // A = 1 + 0/s - l h^2 Omega_h / s^2 + ...
    auto ser = a.as_ratmat().series_at_infinity(2, "s");
    CHECK(ser.coeff_of_power(0) == Matrix::identity(9));
    CHECK(ser.coeff_of_power(-1).is_zero());
    CHECK(ser.coeff_of_power(-2) == Scalar::exact_int(-3) * omega_h_on(v, w));

    // difference equation of the resummed product, l hbar = 3
    std::complex<double> el = 3.0;
    for (auto s : {std::complex<double>(0.83, 0.41), std::complex<double>(-1.9, 0.6)}) {
        Matrix lhs = rzero_updown(a, s + el, true, 1e-10);
        Matrix rhs = a.eval(s) * rzero_updown(a, s, true, 1e-10);
        CHECK((lhs - rhs).sup_norm() < 1e-8);
    }

    // formal one-jet
    PowerSeries r0 = rzero_formal(v, w, 3);
    CHECK(r0.coeff_of_power(-1) == omega_h_on(v, w));
}

TEST_CASE("rank-2 composed R-matrix: one-jet and qybe sample") {
    auto v1 = sl3_eval(q(0), q(1));
    auto v2 = sl3_eval(q(5, 2), q(1));
    auto r = rfull(v1, v2, true);
    PowerSeries ser = r.series(1);
    CHECK(ser.coeff_of_power(-1) == omega_g_on(v1, v2));

    auto v3 = sl3_eval(q(-7, 4), q(1));
    auto rep = check_qybe(v1, v2, v3, true, {{q(23, 10), q(17, 10)}}, 1e-7);
    CHECK(rep.all_pass());
}
