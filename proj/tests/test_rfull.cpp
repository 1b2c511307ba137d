#include <doctest.h>

#include "yrk/rfull.hpp"

using namespace yrk;

namespace {
Scalar q(long p, long d = 1) { return Scalar::exact_ratio(p, d); }
Representation c2(const Scalar& a) { return Representation::evaluation_sl2(a, q(1)); }
} // namespace

TEST_CASE("composed one-jet is the full Casimir tensor") {
    auto v1 = c2(q(0)), v2 = c2(q(0));
    auto r = rfull(v1, v2, true);
    PowerSeries ser = r.series(2);
    CHECK(ser.coeff_of_power(0) == Matrix::identity(4));
    Matrix expect = omega_g_on(v1, v2); // hbar = 1
    CHECK(ser.coeff_of_power(-1) == expect);

    // explicit sl2 shape: x- (x) x+ + x+ (x) x- + h (x) h / 2
    Matrix byhand = kron(v1.xm0(0), v2.xp0(0)) + kron(v1.xp0(0), v2.xm0(0)) +
                    Scalar::exact_ratio(1, 2) * kron(v1.xi0(0), v2.xi0(0));
    CHECK(expect == byhand);

    // trivial factor: R = I
    auto triv = Representation::trivial(v1.cartan(), v1.hbar());
    auto rt = rfull(triv, v2, true);
    CHECK((rt.eval({2.3, 0.7}) - Matrix::identity(2, Backend::floating)).sup_norm() < 1e-12);
}

TEST_CASE("one-jet on a 4x2 pair stays exact") {
    auto v1 = standard_tensor(c2(q(0)), c2(q(3)), q(0));
    auto v2 = c2(q(1));
    auto r = rfull(v1, v2, true);
    PowerSeries ser = r.series(1);
    CHECK(ser.coeff_of_power(-1) == omega_g_on(v1, v2));
}

TEST_CASE("qybe holds numerically on the evaluation triple") {
    std::vector<std::pair<Scalar, Scalar>> samples{{q(31, 10), q(27, 10)},
                                                   {q(19, 10), q(-13, 10)}};
    auto rep = check_qybe(c2(q(0)), c2(q(2, 5)), c2(q(-9, 10)), true, samples, 1e-7);
    CHECK(rep.all_pass());
}

TEST_CASE("cabling, intertwiner, unitarity, determinant") {
    std::vector<std::pair<Scalar, Scalar>> samples{{q(31, 10), q(27, 10)}};
    auto rep = check_full_cabling_unitarity(c2(q(0)), c2(q(2, 5)), c2(q(-9, 10)), true,
                                            samples, 1e-7);
    CHECK(rep.all_pass());
}

TEST_CASE("asymptotic error profile along the real ray") {
    auto rep = asymptotic_report(c2(q(0)), c2(q(0)), true, 4, {30.0, 50.0}, 1e-6);
    CHECK(rep.all_pass());
}

TEST_CASE("abelian-only cabling consequence on the Drinfeld side") {
    // with R0 in place of R the same triple passes the Drinfeld-side cabling
    auto rep = check_rzero_cabling(c2(q(0)), c2(q(2, 5)), c2(q(-9, 10)), q(31, 10), q(27, 10),
                                   true, 1e-7);
    CHECK(rep.all_pass());
}

TEST_CASE("qybe residual tracks the product tolerance (regression guard)") {
    auto q = [](long a, long b = 1) { return Scalar::exact_ratio(a, b); };
    auto v1 = Representation::evaluation_sl2(q(0), q(1));
    auto v2 = Representation::evaluation_sl2(q(2, 5), q(1));
    auto v3 = Representation::evaluation_sl2(q(-9, 10), q(1));
    std::vector<std::pair<Scalar, Scalar>> pts{{q(31, 10), q(27, 10)}};
    auto loose = check_qybe(v1, v2, v3, true, pts, 1e-1);
    auto tight = check_qybe(v1, v2, v3, true, pts, 1e-7);
    CHECK(loose.checks.front().residual <= 1e-2);
    CHECK(tight.checks.front().residual <= 1e-8);
    CHECK(loose.checks.front().residual >= tight.checks.front().residual);
}

TEST_CASE("nothing assumes the deformation parameter is real") {
    Scalar ih(mpq_class(0), mpq_class(1)); // hbar = i
    auto v1 = Representation::evaluation_sl2(Scalar::exact_int(0), ih);
    auto v2 = Representation::evaluation_sl2(Scalar::exact_int(2), ih);
    CHECK(v1.verify_relations(3).all_pass());
    CHECK(drinfeld_tensor(v1, v2, Scalar::exact_int(5)).verify_relations(3).all_pass());

    // semiclassical shape: R- = I + hbar r / (s + a - b)
    RatMat r = rminus_recursive(v1, v2);
    RatMat expect = RatMat::identity(4);
    expect(2, 1) = RatFun(Poly(ih), Poly::x() - Poly(Scalar::exact_int(2)));
    CHECK(r == expect);
    CHECK(check_intertwine_minus(v1, v2).all_pass());

    // products along the rotated lattice, difference equation at l hbar = 2i
    auto a = abelian_A(v1, v1);
    std::complex<double> el(0.0, 2.0);
    std::complex<double> s(1.7, 0.9);
    Matrix lhs = rzero_updown(a, s + el, true, 1e-10);
    Matrix rhs = a.eval(s) * rzero_updown(a, s, true, 1e-10);
    CHECK((lhs - rhs).sup_norm() < 1e-8);
}
