#include <doctest.h>

#include "yrk/rminus.hpp"

using namespace yrk;

namespace {
Scalar q(long p, long d = 1) { return Scalar::exact_ratio(p, d); }
Representation c2(const Scalar& a) { return Representation::evaluation_sl2(a, q(1)); }
RatFun inv_s_minus(const Scalar& b) { return RatFun(Poly::one(), Poly::x() - Poly(b)); }
} // namespace

TEST_CASE("lowest fixture: R- = I + x- (x) x+ / s") {
    auto r = rminus_recursive(c2(q(0)), c2(q(0)));
    RatMat expect = RatMat::identity(4);
    expect(2, 1) = inv_s_minus(q(0)); // x- (x) x+ hits v+v- -> v-v+
    CHECK(r == expect);
}

TEST_CASE("first-leg fundamental: R- = 1 + x- (x) x+(s) for any V") {
    auto v1 = c2(q(0));
    // V = C^2(b)
    for (auto b : {q(3), q(-5, 2)}) {
        auto v2 = c2(b);
        RatMat r = rminus_recursive(v1, v2);
        RatMat expect = RatMat::identity(4) +
                        kron(RatMat(v1.xm0(0)), v2.current_xp(0)); // variable u == s
        CHECK(r == expect);
    }
    // V = C^2(b) (x)_0 C^2(c)
    auto v2 = standard_tensor(c2(q(7, 10)), c2(q(-21, 10)), q(0));
    RatMat r = rminus_recursive(v1, v2);
    RatMat expect = RatMat::identity(8) + kron(RatMat(v1.xm0(0)), v2.current_xp(0));
    CHECK(r == expect);
}

TEST_CASE("trivial first factor gives the identity") {
    auto triv = Representation::trivial(CartanData::A1(), q(1));
    CHECK(rminus_recursive(triv, c2(q(2))) == RatMat::identity(2));
    CHECK(rminus_recursive(c2(q(2)), triv) == RatMat::identity(2));
}

TEST_CASE("closed form agrees with the recursion (the rank-1 oracle)") {
    auto a = rminus_recursive(c2(q(0)), c2(q(13, 10)));
    auto b = rminus_sl2_closed_form(c2(q(0)), c2(q(13, 10)));
    CHECK(a == b);

    auto w = standard_tensor(c2(q(7, 10)), c2(q(-21, 10)), q(0));
    auto a2 = rminus_recursive(c2(q(0)), w);
    auto b2 = rminus_sl2_closed_form(c2(q(0)), w);
    CHECK(a2 == b2);

    // a 4 (x) 2 case exercising nontrivial composition layers
    auto v1 = standard_tensor(c2(q(0)), c2(q(3)), q(0));
    auto a3 = rminus_recursive(v1, c2(q(1)));
    auto b3 = rminus_sl2_closed_form(v1, c2(q(1)));
    CHECK(a3 == b3);

    // trivial (x) V
    auto triv = Representation::trivial(CartanData::A1(), q(1));
    CHECK(rminus_sl2_closed_form(triv, c2(q(1))) == RatMat::identity(2));
}

TEST_CASE("uniqueness: the result is independent of the regular direction") {
    auto v1 = c2(q(0)), v2 = c2(q(2));
    auto r1 = rminus_recursive(v1, v2, {q(1)});
    auto r2 = rminus_recursive(v1, v2, {q(3)});
    CHECK(r1 == r2);
    auto w = standard_tensor(v1, v2, q(0));
    CHECK(rminus_recursive(v1, w, {q(1)}) == rminus_recursive(v1, w, {q(5, 2)}));
}

TEST_CASE("semiclassical shape on evaluation pairs") {
    Scalar a = q(2), b = q(-1);
    auto r = rminus_recursive(c2(a), c2(b));
    RatMat expect = RatMat::identity(4);
    expect(2, 1) = inv_s_minus(b - a); // hbar r / (s + a - b)
    CHECK(r == expect);
}

TEST_CASE("triangularity and block decay") {
    auto v1 = standard_tensor(c2(q(0)), c2(q(3)), q(0));
    auto v2 = c2(q(1));
    auto blocks = rminus_blocks(v1, v2);
    CHECK(!blocks.blocks.empty());
    for (auto& [beta, blk] : blocks.blocks) {
        int nu = v1.cartan().nu_min_decomposition(beta);
        // coefficients of s^0 .. s^{-(nu-1)} vanish
        PowerSeries ser = blk.series_at_infinity(nu, "s");
        for (int k = 0; k > -nu; --k) CHECK(ser.coeff_of_power(k).is_zero());
    }
    // unipotence with the height range of this pair
    RatMat r = blocks.assemble();
    RatMat n = r - RatMat::identity(8);
    CHECK((n * n * n).is_zero());
}

TEST_CASE("Neumann layers reproduce the resolvent solve") {
    auto v1 = c2(q(0)), v2 = c2(q(1));
    RatMat r = rminus_recursive(v1, v2);
    Matrix mt = kron(v1.t_of_h({q(1)}), Matrix::identity(2)) +
                kron(Matrix::identity(2), v2.t_of_h({q(1)}));
    Matrix rhs = kron(v1.xm0(0), v2.xp0(0));
    const int order = 7;
    PowerSeries lhs = (r - RatMat::identity(4)).series_at_infinity(order, "s");
    Matrix acc = rhs;
    for (int k = 0; k <= order - 1; ++k) {
        if (k > 0) acc = commutator(mt, acc);
        CHECK(lhs.coeff_of_power(-k - 1) == acc); // hbar = 1, beta(h) = 1
    }
}

TEST_CASE("upper factor via unitarity") {
    auto v1 = c2(q(0)), v2 = c2(q(0));
    RatMat rp = rplus_from_rminus(v1, v2);
    RatMat expect = RatMat::identity(4);
    expect(1, 2) = inv_s_minus(q(0)); // x+ (x) x- entry
    CHECK(rp == expect);

    // value I at infinity
    auto v3 = standard_tensor(c2(q(0)), c2(q(3)), q(0));
    RatMat rp2 = rplus_from_rminus(c2(q(1)), v3);
    PowerSeries top = rp2.series_at_infinity(0, "s");
    CHECK(top.coeff_of_power(0) == Matrix::identity(8));
    auto triv = Representation::trivial(CartanData::A1(), q(1));
    CHECK(rplus_from_rminus(triv, v3) == RatMat::identity(4));
}

TEST_CASE("intertwining battery is exact") {
    auto rep = check_intertwine_minus(c2(q(0)), c2(q(0)));
    CHECK(rep.all_pass());
    CHECK(rep.max_residual() == 0.0);

    auto rep2 = check_intertwine_minus(c2(q(1)), standard_tensor(c2(q(0)), c2(q(3)), q(0)));
    CHECK(rep2.all_pass());

    auto rep3 = check_intertwine_minus(c2(q(0)), drinfeld_tensor(c2(q(2)), c2(q(-2)), q(1)));
    CHECK(rep3.all_pass());
}

TEST_CASE("cocycle equations hold exactly at samples") {
    std::vector<std::pair<Scalar, Scalar>> samples{{q(2), q(5)}, {q(-3), q(7)}, {q(9, 2), q(3)}};
    auto rep = check_cocycle(c2(q(0)), c2(q(1)), c2(q(-2)), samples);
    CHECK(rep.all_pass());
    CHECK(rep.max_residual() == 0.0);
}
