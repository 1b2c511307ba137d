#include <doctest.h>

#include "oracles.hpp"
#include "yrk/poly.hpp"
#include "yrk/scalar.hpp"

using namespace yrk;

TEST_CASE("exact scalar field operations stay exact") {
    Scalar a = Scalar::exact_ratio(1, 3);
    Scalar b = Scalar::exact_ratio(2, 5);
    CHECK((a + b) == Scalar::exact_ratio(11, 15));
    CHECK((a * b) == Scalar::exact_ratio(2, 15));
    CHECK((a / b) == Scalar::exact_ratio(5, 6));
    Scalar i(mpq_class(0), mpq_class(1));
    CHECK(i * i == Scalar::exact_int(-1));
    Scalar z(mpq_class(3), mpq_class(4));
    CHECK(z * z.conj() == Scalar::exact_int(25));
    CHECK((z / z) == Scalar::exact_int(1));
}

TEST_CASE("mixing backends is an error, not a promotion") {
    Scalar a = Scalar::exact_int(1);
    Scalar b = Scalar::flt(1.0);
    CHECK_THROWS_AS(a + b, backend_mismatch);
    CHECK_THROWS_AS(a * b, backend_mismatch);
    CHECK_NOTHROW(a.to_float() + b);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_exact_scalar("3/4") == Scalar::exact_ratio(3, 4));
    CHECK(parse_exact_scalar("-2") == Scalar::exact_int(-2));
    CHECK(parse_exact_scalar("-2+1i") == Scalar(mpq_class(-2), mpq_class(1)));
    CHECK(parse_exact_scalar("1/2-3/2i") == Scalar(mpq_class(1, 2), mpq_class(-3, 2)));
    CHECK(parse_exact_scalar("i") == Scalar(mpq_class(0), mpq_class(1)));
    Scalar f = parse_scalar("2.5", Backend::exact);
    CHECK(!f.is_exact());
    CHECK(f.to_complex().real() == doctest::Approx(2.5));
    Scalar g = parse_scalar("1+0.5j", Backend::exact);
    CHECK(g.to_complex().imag() == doctest::Approx(0.5));
}

TEST_CASE("polynomial arithmetic and normalization") {
    Poly x = Poly::x();
    Poly p = x * x - Poly::one(); // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == neg_inf_degree);
    Poly q = p - p;
    CHECK(q.is_zero());
    CHECK(q.degree() == neg_inf_degree);

    auto [quo, rem] = p.divmod(x - Poly::one());
    CHECK(quo == x + Poly::one());
    CHECK(rem.is_zero());

    // independent long-division oracle agreement on a non-trivial division
    Poly n = x.pow(4) + Scalar::exact_int(3) * x.pow(2) + Poly(Scalar::exact_int(7));
    Poly d = x.pow(2) + Scalar::exact_int(2) * x + Poly(Scalar::exact_int(1));
    auto [qq, rr] = n.divmod(d);
    auto [oq, orr] = oracle::long_division(n.coeffs(), d.coeffs());
    CHECK(qq == Poly(oq));
    CHECK(rr == Poly(orr));
    CHECK(qq * d + rr == n);
}

TEST_CASE("polynomial gcd") {
    Poly x = Poly::x();
    Poly a = (x - Poly::one()) * (x + Poly::one());
    Poly b = (x - Poly::one()) * x;
    CHECK(poly_gcd(a, b) == x - Poly::one());
    CHECK(poly_gcd(a, Poly::one()).degree() == 0);
}

TEST_CASE("affine composition") {
    Poly x = Poly::x();
    Poly p = x * x;
    // p(2 - x) = (2-x)^2 = 4 - 4x + x^2
    Poly c = p.compose_affine(Scalar::exact_int(2), Scalar::exact_int(-1));
    CHECK(c.coeff(0) == Scalar::exact_int(4));
    CHECK(c.coeff(1) == Scalar::exact_int(-4));
    CHECK(c.coeff(2) == Scalar::exact_int(1));
}
