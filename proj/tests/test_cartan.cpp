#include <doctest.h>

#include <set>

#include "yrk/cartan.hpp"

using namespace yrk;

namespace {
// exhaustive-enumeration oracle for the minimal decomposition count
int nu_oracle(const CartanData& c, const std::vector<int>& beta, int depth_cap = 6) {
    if (CartanData::height(beta) == 0) return 0;
    for (int k = 1; k <= depth_cap; ++k) {
        // try all multisets of k positive roots
        const auto& roots = c.positive_roots();
        std::vector<size_t> pick(static_cast<size_t>(k), 0);
        while (true) {
            std::vector<int> sum(beta.size(), 0);
            for (size_t t = 0; t < pick.size(); ++t)
                for (size_t j = 0; j < sum.size(); ++j)
                    sum[j] += roots[pick[t]][j];
            if (sum == beta) return k;
            size_t pos = pick.size();
            while (pos-- > 0) {
                if (pick[pos] + 1 < roots.size()) {
                    ++pick[pos];
                    for (size_t t = pos + 1; t < pick.size(); ++t) pick[t] = pick[pos];
                    break;
                }
                if (pos == 0) goto next_k;
            }
        }
    next_k:;
    }
    return -1;
}
} // namespace

TEST_CASE("positive root tables") {
    auto a1 = CartanData::A1();
    CHECK(a1.positive_roots() == std::vector<std::vector<int>>{{1}});
    CHECK(a1.ell() == 2);

    auto a2 = CartanData::A2();
    CHECK(a2.positive_roots() == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(a2.ell() == 3);

    auto b2 = CartanData::B2();
    CHECK(b2.positive_roots() ==
          std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(b2.ell() == 6);
    CHECK(b2.sym(0, 1) == b2.sym(1, 0));
}

TEST_CASE("nu: minimal positive-root decompositions") {
    auto a1 = CartanData::A1();
    CHECK(a1.nu_min_decomposition({0}) == 0);
    CHECK(a1.nu_min_decomposition({1}) == 1);
    CHECK(a1.nu_min_decomposition({3}) == 3);

    auto a2 = CartanData::A2();
    CHECK(a2.nu_min_decomposition({1, 1}) == 1);
    CHECK(a2.nu_min_decomposition({2, 1}) == 2);
    // frozen from the enumeration oracle
    CHECK(nu_oracle(a2, {1, 1}) == 1);
    CHECK(nu_oracle(a2, {2, 1}) == 2);
    CHECK(nu_oracle(a2, {2, 2}) == 2);
    CHECK(a2.nu_min_decomposition({2, 2}) == 2);

    CHECK_THROWS_AS(a2.nu_min_decomposition({-1, 0}), math_domain_error);

    // subadditivity on a grid
    auto b2 = CartanData::B2();
    for (int x1 = 0; x1 <= 2; ++x1)
        for (int y1 = 0; y1 <= 2; ++y1)
            for (int x2 = 0; x2 <= 2; ++x2)
                for (int y2 = 0; y2 <= 2; ++y2) {
                    if (x1 + y1 == 0 || x2 + y2 == 0) continue;
                    int lhs = b2.nu_min_decomposition({x1 + x2, y1 + y2});
                    int rhs = b2.nu_min_decomposition({x1, y1}) + b2.nu_min_decomposition({x2, y2});
                    CHECK(lhs <= rhs);
                }
}

TEST_CASE("q-number couplings") {
    // rank 1: c11 = [2]/[2] = 1
    auto a1 = q_coupling_matrix(CartanData::A1());
    CHECK(a1[0][0] == LaurentPoly::q_number(1));

    // rank 2 A-type: [[q+1/q, 1],[1, q+1/q]]
    auto a2 = q_coupling_matrix(CartanData::A2());
    LaurentPoly qpq; // q + q^-1
    qpq.lo = -1;
    qpq.c = {1, 0, 1};
    CHECK(a2[0][0] == qpq);
    CHECK(a2[1][1] == qpq);
    CHECK(a2[0][1] == LaurentPoly::q_number(1));
    CHECK(a2[1][0] == LaurentPoly::q_number(1));

    // nonnegative integer Laurent coefficients everywhere, and the q=1
    // weighted-sum identity against the realization
    for (auto cartan : {CartanData::A1(), CartanData::A2(), CartanData::B2()}) {
        auto cq = q_coupling_matrix(cartan);
        for (auto& row : cq)
            for (auto& p : row) {
                CHECK(p.nonneg_integer());
                CHECK(p.palindromic());
            }
        auto z = ZeroModeRealization::build(cartan);
        // sum_j c_ij(1) d_j h_j = ell * (fundamental coweight i)
        for (int i = 0; i < cartan.rank(); ++i) {
            Matrix acc(z.dim(), z.dim());
            for (int j = 0; j < cartan.rank(); ++j)
                acc = acc + Scalar(cq[static_cast<size_t>(i)][static_cast<size_t>(j)].eval_one(), mpq_class(0)) *
                                (Scalar::exact_int(cartan.d(j)) * z.h_simple(j));
            // alpha_k(acc) = ell * delta_ki: test via commutators with x_k^+
            for (int k = 0; k < cartan.rank(); ++k) {
                Matrix br = commutator(acc, z.xp_simple(k));
                Matrix expect = (i == k ? Scalar::exact_int(cartan.ell()) : Scalar::exact_int(0)) *
                                z.xp_simple(k);
                CHECK(br == expect);
            }
        }
    }
}

TEST_CASE("coupling-mode table is symmetric in r") {
    auto modes = q_coupling_modes(CartanData::B2());
    for (auto& m : modes.modes) {
        CHECK(m.coeff > 0);
        bool has_mirror = false;
        for (auto& m2 : modes.modes)
            if (m2.i == m.i && m2.j == m.j && m2.r == -m.r && m2.coeff == m.coeff) has_mirror = true;
        CHECK(has_mirror);
    }
}

TEST_CASE("realization: brackets, pairing and casimirs") {
    for (auto cartan : {CartanData::A1(), CartanData::A2(), CartanData::B2()}) {
        auto z = ZeroModeRealization::build(cartan);
        // ad-invariance of Omega_g under every simple generator
        Matrix omega = z.omega_g();
        Matrix id = Matrix::identity(z.dim());
        for (int i = 0; i < cartan.rank(); ++i) {
            for (const Matrix* x : {&z.xp_simple(i), &z.xm_simple(i), &z.h_simple(i)}) {
                Matrix delta = kron(*x, id) + kron(id, *x);
                CHECK(commutator(delta, omega).is_zero());
            }
        }
    }

    // sl2 explicit tensors on C^2
    auto z = ZeroModeRealization::build(CartanData::A1());
    Matrix r = z.r_tensor();
    Matrix expect = kron(Matrix::unit(2, 2, 1, 0, Scalar::exact_int(1)),
                         Matrix::unit(2, 2, 0, 1, Scalar::exact_int(1)));
    CHECK(r == expect);

    // Omega_h acts on v+ (x) v+ with eigenvalue 1/2
    Matrix oh = z.omega_h();
    CHECK(oh(0, 0) == Scalar::exact_ratio(1, 2));

    // r(h) with alpha(h) = 2 (the coroot) equals -2 x- (x) x+
    Matrix rh = z.r_tensor_h({Scalar::exact_int(2)});
    CHECK(rh == Scalar::exact_int(-2) * expect);
}
