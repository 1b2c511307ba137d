#include "yrk/suite.hpp"

#include <chrono>
#include <cmath>

#include "yrk/jsonio.hpp"
#include "yrk/rfull.hpp"
#include "yrk/sampling.hpp"

namespace yrk {

namespace {

Scalar q(long p, long d = 1) { return Scalar::exact_ratio(p, d); }
Representation c2(const Scalar& a) { return Representation::evaluation_sl2(a, q(1)); }

void criterion_relations(Report& rep, std::uint64_t seed) {
    std::vector<Scalar> points{q(0), q(1), Scalar(mpq_class(-2), mpq_class(1))};
    std::vector<std::pair<std::string, Representation>> fixtures;
    for (size_t i = 0; i < points.size(); ++i)
        fixtures.push_back({"eval" + std::to_string(i), c2(points[i])});
    // dim-4 tensor pairs of the evaluation modules, both products
    Scalar s_std = q(1, 3), s_dr = q(7, 2);
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            fixtures.push_back({"std" + std::to_string(i) + std::to_string(j),
                                standard_tensor(c2(points[i]), c2(points[j]), s_std)});
            fixtures.push_back({"dr" + std::to_string(i) + std::to_string(j),
                                drinfeld_tensor(c2(points[i]), c2(points[j]), s_dr)});
        }
    // two dim-8 modules mixing both products
    fixtures.push_back({"std-of-dr",
                        standard_tensor(drinfeld_tensor(c2(points[0]), c2(points[1]), s_dr),
                                        c2(points[2]), q(0))});
    fixtures.push_back({"dr-of-std",
                        drinfeld_tensor(standard_tensor(c2(points[1]), c2(points[2]), q(0)),
                                        c2(points[0]), q(11, 2))});
    for (auto& [name, fix] : fixtures) {
        Report r = fix.verify_relations(seed);
        rep.add("criterion-1." + name, "defining relations, exact backend",
                "dim=" + std::to_string(fix.dim()), r.max_residual(), 0.0);
    }
}

void criterion_oracle_equality(Report& rep) {
    auto v2a = c2(q(13, 10));
    bool eq1 = rminus_recursive(c2(q(0)), v2a) == rminus_sl2_closed_form(c2(q(0)), v2a);
    rep.add_flag("criterion-2.eval-pair", "recursion equals the resummed closed form",
                 "C2(0) x C2(13/10)", eq1);
    auto v2b = standard_tensor(c2(q(7, 10)), c2(q(-21, 10)), q(0));
    bool eq2 = rminus_recursive(c2(q(0)), v2b) == rminus_sl2_closed_form(c2(q(0)), v2b);
    rep.add_flag("criterion-2.tensor-pair", "recursion equals the resummed closed form",
                 "C2(0) x (C2(7/10) x_0 C2(-21/10))", eq2);
}

void criterion_fundamental_factor(Report& rep) {
    Scalar b = q(3, 2), c = q(-5, 4);
    {
        auto v = c2(b);
        RatMat lhs = rminus_recursive(c2(q(0)), v);
        RatMat expect = RatMat::identity(4) + kron(RatMat(c2(q(0)).xm0(0)), v.current_xp(0));
        rep.add_flag("criterion-3.eval", "R-_{C2,V}(s) = 1 + x- (x) x+(s)", "V=C2(3/2)",
                     lhs == expect);
    }
    {
        auto v = standard_tensor(c2(b), c2(c), q(0));
        RatMat lhs = rminus_recursive(c2(q(0)), v);
        RatMat expect = RatMat::identity(8) + kron(RatMat(c2(q(0)).xm0(0)), v.current_xp(0));
        rep.add_flag("criterion-3.tensor", "R-_{C2,V}(s) = 1 + x- (x) x+(s)",
                     "V=C2(3/2) x_0 C2(-5/4)", lhs == expect);
    }
}

void criterion_one_jets(Report& rep) {
    std::vector<std::pair<Representation, Representation>> pairs;
    pairs.push_back({c2(q(0)), c2(q(0))});
    pairs.push_back({c2(q(1)), c2(Scalar(mpq_class(-2), mpq_class(1)))});
    pairs.push_back({standard_tensor(c2(q(0)), c2(q(3)), q(0)), c2(q(1))});
    int idx = 0;
    for (auto& [v1, v2] : pairs) {
        std::string tag = ".pair" + std::to_string(idx++);
        RatMat rm = rminus_recursive(v1, v2);
        Matrix jet = rm.series_at_infinity(1, "s").coeff_of_power(-1);
        rep.add("criterion-4.rminus" + tag, "s (R-(s) - 1) -> hbar r",
            "dims " + std::to_string(v1.dim()) + "x" + std::to_string(v2.dim()),
            (jet - v1.hbar() * r_tensor_on(v1, v2)).sup_norm(), 0.0);
        PowerSeries full = rfull(v1, v2, true).series(1);
        rep.add("criterion-4.full" + tag, "R(s) = 1 + hbar Omega_g / s + O(1/s^2)", "-",
                (full.coeff_of_power(-1) - v1.hbar() * omega_g_on(v1, v2)).sup_norm(), 0.0);
    }
}

void criterion_intertwine(Report& rep) {
    std::vector<std::pair<Representation, Representation>> pairs;
    pairs.push_back({c2(q(0)), c2(q(0))});
    pairs.push_back({c2(q(0)), standard_tensor(c2(q(1)), c2(Scalar(mpq_class(-2), mpq_class(1))), q(0))});
    pairs.push_back({drinfeld_tensor(c2(q(0)), c2(q(2)), q(4)), c2(q(1))});
    pairs.push_back({c2(q(1)), drinfeld_tensor(c2(q(0)), c2(q(-3)), q(5))});
    int idx = 0;
    for (auto& [v1, v2] : pairs) {
        Report r = check_intertwine_minus(v1, v2);
        rep.add("criterion-5.pair" + std::to_string(idx++),
                "R-(s) intertwines the shifted standard and Drinfeld actions",
                "dims " + std::to_string(v1.dim()) + "x" + std::to_string(v2.dim()),
                r.max_residual(), 0.0);
    }
}

void criterion_cocycle(Report& rep, std::uint64_t seed) {
    SamplePool pool(seed + 6, Backend::exact);
    std::vector<std::pair<Scalar, Scalar>> samples;
    for (int k = 0; k < 10; ++k) {
        Scalar s1 = pool.draw_avoiding({q(0), q(1), q(-2)});
        Scalar s2 = pool.draw_avoiding({q(0), q(1), q(-2)});
        samples.push_back({s1, s2});
    }
    Report r = check_cocycle(c2(q(0)), c2(q(1)), c2(q(-2)), samples);
    rep.add("criterion-6", "both cocycle identities at 10 seeded samples", "seeded",
            r.max_residual(), 0.0);
}

void criterion_abelian_closed_form(Report& rep) {
    auto a = abelian_A(c2(q(0)), c2(q(0)));
    Poly s = Poly::x();
    RatFun expect(s * (s + Poly(q(2))), (s + Poly::one()) * (s + Poly::one()));
    rep.add_flag("criterion-7.rational", "top eigenvalue of A(s) is s(s+2)/(s+1)^2 exactly",
                 "C2(0) x C2(0)", a.eigen_ratfun(0) == expect);
    auto val = rzero_updown_eigen(a, 0, {5.0, 0.0}, true, 1e-10);
    double gamma_form = std::tgamma(2.5) * std::tgamma(3.5) / (std::tgamma(3.0) * std::tgamma(3.0));
    rep.add("criterion-7.gamma", "Rup(5) matches G(5/2)G(7/2)/G(3)^2", "s=5",
            std::abs(val - gamma_form), 1e-8);
}

void criterion_difference_unitarity(Report& rep, std::uint64_t seed) {
    auto a = abelian_A(c2(q(0)), c2(q(0)));
    SamplePool pool(seed + 8, Backend::floating, 6.0);
    std::complex<double> el = 2.0;
    Matrix f = flip_matrix(2, 2, Backend::floating);
    double worst_diff = 0, worst_uni = 0;
    auto excluded = a.excluded_points(true);
    for (auto& p : a.excluded_points(false)) excluded.push_back(p);
    std::vector<Scalar> avoid;
    for (auto p : excluded)
        for (int n = -12; n <= 12; ++n)
            avoid.push_back(Scalar(p + 2.0 * static_cast<double>(n)));
    for (int k = 0; k < 5; ++k) {
        std::complex<double> s = pool.draw_avoiding(avoid, 5e-2).to_complex();
        Matrix lhs = rzero_updown(a, s + el, true, 1e-10);
        Matrix rhs = a.eval(s) * rzero_updown(a, s, true, 1e-10);
        worst_diff = std::max(worst_diff, (lhs - rhs).sup_norm());
        Matrix left = f * rzero_updown(a, -s, true, 1e-10) * f.inverse();
        Matrix right = rzero_updown(a, s, false, 1e-10).inverse();
        worst_uni = std::max(worst_uni, (left - right).sup_norm());
    }
    rep.add("criterion-8.difference", "Rup(s + l*hbar) = A(s) Rup(s)", "5 seeded s", worst_diff,
            1e-8);
    rep.add("criterion-8.unitarity", "flip Rup(-s) flip = Rdown(s)^{-1}", "5 seeded s",
            worst_uni, 1e-8);
}

void criterion_asymptotics(Report& rep) {
    auto v1 = c2(q(0)), v2 = c2(q(0));
    auto a = abelian_A(v1, v2);
    PowerSeries ser = rzero_formal(v1, v2, 5);
    std::complex<double> s(50.0, 0.0);
    Matrix val = rzero_updown(a, s, true, 1e-12);
    double prev = 1e300;
    bool monotone = true;
    double final_err = 0;
    for (int k = 0; k <= 4; ++k) {
        final_err = (val - ser.eval_partial(s, k)).sup_norm();
        if (final_err >= prev) monotone = false;
        prev = final_err;
    }
    rep.add("criterion-9.error", "|Rup(50h) - partial sums through order 4| <= 1e-6", "s=50",
            final_err, 1e-6);
    rep.add_flag("criterion-9.monotone", "errors improve monotonically for orders 0..4", "s=50",
                 monotone);
}

std::vector<std::pair<Scalar, Scalar>> seeded_exact_pairs(std::uint64_t seed, int count) {
    SamplePool pool(seed, Backend::exact, 4.0);
    std::vector<std::pair<Scalar, Scalar>> out;
    for (int k = 0; k < count; ++k)
        out.push_back({pool.draw_avoiding({}, 0.0), pool.draw_avoiding({}, 0.0)});
    return out;
}

void criterion_qybe(Report& rep, std::uint64_t seed) {
    auto samples = seeded_exact_pairs(seed + 10, 5);
    samples.front() = {q(31, 10), q(27, 10)};
    Report r = check_qybe(c2(q(0)), c2(q(2, 5)), c2(q(-9, 10)), true, samples, 1e-7);
    rep.add("criterion-10", "QYBE residual on the evaluation triple", "5 seeded (s1,s2)",
            r.max_residual(), 1e-7);
}

void criterion_cabling(Report& rep, std::uint64_t seed) {
    auto samples = seeded_exact_pairs(seed + 11, 2);
    samples.front() = {q(31, 10), q(27, 10)};
    Report r = check_full_cabling_unitarity(c2(q(0)), c2(q(2, 5)), c2(q(-9, 10)), true, samples,
                                            1e-7);
    rep.add("criterion-11", "cabling, morphism, shift covariance and unitarity", "seeded",
            r.max_residual(), 1e-7);
}

void criterion_monodromy(Report& rep) {
    Report r = monodromy_eta0(c2(q(0)), c2(q(0)), {{0.3, 0.0}, {0.7, 0.0}, {1.1, 0.0}}, 1e-8);
    rep.merge(r, "criterion-12");
}

void criterion_couplings(Report& rep) {
    auto a1 = q_coupling_matrix(CartanData::A1());
    rep.add_flag("criterion-13.rank1", "coupling matrix of the rank-1 type is 1", "-",
                 a1[0][0] == LaurentPoly::q_number(1));
    auto a2 = q_coupling_matrix(CartanData::A2());
    LaurentPoly qpq;
    qpq.lo = -1;
    qpq.c = {1, 0, 1};
    bool ok = a2[0][0] == qpq && a2[1][1] == qpq && a2[0][1] == LaurentPoly::q_number(1) &&
              a2[1][0] == LaurentPoly::q_number(1);
    rep.add_flag("criterion-13.rank2", "coupling matrix [[q+1/q, 1],[1, q+1/q]]", "-", ok);
    bool nn = true;
    for (auto cartan : {CartanData::A1(), CartanData::A2(), CartanData::B2()}) {
        auto cq = q_coupling_matrix(cartan); // throws if the identity fails
        for (auto& row : cq)
            for (auto& p : row) nn = nn && p.nonneg_integer() && p.palindromic();
    }
    rep.add_flag("criterion-13.nonneg", "coupling coefficients are nonnegative integers", "-", nn);
}

void criterion_g_series(Report& rep) {
    auto c = g_series(9);
    bool coeffs_ok = c[0] == 1 && c[1] == mpq_class(1, 2) && c[2] == mpq_class(1, 6) &&
                     c[3] == 0 && c[4] == mpq_class(-1, 30);
    rep.add_flag("criterion-14.coefficients", "g = 1/x + 1/2x^2 + 1/6x^3 + 0 - 1/30x^5 + ...",
                 "-", coeffs_ok);
    PowerSeries g = g_series_powerseries(9);
    PowerSeries gc = g.recenter(q(1, 2));
    PowerSeries sum = gc + gc.scale_arg(q(-1));
    rep.add_flag("criterion-14.antisymmetry", "g(1/2 + x) = -g(1/2 - x) through order 8", "-",
                 sum.truncate_to(8).is_zero());
}

void criterion_negative_control(Report& rep) {
    auto good = c2(q(0));
    auto bad = Representation::from_generators(
        good.cartan(), good.hbar(), {good.xi0(0)}, {good.xp0(0)},
        {Scalar::exact_int(2) * good.xm0(0)}, {good.t1(0)}, good.poles(), Provenance{});
    Report r = bad.verify_relations(2);
    rep.add_flag("criterion-15.relations", "corrupted module fails the relation battery",
                 "x-_0 scaled by 2, residual " + std::to_string(r.max_residual()),
                 !r.all_pass() && r.max_residual() > 1e-2);
    Report rq = check_qybe(bad, c2(q(2, 5)), c2(q(-9, 10)), true,
                           {{Scalar::flt(3.1), Scalar::flt(2.7)}}, 1e-7);
    rep.add_flag("criterion-15.qybe", "corrupted module fails QYBE",
                 "residual " + std::to_string(rq.max_residual()), rq.max_residual() > 1e-2);
}

} // namespace

Report acceptance_battery(std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "full";
    rep.seed = seed;

    criterion_relations(rep, seed);
    criterion_oracle_equality(rep);
    criterion_fundamental_factor(rep);
    criterion_one_jets(rep);
    criterion_intertwine(rep);
    criterion_cocycle(rep, seed);
    criterion_abelian_closed_form(rep);
    criterion_difference_unitarity(rep, seed);
    criterion_asymptotics(rep);
    criterion_qybe(rep, seed);
    criterion_cabling(rep, seed);
    criterion_monodromy(rep);
    criterion_couplings(rep);
    criterion_g_series(rep);
    criterion_negative_control(rep);

    std::string blob;
    for (auto& c : rep.checks) blob += c.id + "|" + c.anchor + "|" + c.samples + ";";
    rep.input_hash = content_hash(blob + std::to_string(seed));
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace yrk
