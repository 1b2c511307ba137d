#include "yrk/drinfeld.hpp"

namespace yrk {

namespace {

Scalar int_like(long v, Backend bk) {
    return bk == Backend::exact ? Scalar::exact_int(v) : Scalar::flt(static_cast<double>(v));
}

void check_disjoint(const Representation& v, const Representation& w, const Scalar& s) {
    for (const auto& p : v.poles())
        for (const auto& q : w.poles()) {
            Scalar shifted = p + s;
            bool collide = shifted.is_exact() ? shifted == q
                                              : std::abs(shifted.to_complex() - q.to_complex()) <
                                                    RatFunOptions::pole_cluster_tol;
            if (collide)
                throw math_domain_error("pole collision: sigma(V)+s meets sigma(W) at " + q.str());
        }
}

// Residue of pole_side(v) * analytic_side(v -+ s) at v = p, rational in s:
// sum_m c_{p,m} f^{(m-1)}(p + arg_sign * s) / (m-1)!.
RatFun residue_of_pair(const RatFun& pole_side, const RatFun& analytic_side, const Scalar& p,
                       int arg_sign) {
    std::vector<Scalar> pp = principal_part_at(pole_side, p);
    if (pp.empty()) return RatFun::zero();
    RatFun acc;
    RatFun der = analytic_side;
    Scalar fact = p.one_like();
    Backend bk = p.backend();
    for (size_t m = 0; m < pp.size(); ++m) {
        if (m > 0) {
            der = der.derivative();
            fact = fact * int_like(static_cast<long>(m), bk);
        }
        if (pp[m].is_zero()) continue;
        RatFun shifted = der.compose_affine(p, int_like(arg_sign, bk));
        acc += (pp[m] / fact) * shifted;
    }
    return acc;
}

} // namespace

RatMat residue_kron_shift_left(const RatMat& left, const RatMat& right,
                               const std::vector<Scalar>& poles) {
    int n1 = left.rows(), n2 = right.rows();
    RatMat out(n1 * n2, n1 * n2, left.backend());
    for (const auto& p : poles)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int j2 = 0; j2 < n2; ++j2) {
                const RatFun& b = right(i2, j2);
                if (b.is_zero()) continue;
                for (int i1 = 0; i1 < n1; ++i1)
                    for (int j1 = 0; j1 < n1; ++j1) {
                        const RatFun& a = left(i1, j1);
                        if (a.is_zero()) continue;
                        RatFun term = residue_of_pair(b, a, p, -1);
                        if (!term.is_zero()) out(i1 * n2 + i2, j1 * n2 + j2) += term;
                    }
            }
    return out;
}

RatMat residue_kron_shift_right(const RatMat& left, const RatMat& right,
                                const std::vector<Scalar>& poles) {
    int n1 = left.rows(), n2 = right.rows();
    RatMat out(n1 * n2, n1 * n2, left.backend());
    for (const auto& q : poles)
        for (int i1 = 0; i1 < n1; ++i1)
            for (int j1 = 0; j1 < n1; ++j1) {
                const RatFun& a = left(i1, j1);
                if (a.is_zero()) continue;
                for (int i2 = 0; i2 < n2; ++i2)
                    for (int j2 = 0; j2 < n2; ++j2) {
                        const RatFun& b = right(i2, j2);
                        if (b.is_zero()) continue;
                        RatFun term = residue_of_pair(a, b, q, +1);
                        if (!term.is_zero()) out(i1 * n2 + i2, j1 * n2 + j2) += term;
                    }
            }
    return out;
}

SymbolicModule drinfeld_tensor_symbolic(const Representation& v, const Representation& w) {
    if (!v.same_theory(w)) throw math_domain_error("tensor factors over different data");
    SymbolicModule m;
    m.cartan = v.cartan();
    m.hbar = v.hbar();
    m.dim = v.dim() * w.dim();
    Backend bk = v.backend();
    Matrix iv = Matrix::identity(v.dim(), bk);
    Matrix iw = Matrix::identity(w.dim(), bk);
    RatFun s = RatFun::x(bk);
    Scalar hinv = v.hbar().inverse();
    for (int i = 0; i < v.rank(); ++i) {
        m.xi0.push_back(RatMat(kron(v.xi0(i), iw) + kron(iv, w.xi0(i))));
        m.t1.push_back(RatMat(kron(v.t1(i), iw) + kron(iv, w.t1(i))) +
                       s * RatMat(kron(v.xi0(i), iw)));
        RatMat xp = RatMat(kron(v.xp0(i), iw)) +
                    hinv * residue_kron_shift_left(v.current_xi(i), w.current_xp(i), w.poles());
        m.xp0.push_back(std::move(xp));
        RatMat xm = RatMat(kron(iv, w.xm0(i))) +
                    hinv * residue_kron_shift_right(v.current_xm(i), w.current_xi(i), v.poles());
        m.xm0.push_back(std::move(xm));
    }
    return m;
}

SymbolicModule standard_tensor_symbolic(const Representation& v, const Representation& w) {
    if (!v.same_theory(w)) throw math_domain_error("tensor factors over different data");
    SymbolicModule m;
    m.cartan = v.cartan();
    m.hbar = v.hbar();
    m.dim = v.dim() * w.dim();
    Backend bk = v.backend();
    Matrix iv = Matrix::identity(v.dim(), bk);
    Matrix iw = Matrix::identity(w.dim(), bk);
    RatFun s = RatFun::x(bk);
    for (int i = 0; i < v.rank(); ++i) {
        m.xi0.push_back(RatMat(kron(v.xi0(i), iw) + kron(iv, w.xi0(i))));
        m.xp0.push_back(RatMat(kron(v.xp0(i), iw) + kron(iv, w.xp0(i))));
        m.xm0.push_back(RatMat(kron(v.xm0(i), iw) + kron(iv, w.xm0(i))));
        m.t1.push_back(RatMat(kron(v.t1(i), iw) + kron(iv, w.t1(i)) +
                              coproduct_correction(v, w, i)) +
                       s * RatMat(kron(v.xi0(i), iw)));
    }
    return m;
}

Representation drinfeld_tensor(const Representation& v, const Representation& w, const Scalar& s) {
    check_disjoint(v, w, s);
    SymbolicModule sym = drinfeld_tensor_symbolic(v, w);
    std::vector<Matrix> xi0, xp0, xm0, t1;
    for (int i = 0; i < v.rank(); ++i) {
        xi0.push_back(sym.xi0[static_cast<size_t>(i)].eval(s));
        xp0.push_back(sym.xp0[static_cast<size_t>(i)].eval(s));
        xm0.push_back(sym.xm0[static_cast<size_t>(i)].eval(s));
        t1.push_back(sym.t1[static_cast<size_t>(i)].eval(s));
    }
    std::vector<Scalar> poles = v.shifted_poles(s);
    for (const auto& p : w.poles()) poles.push_back(p);
    Provenance prov;
    prov.kind = Provenance::Kind::drinfeld_tensor;
    prov.param = s;
    prov.left = std::make_shared<Representation>(v);
    prov.right = std::make_shared<Representation>(w);
    return Representation::from_generators(v.cartan(), v.hbar(), std::move(xi0), std::move(xp0),
                                           std::move(xm0), std::move(t1), std::move(poles),
                                           std::move(prov));
}

// ------------------------------------------------------- currents at fixed s

RatMat drinfeld_current_xi(const Representation& v, const Representation& w, const Scalar& s,
                           int node) {
    RatMat a = v.current_xi(node).compose_affine(-s, s.one_like());
    return kron(a, w.current_xi(node));
}

namespace {

// Entrywise sum of principal parts at the given points, as a function of
// the outer variable.
RatMat principal_parts_sum(const RatMat& h, const std::vector<Scalar>& points) {
    RatMat out(h.rows(), h.cols(), h.backend());
    for (const auto& p : points) {
        Poly lin = Poly::linear_root(p);
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < h.cols(); ++j) {
                if (h(i, j).is_zero()) continue;
                auto pp = principal_part_at(h(i, j), p);
                Poly denpow = Poly::one(h.backend());
                for (size_t m = 0; m < pp.size(); ++m) {
                    denpow = denpow * lin;
                    if (!pp[m].is_zero()) out(i, j) += RatFun(Poly(pp[m]), denpow);
                }
            }
    }
    return out;
}

} // namespace

RatMat drinfeld_current_xp(const Representation& v, const Representation& w, const Scalar& s,
                           int node) {
    Matrix iw = Matrix::identity(w.dim(), w.backend());
    RatMat first = kron(v.current_xp(node).compose_affine(-s, s.one_like()), RatMat(iw));
    // the contour around sigma(W) picks up the principal parts of
    // xi_V(v-s) (x) x+_W(v) there; the result is the function of u outside
    RatMat integrand =
        kron(v.current_xi(node).compose_affine(-s, s.one_like()), w.current_xp(node));
    return first + principal_parts_sum(integrand, w.poles());
}

RatMat drinfeld_current_xm(const Representation& v, const Representation& w, const Scalar& s,
                           int node) {
    Matrix iv = Matrix::identity(v.dim(), v.backend());
    RatMat second = kron(RatMat(iv), w.current_xm(node));
    RatMat integrand =
        kron(v.current_xm(node).compose_affine(-s, s.one_like()), w.current_xi(node));
    return second + principal_parts_sum(integrand, v.shifted_poles(s));
}

// --------------------------------------------------------------- series form

DrinfeldSeries drinfeld_tensor_series(const Representation& v, const Representation& w, int node,
                                      int order) {
    Backend bk = v.backend();
    int dim = v.dim() * w.dim();
    Matrix iv = Matrix::identity(v.dim(), bk);
    Matrix iw = Matrix::identity(w.dim(), bk);
    DrinfeldSeries out;

    out.xi0 = PowerSeries("s", 0, {kron(v.xi0(node), iw) + kron(iv, w.xi0(node))});
    out.t1 = PowerSeries("s", 1,
                         {kron(v.xi0(node), iw), kron(v.t1(node), iw) + kron(iv, w.t1(node))});

    std::vector<Matrix> cp(static_cast<size_t>(order) + 1, Matrix(dim, dim, bk));
    std::vector<Matrix> cm = cp;
    cp[0] = kron(v.xp0(node), iw) + kron(iv, w.xp0(node));
    cm[0] = kron(v.xm0(node), iw) + kron(iv, w.xm0(node));
    for (int bigN = 0; bigN + 1 <= order; ++bigN) {
        Matrix accp(dim, dim, bk), accm(dim, dim, bk);
        Scalar binom = int_like(1, bk);
        for (int n = 0; n <= bigN; ++n) {
            if (n > 0) binom = binom * int_like(bigN - n + 1, bk) / int_like(n, bk);
            // raising tail carries (-1)^{n+1} on the xi index; the expansion
            // of xi(w+s) puts (-1)^n on the lowering index instead
            Scalar sp = int_like(n % 2 == 0 ? -1 : 1, bk) * binom;
            Scalar sm = int_like(n % 2 == 0 ? 1 : -1, bk) * binom;
            accp = accp + sp * kron(v.mode_xi(node, n), w.mode_xp(node, bigN - n));
            accm = accm + sm * kron(v.mode_xm(node, n), w.mode_xi(node, bigN - n));
        }
        cp[static_cast<size_t>(bigN) + 1] = v.hbar() * accp;
        cm[static_cast<size_t>(bigN) + 1] = v.hbar() * accm;
    }
    out.xp0 = PowerSeries("s", 0, std::move(cp));
    out.xm0 = PowerSeries("s", 0, std::move(cm));
    return out;
}

// ----------------------------------------------------------- coassociativity

Report coassociativity_check(const Representation& v1, const Representation& v2,
                             const Representation& v3, const Scalar& s1, const Scalar& s2) {
    Report rep;
    rep.suite = "drinfeld-coassociativity";
    auto residual = [](const Matrix& a, const Matrix& b) { return (a - b).sup_norm(); };

    Representation left = drinfeld_tensor(drinfeld_tensor(v1, v2, s1), v3, s2);
    Representation right = drinfeld_tensor(v1, drinfeld_tensor(v2, v3, s2), s1 + s2);
    for (int i = 0; i < v1.rank(); ++i) {
        std::string node = std::to_string(i);
        std::string pts = "s1=" + s1.str() + ",s2=" + s2.str();
        rep.add("coassoc.xi0." + node, "(V1 dx_s1 V2) dx_s2 V3 = V1 dx_{s1+s2} (V2 dx_s2 V3)",
                pts, residual(left.xi0(i), right.xi0(i)), 0.0);
        rep.add("coassoc.xp0." + node, "same identity, x+_0 action", pts,
                residual(left.xp0(i), right.xp0(i)), 0.0);
        rep.add("coassoc.xm0." + node, "same identity, x-_0 action", pts,
                residual(left.xm0(i), right.xm0(i)), 0.0);
        rep.add("coassoc.t1." + node, "same identity, t_1 action", pts,
                residual(left.t1(i), right.t1(i)), 0.0);
    }

    Representation triv = Representation::trivial(v1.cartan(), v1.hbar());
    Representation withtriv = drinfeld_tensor(drinfeld_tensor(v1, triv, s1), v3, s2);
    Representation straight = drinfeld_tensor(v1.shifted(s1), v3, s2);
    for (int i = 0; i < v1.rank(); ++i)
        rep.add("coassoc.counit." + std::to_string(i), "V dx_s 1 = V(s)", "-",
                residual(withtriv.t1(i), straight.t1(i)), 0.0);

    Scalar t = s2;
    Representation lhs = drinfeld_tensor(v1.shifted(t), v2, s1);
    Representation rhs = drinfeld_tensor(v1, v2, s1 + t);
    for (int i = 0; i < v1.rank(); ++i)
        rep.add("coassoc.shift." + std::to_string(i), "V(t) dx_s W = V dx_{s+t} W", "-",
                residual(lhs.t1(i), rhs.t1(i)) + residual(lhs.xp0(i), rhs.xp0(i)) +
                    residual(lhs.xm0(i), rhs.xm0(i)),
                0.0);
    return rep;
}

} // namespace yrk
