#include "yrk/rminus.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace yrk {

namespace {

Scalar int_like(long v, Backend bk) {
    return bk == Backend::exact ? Scalar::exact_int(v) : Scalar::flt(static_cast<double>(v));
}

std::vector<Scalar> default_h(const Representation& v) {
    return std::vector<Scalar>(static_cast<size_t>(v.rank()),
                               v.backend() == Backend::exact ? Scalar::exact_int(1)
                                                             : Scalar::flt(1.0));
}

// Solves (DA) beta = delta for a nonzero integer beta >= 0; nullopt otherwise.
std::optional<std::vector<int>> cone_coordinates(const CartanData& c,
                                                 const std::vector<long>& delta) {
    int n = c.rank();
    Matrix rhs(n, 1);
    for (int i = 0; i < n; ++i) rhs(i, 0) = Scalar::exact_int(delta[static_cast<size_t>(i)]);
    Matrix beta = c.sym_cartan_inverse() * rhs;
    std::vector<int> out;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        const mpq_class& q = beta(i, 0).exact_re();
        if (beta(i, 0).exact_im() != 0 || q.get_den() != 1 || q < 0) return std::nullopt;
        long v = q.get_num().get_si();
        out.push_back(static_cast<int>(v));
        if (v != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    return out;
}

struct EigenCoords {
    Matrix e1, e1i, e2, e2i;
    Matrix e, ei;
    std::vector<std::vector<long>> w1, w2;
};

EigenCoords eigen_coords(const Representation& v1, const Representation& v2) {
    EigenCoords c;
    c.e1 = v1.weights().basis();
    c.e1i = v1.weights().basis_inv();
    c.e2 = v2.weights().basis();
    c.e2i = v2.weights().basis_inv();
    c.e = kron(c.e1, c.e2);
    c.ei = kron(c.e1i, c.e2i);
    for (int col = 0; col < v1.dim(); ++col) {
        std::vector<long> w;
        for (int i = 0; i < v1.rank(); ++i) w.push_back(v1.weights().col_weight(col, i));
        c.w1.push_back(std::move(w));
    }
    for (int col = 0; col < v2.dim(); ++col) {
        std::vector<long> w;
        for (int i = 0; i < v2.rank(); ++i) w.push_back(v2.weights().col_weight(col, i));
        c.w2.push_back(std::move(w));
    }
    return c;
}

// weights are integral; exact coordinates are required for the block split
std::vector<long> diff_vec(const std::vector<long>& hi, const std::vector<long>& lo) {
    std::vector<long> d;
    for (size_t i = 0; i < hi.size(); ++i) d.push_back(hi[i] - lo[i]);
    return d;
}

} // namespace

TriangularBlockSeries rminus_blocks(const Representation& v1, const Representation& v2,
                                    std::vector<Scalar> alpha_h) {
    if (!v1.same_theory(v2)) throw math_domain_error("factors over different data");
    if (alpha_h.empty()) alpha_h = default_h(v1);
    const CartanData& cd = v1.cartan();
    Backend bk = v1.backend();
    int n1 = v1.dim(), n2 = v2.dim();
    int dim = n1 * n2;

    for (const auto& beta : cd.positive_roots())
        if (CartanData::beta_of_h(beta, alpha_h).is_zero())
            throw math_domain_error("Cartan direction h is not regular");

    TriangularBlockSeries out;
    out.dim = dim;
    out.backend = bk;

    EigenCoords ec = eigen_coords(v1, v2);

    struct Block {
        std::vector<int> beta;
        std::vector<std::pair<int, int>> pairs1; // (a,b): wt(a) = wt(b) - beta
        std::vector<std::pair<int, int>> pairs2; // (c,d): wt(c) = wt(d) + beta
    };
    std::map<std::vector<int>, Block> blocks;
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            auto beta = cone_coordinates(cd, diff_vec(ec.w1[static_cast<size_t>(b)],
                                                      ec.w1[static_cast<size_t>(a)]));
            if (!beta) continue;
            blocks[*beta].beta = *beta;
            blocks[*beta].pairs1.push_back({a, b});
        }
    for (int c = 0; c < n2; ++c)
        for (int d = 0; d < n2; ++d) {
            auto beta = cone_coordinates(cd, diff_vec(ec.w2[static_cast<size_t>(c)],
                                                      ec.w2[static_cast<size_t>(d)]));
            if (!beta) continue;
            auto it = blocks.find(*beta);
            if (it != blocks.end()) it->second.pairs2.push_back({c, d});
        }

    std::vector<Block> todo;
    for (auto& [beta, blk] : blocks)
        if (!blk.pairs1.empty() && !blk.pairs2.empty()) todo.push_back(blk);
    std::sort(todo.begin(), todo.end(), [](const Block& x, const Block& y) {
        return CartanData::height(x.beta) < CartanData::height(y.beta);
    });
    if (todo.empty()) return out;

    Matrix t1h = ec.e1i * v1.t_of_h(alpha_h) * ec.e1;
    Matrix t2h = ec.e2i * v2.t_of_h(alpha_h) * ec.e2;
    Matrix mt = kron(t1h, Matrix::identity(n2, bk)) + kron(Matrix::identity(n1, bk), t2h);

    const auto& z = realization_for(cd);
    const auto& roots = cd.positive_roots();
    std::vector<Matrix> xm1list, xp2list;
    {
        std::vector<Matrix> raw_xm, raw_xp;
        for (int i = 0; i < v1.rank(); ++i) {
            raw_xm.push_back(v1.xm0(i));
            raw_xp.push_back(v2.xp0(i));
        }
        for (size_t r = 0; r < roots.size(); ++r) {
            xm1list.push_back(ec.e1i * z.xm_root_on(static_cast<int>(r), raw_xm) * ec.e1);
            xp2list.push_back(ec.e2i * z.xp_root_on(static_cast<int>(r), raw_xp) * ec.e2);
        }
    }

    std::map<std::vector<int>, RatMat> done;
    for (const auto& blk : todo) {
        RatMat rhs(dim, dim, bk);
        for (size_t r = 0; r < roots.size(); ++r) {
            std::vector<int> rest = blk.beta;
            bool ok = true;
            for (size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= roots[r][i];
                if (rest[i] < 0) { ok = false; break; }
            }
            if (!ok) continue;
            Matrix step = kron(xm1list[r], xp2list[r]);
            if (step.is_zero()) continue;
            Scalar ah = CartanData::beta_of_h(roots[r], alpha_h);
            if (CartanData::height(rest) == 0) {
                rhs += ah * RatMat(step);
            } else {
                auto it = done.find(rest);
                if (it == done.end()) continue;
                rhs += ah * (it->second * RatMat(step));
            }
        }
        rhs = v1.hbar() * rhs;
        if (rhs.is_zero()) continue;

        std::vector<std::pair<int, int>> entries;
        for (auto [a, b] : blk.pairs1)
            for (auto [c, d] : blk.pairs2) entries.push_back({a * n2 + c, b * n2 + d});
        int k = static_cast<int>(entries.size());
        Scalar beta_h = CartanData::beta_of_h(blk.beta, alpha_h);

        // ad(mt) restricted to the block: [mt, E_{rc}] contributes
        // mt(r',r) to E_{r'c} and -mt(c,c') to E_{rc'}
        RatMat sys(k, k, bk);
        for (int col = 0; col < k; ++col) {
            auto [r0, c0] = entries[static_cast<size_t>(col)];
            for (int row = 0; row < k; ++row) {
                auto [r1, c1] = entries[static_cast<size_t>(row)];
                Scalar val = int_like(0, bk);
                if (c1 == c0) val += mt(r1, r0);
                if (r1 == r0) val -= mt(c0, c1);
                if (!val.is_zero()) sys(row, col) = RatFun(Poly(-val));
                if (row == col)
                    sys(row, col) += RatFun(Poly(std::vector<Scalar>{int_like(0, bk), beta_h}));
            }
        }
        RatMat rhs_vec(k, 1, bk);
        for (int row = 0; row < k; ++row) {
            auto [r1, c1] = entries[static_cast<size_t>(row)];
            rhs_vec(row, 0) = rhs(r1, c1);
        }
        RatMat sol = rat_linear_solve(sys, rhs_vec);

        RatMat blockmat(dim, dim, bk);
        for (int row = 0; row < k; ++row) {
            auto [r1, c1] = entries[static_cast<size_t>(row)];
            blockmat(r1, c1) = sol(row, 0);
        }
        done[blk.beta] = blockmat;
    }

    for (auto& [beta, blockmat] : done)
        out.blocks.push_back({beta, blockmat.conjugate(ec.e, ec.ei)});
    std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& x, const auto& y) {
        return CartanData::height(x.first) < CartanData::height(y.first);
    });
    return out;
}

RatMat rminus_recursive(const Representation& v1, const Representation& v2,
                        std::vector<Scalar> alpha_h) {
    return rminus_blocks(v1, v2, std::move(alpha_h)).assemble();
}

RatMat rminus_sl2_closed_form(const Representation& v1, const Representation& v2) {
    if (v1.cartan().type() != "A1") throw math_domain_error("closed form is rank-1 only");
    Backend bk = v1.backend();
    int dim = v1.dim() * v2.dim();
    RatMat xm = v1.current_xm(0);
    RatMat xp = v2.current_xp(0);

    std::vector<RatMat> omega;
    RatMat xmk = xm, xpk = xp;
    for (int k = 1;; ++k) {
        if (xmk.is_zero() || xpk.is_zero()) break;
        RatMat w = residue_kron_shift_left(xmk, xpk, v2.poles());
        Scalar coef = int_like(k % 2 == 0 ? 1 : -1, bk) / (int_like(k, bk) * v1.hbar());
        omega.push_back(coef * w);
        xmk = xmk * xm;
        xpk = xpk * xp;
    }
    int kmax = static_cast<int>(omega.size());

    // resummation: P(0) = I, P(n) = (1/n) sum_{k <= min(kmax,n)} P(n-k) omega_k;
    // the prefix-sum weights 1/(k1(k1+k2)...) fold into the 1/n at each layer
    RatMat total = RatMat::identity(dim, bk);
    std::vector<RatMat> ps{RatMat::identity(dim, bk)};
    for (int n = 1; n <= 4 * dim && kmax > 0; ++n) {
        RatMat acc(dim, dim, bk);
        for (int k = 1; k <= std::min(kmax, n); ++k) {
            if (ps[static_cast<size_t>(n - k)].is_zero()) continue;
            acc += ps[static_cast<size_t>(n - k)] * omega[static_cast<size_t>(k - 1)];
        }
        if (!acc.is_zero()) acc = int_like(n, bk).inverse() * acc;
        total += acc;
        ps.push_back(std::move(acc));
        bool window_zero = true;
        for (int back = 0; back < kmax && n - back >= 1; ++back)
            if (!ps[static_cast<size_t>(n - back)].is_zero()) { window_zero = false; break; }
        if (window_zero) break;
    }
    return total;
}

RatMat rplus_from_rminus(const Representation& v1, const Representation& v2,
                         std::vector<Scalar> alpha_h) {
    RatMat rm21 = rminus_recursive(v2, v1, std::move(alpha_h));
    Backend bk = v1.backend();
    RatMat inv = rat_inverse(rm21.compose_affine(int_like(0, bk), int_like(-1, bk)));
    Matrix p = flip_matrix(v2.dim(), v1.dim(), bk); // V2 (x) V1 -> V1 (x) V2
    Matrix pinv = flip_matrix(v1.dim(), v2.dim(), bk);
    return inv.conjugate(p, pinv);
}

// --------------------------------------------------------------------- checks

namespace {

double sym_residual(const RatMat& resid) {
    if (resid.is_zero()) return 0.0;
    double worst = 0;
    int done = 0;
    for (long v = 3; v < 80 && done < 3; v += 2) {
        Scalar pt = resid.backend() == Backend::exact ? Scalar::exact_int(v)
                                                      : Scalar::flt(static_cast<double>(v));
        try {
            worst = std::max(worst, resid.eval(pt).sup_norm());
            ++done;
        } catch (const math_domain_error&) {
        }
    }
    return std::max(worst, 1e-300); // flag nonzero even if samples dodge it
}

} // namespace

Report check_intertwine_minus(const Representation& v1, const Representation& v2) {
    Report rep;
    rep.suite = "rminus-intertwine";
    RatMat r = rminus_recursive(v1, v2);
    SymbolicModule km = standard_tensor_symbolic(v1, v2);
    SymbolicModule dr = drinfeld_tensor_symbolic(v1, v2);

    for (int i = 0; i < v1.rank(); ++i) {
        std::string node = std::to_string(i);
        RatMat rt = r * km.t1[static_cast<size_t>(i)] - dr.t1[static_cast<size_t>(i)] * r;
        rep.add("intertwine.t1." + node, "R-(s) D_s(t_i1) = Dd_s(t_i1) R-(s)", "symbolic s",
                sym_residual(rt), 0.0);
        RatMat rxp = r * km.xp0[static_cast<size_t>(i)] - dr.xp0[static_cast<size_t>(i)] * r;
        rep.add("intertwine.xp0." + node, "R-(s) D_s(x+_i0) = Dd_s(x+_i0) R-(s)", "symbolic s",
                sym_residual(rxp), 0.0);
        RatMat rxm = r * km.xm0[static_cast<size_t>(i)] - dr.xm0[static_cast<size_t>(i)] * r;
        rep.add("intertwine.xm0." + node, "R-(s) D_s(x-_i0) = Dd_s(x-_i0) R-(s)", "symbolic s",
                sym_residual(rxm), 0.0);
        RatMat rxi = r * km.xi0[static_cast<size_t>(i)] - dr.xi0[static_cast<size_t>(i)] * r;
        rep.add("intertwine.xi0." + node, "R-(s) commutes with xi_i0", "symbolic s",
                sym_residual(rxi), 0.0);
    }

    {
        PowerSeries ser = r.series_at_infinity(1, "s");
        Matrix jet = ser.coeff_of_power(-1);
        Matrix expect = v1.hbar() * r_tensor_on(v1, v2);
        rep.add("one-jet", "R-(s) = 1 + hbar r / s + O(1/s^2)", "-", (jet - expect).sup_norm(),
                0.0);
        rep.add("one-jet.identity", "R-(infinity) = 1", "-",
                (ser.coeff_of_power(0) - Matrix::identity(r.rows(), r.backend())).sup_norm(), 0.0);
    }

    {
        Backend bk = v1.backend();
        Scalar a = int_like(2, bk), b = int_like(-3, bk);
        RatMat shifted = rminus_recursive(v1.shifted(a), v2.shifted(b));
        RatMat expect = r.compose_affine(a - b, int_like(1, bk));
        rep.add("translation", "(tau_a x tau_b) R-(s) = R-(s+a-b)", "a=2, b=-3",
                sym_residual(shifted - expect), 0.0);
    }
    return rep;
}

Report check_cocycle(const Representation& v1, const Representation& v2,
                     const Representation& v3,
                     const std::vector<std::pair<Scalar, Scalar>>& samples) {
    Report rep;
    rep.suite = "rminus-cocycle";
    Backend bk = v1.backend();
    int d1 = v1.dim(), d2 = v2.dim(), d3 = v3.dim();
    std::vector<int> dims{d1, d2, d3};

    RatMat r12 = rminus_recursive(v1, v2);
    RatMat r23 = rminus_recursive(v2, v3);

    int resampled = 0;
    for (auto [s1, s2] : samples) {
        for (int attempt = 0;; ++attempt) {
            try {
                Representation v12d = drinfeld_tensor(v1, v2, s1);
                Representation v23d = drinfeld_tensor(v2, v3, s2);
                Matrix lhs = rminus_recursive(v12d, v3).eval(s2) *
                             act_on_legs(r12.eval(s1), 0, 1, dims);
                Matrix rhs = rminus_recursive(v1, v23d).eval(s1 + s2) *
                             act_on_legs(r23.eval(s2), 1, 2, dims);
                rep.add("cocycle.drinfeld",
                        "R-_{V1 dx V2,V3}(s2) R-_{12}(s1) = R-_{V1,V2 dx V3}(s1+s2) R-_{23}(s2)",
                        "s1=" + s1.str() + ",s2=" + s2.str(), (lhs - rhs).sup_norm(), 0.0);

                Representation v12k = standard_tensor(v1, v2, s1);
                Representation v23k = standard_tensor(v2, v3, s2);
                Matrix lhs2 = act_on_legs(r12.eval(s1), 0, 1, dims) *
                              rminus_recursive(v12k, v3).eval(s2);
                Matrix rhs2 = act_on_legs(r23.eval(s2), 1, 2, dims) *
                              rminus_recursive(v1, v23k).eval(s1 + s2);
                rep.add("cocycle.standard",
                        "R-_{12}(s1) R-_{V1 x V2,V3}(s2) = R-_{23}(s2) R-_{V1,V2 x V3}(s1+s2)",
                        "s1=" + s1.str() + ",s2=" + s2.str(), (lhs2 - rhs2).sup_norm(), 0.0);
                break;
            } catch (const math_domain_error&) {
                if (attempt > 6) throw;
                ++resampled;
                Scalar bump = int_like(attempt + 17, bk);
                s1 += bump;
                s2 += bump + int_like(4, bk);
            }
        }
    }
    if (resampled)
        rep.add_flag("cocycle.resampled", "samples moved off pole collisions",
                     std::to_string(resampled) + " resamples", true);

    {
        Representation triv = Representation::trivial(v1.cartan(), v1.hbar());
        Scalar s1 = int_like(2, bk), s2 = int_like(5, bk);
        Representation v1t = drinfeld_tensor(v1, triv, s1);
        Matrix lhs = rminus_recursive(v1t, v3).eval(s2);
        Matrix rhs = rminus_recursive(v1, drinfeld_tensor(triv, v3, s2)).eval(s1 + s2);
        rep.add("cocycle.counit-middle", "V2 = 1 collapses both sides to R-_{V1,V3}(s1+s2)",
                "s1=2,s2=5", (lhs - rhs).sup_norm(), 0.0);
        Matrix lhs2 = rminus_recursive(drinfeld_tensor(v1, v2, s1), triv).eval(s2);
        Matrix rhs2 = Matrix::identity(d1 * d2, bk);
        rep.add("cocycle.counit-last", "V3 = 1 makes the outer factor the identity", "s1=2",
                (lhs2 - rhs2).sup_norm(), 0.0);
    }
    return rep;
}

} // namespace yrk
