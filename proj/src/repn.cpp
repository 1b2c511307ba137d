#include "yrk/repn.hpp"

#include <algorithm>
#include <map>

#include "yrk/sampling.hpp"

namespace yrk {

std::string Provenance::describe() const {
    switch (kind) {
        case Kind::trivial: return "trivial";
        case Kind::sl2_eval: return "sl2-eval(" + param.str() + ")";
        case Kind::user: return "user";
        case Kind::standard_tensor:
            return "standard(" + left->provenance().describe() + "," +
                   right->provenance().describe() + ";s=" + param.str() + ")";
        case Kind::drinfeld_tensor:
            return "drinfeld(" + left->provenance().describe() + "," +
                   right->provenance().describe() + ";s=" + param.str() + ")";
        case Kind::shift:
            return "shift(" + left->provenance().describe() + ";a=" + param.str() + ")";
    }
    return "?";
}

// ------------------------------------------------------- WeightDecomposition

namespace {

// Restriction of a matrix to an invariant column space: solves B M = A B.
Matrix restrict_to(const Matrix& a, const Matrix& basis) {
    int n = basis.rows(), k = basis.cols();
    Matrix ab = a * basis;
    // pick k independent rows of basis by elimination
    Matrix work = basis;
    std::vector<int> rows;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    bool exact = a.backend() == Backend::exact;
    int r = 0;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        double best = 0;
        for (int i = r; i < n; ++i) {
            if (work(i, c).is_zero()) continue;
            double m = work(i, c).abs_approx();
            if (exact) { piv = i; break; }
            if (m > best) { best = m; piv = i; }
        }
        if (piv < 0) throw math_domain_error("basis matrix is column deficient");
        if (piv != r) {
            for (int j = 0; j < k; ++j) std::swap(work(piv, j), work(r, j));
            std::swap(perm[static_cast<size_t>(piv)], perm[static_cast<size_t>(r)]);
        }
        Scalar inv = work(r, c).inverse();
        for (int j = 0; j < k; ++j) work(r, j) = inv * work(r, j);
        for (int i = 0; i < n; ++i) {
            if (i == r || work(i, c).is_zero()) continue;
            Scalar f = work(i, c);
            for (int j = 0; j < k; ++j) work(i, j) -= f * work(r, j);
        }
        rows.push_back(perm[static_cast<size_t>(r)]);
        ++r;
    }
    Matrix bs(k, k, a.backend()), abs_(k, k, a.backend());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bs(i, j) = basis(rows[static_cast<size_t>(i)], j);
            abs_(i, j) = ab(rows[static_cast<size_t>(i)], j);
        }
    return bs.solve(abs_);
}

} // namespace

WeightDecomposition WeightDecomposition::compute(const std::vector<Matrix>& xi0) {
    WeightDecomposition out;
    int dim = xi0.front().rows();
    Backend bk = xi0.front().backend();
    bool exact = bk == Backend::exact;

    struct Block {
        Matrix basis;
        std::vector<long> weight;
    };
    std::vector<Block> blocks{{Matrix::identity(dim, bk), {}}};

    for (const auto& xi : xi0) {
        std::vector<Block> next;
        for (auto& blk : blocks) {
            Matrix m = restrict_to(xi, blk.basis);
            int k = m.rows();
            // integer eigenvalue scan within a row-sum bound
            double bound = 0;
            for (int i = 0; i < k; ++i) {
                double row = 0;
                for (int j = 0; j < k; ++j) row += m(i, j).abs_approx();
                bound = std::max(bound, row);
            }
            int found = 0;
            for (long lam = -static_cast<long>(bound + 0.5); lam <= static_cast<long>(bound + 0.5); ++lam) {
                Matrix shifted = m;
                Scalar ls = exact ? Scalar::exact_int(lam) : Scalar::flt(static_cast<double>(lam));
                for (int i = 0; i < k; ++i) shifted(i, i) -= ls;
                Matrix ker = shifted.kernel();
                if (ker.cols() == 0) continue;
                Block nb;
                nb.basis = blk.basis * ker;
                nb.weight = blk.weight;
                nb.weight.push_back(lam);
                found += ker.cols();
                next.push_back(std::move(nb));
            }
            if (found != k)
                throw math_domain_error(
                    "xi_{i,0} is not semisimple with integer eigenvalues; no weight decomposition");
        }
        blocks = std::move(next);
    }

    Matrix basis(dim, dim, bk);
    int col = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> cols;
        for (int j = 0; j < blocks[b].basis.cols(); ++j, ++col) {
            for (int i = 0; i < dim; ++i) basis(i, col) = blocks[b].basis(i, j);
            cols.push_back(col);
            out.col_block_.push_back(static_cast<int>(b));
        }
        out.weights_.push_back(blocks[b].weight);
        out.cols_.push_back(std::move(cols));
    }
    out.basis_ = basis;
    out.basis_inv_ = basis.inverse();
    return out;
}

Matrix WeightDecomposition::projector(int b) const {
    int dim = basis_.rows();
    Matrix sel(dim, dim, basis_.backend());
    for (int c : cols_[static_cast<size_t>(b)]) sel(c, c) = sel(c, c).one_like();
    return basis_ * sel * basis_inv_;
}

// -------------------------------------------------------------- construction

const ZeroModeRealization& realization_for(const CartanData& c) {
    static std::map<std::string, ZeroModeRealization> cache;
    auto it = cache.find(c.type());
    if (it == cache.end())
        it = cache.emplace(c.type(), ZeroModeRealization::build(c)).first;
    return it->second;
}

Representation Representation::trivial(const CartanData& c, const Scalar& hbar) {
    Representation r;
    r.cartan_ = c;
    r.hbar_ = hbar;
    r.dim_ = 1;
    Backend bk = hbar.backend();
    for (int i = 0; i < c.rank(); ++i) {
        r.xi0_.push_back(Matrix(1, 1, bk));
        r.xp0_.push_back(Matrix(1, 1, bk));
        r.xm0_.push_back(Matrix(1, 1, bk));
        r.t1_.push_back(Matrix(1, 1, bk));
    }
    r.prov_.kind = Provenance::Kind::trivial;
    r.weights_ = WeightDecomposition::compute(r.xi0_);
    return r;
}

Representation Representation::evaluation_sl2(const Scalar& a, const Scalar& hbar) {
    if (a.backend() != hbar.backend()) throw backend_mismatch();
    Representation r;
    r.cartan_ = CartanData::A1();
    r.hbar_ = hbar;
    r.dim_ = 2;
    Backend bk = hbar.backend();
    Scalar one = hbar.one_like();
    Matrix xi(2, 2, bk), xp(2, 2, bk), xm(2, 2, bk);
    xi(0, 0) = one;
    xi(1, 1) = -one;
    xp(0, 1) = one;
    xm(1, 0) = one;
    Scalar half = bk == Backend::exact ? Scalar::exact_ratio(1, 2) : Scalar::flt(0.5);
    Matrix t1 = a * xi - (half * hbar) * Matrix::identity(2, bk);
    r.xi0_ = {xi};
    r.xp0_ = {xp};
    r.xm0_ = {xm};
    r.t1_ = {t1};
    r.poles_ = {a};
    r.prov_.kind = Provenance::Kind::sl2_eval;
    r.prov_.param = a;
    r.weights_ = WeightDecomposition::compute(r.xi0_);
    return r;
}

Representation Representation::from_generators(const CartanData& c, const Scalar& hbar,
                                               std::vector<Matrix> xi0, std::vector<Matrix> xp0,
                                               std::vector<Matrix> xm0, std::vector<Matrix> t1,
                                               std::vector<Scalar> poles, Provenance prov) {
    Representation r;
    r.cartan_ = c;
    r.hbar_ = hbar;
    r.dim_ = xi0.front().rows();
    r.xi0_ = std::move(xi0);
    r.xp0_ = std::move(xp0);
    r.xm0_ = std::move(xm0);
    r.t1_ = std::move(t1);
    r.poles_ = std::move(poles);
    r.prov_ = std::move(prov);
    r.weights_ = WeightDecomposition::compute(r.xi0_);
    return r;
}

Representation Representation::shifted(const Scalar& a) const {
    Representation r = *this;
    for (int i = 0; i < rank(); ++i)
        r.t1_[static_cast<size_t>(i)] = t1_[static_cast<size_t>(i)] + a * xi0_[static_cast<size_t>(i)];
    r.poles_ = shifted_poles(a);
    Provenance p;
    p.kind = Provenance::Kind::shift;
    p.param = a;
    p.left = std::make_shared<Representation>(*this);
    r.prov_ = std::move(p);
    return r;
}

Representation Representation::to_float() const {
    if (backend() == Backend::floating) return *this;
    Representation r = *this;
    r.hbar_ = hbar_.to_float();
    for (auto* fam : {&r.xi0_, &r.xp0_, &r.xm0_, &r.t1_})
        for (auto& m : *fam) m = m.to_float();
    for (auto& p : r.poles_) p = p.to_float();
    Provenance p;
    p.kind = prov_.kind;
    p.param = prov_.param.is_exact() ? prov_.param.to_float() : prov_.param;
    if (prov_.left) p.left = std::make_shared<Representation>(prov_.left->to_float());
    if (prov_.right) p.right = std::make_shared<Representation>(prov_.right->to_float());
    r.prov_ = std::move(p);
    r.weights_ = WeightDecomposition::compute(r.xi0_);
    return r;
}

std::vector<Scalar> Representation::shifted_poles(const Scalar& a) const {
    std::vector<Scalar> out;
    out.reserve(poles_.size());
    for (const auto& p : poles_) out.push_back(p + a);
    return out;
}

// ------------------------------------------------------------------ currents

namespace {

std::vector<Scalar> vectorize(const Matrix& m) {
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// X(u) = hbar * (u - Op)^{-1} b via the minimal polynomial of Op on the
// Krylov span of b; Op(X) = sign * [t, X] / (2d).
RatMat resolvent_current(const Matrix& t, long two_d, int sign, const Matrix& b,
                         const Scalar& hbar) {
    int n = b.rows();
    Backend bk = b.backend();
    Scalar scale = (bk == Backend::exact ? Scalar::exact_int(sign * two_d)
                                         : Scalar::flt(static_cast<double>(sign * two_d)))
                       .inverse();
    std::vector<Matrix> krylov{b};
    std::vector<std::vector<Scalar>> flat{vectorize(b)};

    std::vector<Scalar> mu; // dependence coefficients, monic top
    for (int step = 1; step <= n * n + 1; ++step) {
        Matrix nxt = scale * commutator(t, krylov.back());
        // test dependence of [flat..., nxt]
        Matrix m(static_cast<int>(flat.front().size()), step + 1, bk);
        for (int c = 0; c <= step - 1; ++c)
            for (size_t r = 0; r < flat[static_cast<size_t>(c)].size(); ++r)
                m(static_cast<int>(r), c) = flat[static_cast<size_t>(c)][r];
        auto fn = vectorize(nxt);
        for (size_t r = 0; r < fn.size(); ++r) m(static_cast<int>(r), step) = fn[r];
        Matrix ker = m.kernel();
        if (ker.cols() > 0) {
            // normalize so the top coefficient is 1
            int kc = ker.cols() - 1;
            Scalar top = ker(step, kc);
            if (top.is_zero()) throw math_domain_error("resolvent: degenerate Krylov dependence");
            Scalar inv = top.inverse();
            mu.resize(static_cast<size_t>(step) + 1);
            for (int j = 0; j <= step; ++j) mu[static_cast<size_t>(j)] = inv * ker(j, kc);
            break;
        }
        krylov.push_back(nxt);
        flat.push_back(std::move(fn));
    }
    if (mu.empty()) throw math_domain_error("resolvent: no Krylov dependence found");

    int m_deg = static_cast<int>(mu.size()) - 1;
    Poly denom(mu);
    RatMat out(n, n, bk);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // numerator coefficient of u^t: sum_j mu[j+t+1] * v_j(i,j)
            std::vector<Scalar> num(static_cast<size_t>(m_deg), hbar.zero_like());
            bool nonzero = false;
            for (int tpow = 0; tpow < m_deg; ++tpow) {
                Scalar acc = hbar.zero_like();
                for (int jj = 0; jj + tpow + 1 <= m_deg; ++jj)
                    acc += mu[static_cast<size_t>(jj + tpow + 1)] * krylov[static_cast<size_t>(jj)](i, j);
                if (!acc.is_zero()) nonzero = true;
                num[static_cast<size_t>(tpow)] = hbar * acc;
            }
            if (nonzero) out(i, j) = RatFun(Poly(std::move(num)), denom);
        }
    return out;
}

} // namespace

RatMat Representation::current_xp(int i) const {
    return resolvent_current(t1_[static_cast<size_t>(i)], 2L * cartan_.d(i), +1,
                             xp0_[static_cast<size_t>(i)], hbar_);
}

RatMat Representation::current_xm(int i) const {
    return resolvent_current(t1_[static_cast<size_t>(i)], 2L * cartan_.d(i), -1,
                             xm0_[static_cast<size_t>(i)], hbar_);
}

RatMat Representation::current_xi(int i) const {
    RatMat xp = current_xp(i);
    RatMat xm0{Matrix(xm0_[static_cast<size_t>(i)])};
    return RatMat::identity(dim_, backend()) + xp * xm0 - xm0 * xp;
}

PowerSeries Representation::t_current_series(int i, int order) const {
    PowerSeries xi = current_xi(i).series_at_infinity(order + 1, "u");
    return xi.log();
}

Matrix Representation::mode_xp(int i, int r) const {
    if (r == 0) return xp0_[static_cast<size_t>(i)];
    PowerSeries s = current_xp(i).series_at_infinity(r + 1, "u");
    return hbar_.inverse() * s.coeff_of_power(-r - 1);
}

Matrix Representation::mode_xm(int i, int r) const {
    if (r == 0) return xm0_[static_cast<size_t>(i)];
    PowerSeries s = current_xm(i).series_at_infinity(r + 1, "u");
    return hbar_.inverse() * s.coeff_of_power(-r - 1);
}

Matrix Representation::mode_xi(int i, int r) const {
    if (r == 0) return xi0_[static_cast<size_t>(i)];
    PowerSeries s = current_xi(i).series_at_infinity(r + 1, "u");
    return hbar_.inverse() * s.coeff_of_power(-r - 1);
}

Matrix Representation::mode_t(int i, int r) const {
    if (r == 0) return xi0_[static_cast<size_t>(i)];
    if (r == 1) return t1_[static_cast<size_t>(i)];
    PowerSeries t = t_current_series(i, r);
    return hbar_.inverse() * t.coeff_of_power(-r - 1);
}

Matrix Representation::t_of_h(const std::vector<Scalar>& alpha_h) const {
    auto c = cartan_.t_expansion(alpha_h);
    Matrix acc(dim_, dim_, backend());
    for (int j = 0; j < rank(); ++j) acc = acc + c[static_cast<size_t>(j)] * t1_[static_cast<size_t>(j)];
    return acc;
}

// ------------------------------------------------------------------- tensors

Matrix coproduct_correction(const Representation& v, const Representation& w, int node) {
    const auto& z = realization_for(v.cartan());
    const auto& roots = v.cartan().positive_roots();
    Matrix acc(v.dim() * w.dim(), v.dim() * w.dim(), v.backend());
    std::vector<Matrix> xmv, xpw;
    for (int i = 0; i < v.rank(); ++i) {
        xmv.push_back(v.xm0(i));
        xpw.push_back(w.xp0(i));
    }
    for (size_t b = 0; b < roots.size(); ++b) {
        long pair = v.cartan().root_dot_alpha(roots[b], node);
        if (pair == 0) continue;
        Scalar coef = v.backend() == Backend::exact ? Scalar::exact_int(pair)
                                                    : Scalar::flt(static_cast<double>(pair));
        acc = acc + coef * kron(z.xm_root_on(static_cast<int>(b), xmv),
                                z.xp_root_on(static_cast<int>(b), xpw));
    }
    return -v.hbar() * acc;
}

Representation standard_tensor(const Representation& v, const Representation& w, const Scalar& s) {
    if (!v.same_theory(w)) throw math_domain_error("tensor factors over different data");
    int n = v.rank();
    Matrix iv = Matrix::identity(v.dim(), v.backend());
    Matrix iw = Matrix::identity(w.dim(), w.backend());
    std::vector<Matrix> xi0, xp0, xm0, t1;
    for (int i = 0; i < n; ++i) {
        xi0.push_back(kron(v.xi0(i), iw) + kron(iv, w.xi0(i)));
        xp0.push_back(kron(v.xp0(i), iw) + kron(iv, w.xp0(i)));
        xm0.push_back(kron(v.xm0(i), iw) + kron(iv, w.xm0(i)));
        t1.push_back(kron(v.t1(i) + s * v.xi0(i), iw) + kron(iv, w.t1(i)) +
                     coproduct_correction(v, w, i));
    }
    std::vector<Scalar> poles = v.shifted_poles(s);
    for (const auto& p : w.poles()) poles.push_back(p);
    Provenance prov;
    prov.kind = Provenance::Kind::standard_tensor;
    prov.param = s;
    prov.left = std::make_shared<Representation>(v);
    prov.right = std::make_shared<Representation>(w);
    return Representation::from_generators(v.cartan(), v.hbar(), std::move(xi0), std::move(xp0),
                                           std::move(xm0), std::move(t1), std::move(poles),
                                           std::move(prov));
}

Matrix r_tensor_on(const Representation& v, const Representation& w) {
    const auto& z = realization_for(v.cartan());
    const auto& roots = v.cartan().positive_roots();
    Matrix acc(v.dim() * w.dim(), v.dim() * w.dim(), v.backend());
    std::vector<Matrix> xmv, xpw;
    for (int i = 0; i < v.rank(); ++i) {
        xmv.push_back(v.xm0(i));
        xpw.push_back(w.xp0(i));
    }
    for (size_t b = 0; b < roots.size(); ++b)
        acc = acc + kron(z.xm_root_on(static_cast<int>(b), xmv),
                         z.xp_root_on(static_cast<int>(b), xpw));
    return acc;
}

Matrix omega_h_on(const Representation& v, const Representation& w) {
    const Matrix& inv = v.cartan().sym_cartan_inverse();
    Matrix acc(v.dim() * w.dim(), v.dim() * w.dim(), v.backend());
    for (int i = 0; i < v.rank(); ++i)
        for (int j = 0; j < v.rank(); ++j) {
            Scalar coef = inv(j, i);
            if (coef.is_zero()) continue;
            if (v.backend() == Backend::floating) coef = coef.to_float();
            acc = acc + coef * kron(v.xi0(i), w.xi0(j));
        }
    return acc;
}

Matrix omega_g_on(const Representation& v, const Representation& w) {
    const auto& z = realization_for(v.cartan());
    const auto& roots = v.cartan().positive_roots();
    Matrix acc = omega_h_on(v, w) + r_tensor_on(v, w);
    std::vector<Matrix> xpv, xmw;
    for (int i = 0; i < v.rank(); ++i) {
        xpv.push_back(v.xp0(i));
        xmw.push_back(w.xm0(i));
    }
    for (size_t b = 0; b < roots.size(); ++b)
        acc = acc + kron(z.xp_root_on(static_cast<int>(b), xpv),
                         z.xm_root_on(static_cast<int>(b), xmw));
    return acc;
}

// ----------------------------------------------------------------- relations

namespace {

double ratmat_magnitude(const RatMat& r, const std::vector<Scalar>& avoid) {
    if (r.is_zero()) return 0.0;
    // evaluate at a few integer points away from the poles
    double worst = 0;
    int done = 0;
    for (long v = 2; v < 60 && done < 3; ++v) {
        Scalar pt = r.backend() == Backend::exact ? Scalar::exact_int(v)
                                                  : Scalar::flt(static_cast<double>(v));
        bool bad = false;
        for (const auto& a : avoid)
            if (std::abs(a.to_complex() - pt.to_complex()) < 1e-6) { bad = true; break; }
        if (bad) continue;
        try {
            worst = std::max(worst, r.eval(pt).sup_norm());
            ++done;
        } catch (const math_domain_error&) {
        }
    }
    return worst;
}

} // namespace

Report Representation::verify_relations(std::uint64_t seed, double tol) const {
    Report rep;
    rep.suite = "relations";
    rep.seed = seed;
    SamplePool pool(seed, backend(), 6.0);
    int n = rank();
    Backend bk = backend();
    auto num = [&](long v) { return bk == Backend::exact ? Scalar::exact_int(v) : Scalar::flt(static_cast<double>(v)); };

    std::vector<RatMat> xp(static_cast<size_t>(n)), xm(static_cast<size_t>(n)), xi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        xp[static_cast<size_t>(i)] = current_xp(i);
        xm[static_cast<size_t>(i)] = current_xm(i);
        xi[static_cast<size_t>(i)] = current_xi(i);
    }

    auto push = [&](const std::string& id, const std::string& anchor, const std::string& samples,
                    const RatMat& resid) {
        rep.add(id, anchor, samples, ratmat_magnitude(resid, poles_), tol);
    };

    std::vector<Scalar> vsamples;
    for (int k = 0; k < 5; ++k) vsamples.push_back(pool.draw_avoiding(poles_));

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::string ij = std::to_string(i) + std::to_string(j);
            // zero-mode brackets
            Matrix c1 = commutator(xi0_[static_cast<size_t>(i)], xi0_[static_cast<size_t>(j)]);
            rep.add("y1.zero." + ij, "[xi_i0, xi_j0] = 0", "-", c1.sup_norm(), tol);
            Matrix c5 = commutator(xp0_[static_cast<size_t>(i)], xm0_[static_cast<size_t>(j)]);
            if (i == j) c5 = c5 - xi0_[static_cast<size_t>(i)];
            rep.add("y5.zero." + ij, "[x+_i0, x-_j0] = delta_ij xi_i0", "-", c5.sup_norm(), tol);
            rep.add("t1.commute." + ij, "[t_i1, t_j1] = 0", "-",
                    commutator(t1_[static_cast<size_t>(i)], t1_[static_cast<size_t>(j)]).sup_norm(), tol);

            // Y1 with one sampled leg
            for (const auto& v0 : vsamples) {
                Matrix xjv = xi[static_cast<size_t>(j)].eval(v0);
                RatMat resid = xi[static_cast<size_t>(i)] * RatMat(xjv) - RatMat(xjv) * xi[static_cast<size_t>(i)];
                push("y1." + ij, "[xi_i(u), xi_j(v)] = 0", "v=" + v0.str(), resid);
            }

            for (int sign = +1; sign >= -1; sign -= 2) {
                const RatMat& xcur = sign > 0 ? xp[static_cast<size_t>(j)] : xm[static_cast<size_t>(j)];
                std::string sg = sign > 0 ? "+" : "-";
                // Y2
                {
                    Matrix x0 = Matrix(xi0_[static_cast<size_t>(i)]);
                    RatMat lhs = RatMat(x0) * xcur - xcur * RatMat(x0);
                    RatMat rhs = (num(sign * cartan_.sym(i, j))) * xcur;
                    push("y2." + sg + ij, "[xi_i0, x" + sg + "_j(u)] = " + sg + "d_i a_ij x_j(u)",
                         "-", lhs - rhs);
                }
                // Y3: (u-v -+ a) xi_i(u) x_j(v) = (u-v +- a) x_j(v) xi_i(u) -+ 2a x_j(u -+ a) xi_i(u)
                Scalar a = hbar_ * num(cartan_.sym(i, j)) / num(2);
                Scalar sa = num(sign) * a;
                for (const auto& v0 : vsamples) {
                    Matrix xv = xcur.eval(v0);
                    RatFun u = RatFun::x(bk);
                    RatFun um = u - RatFun(v0 + sa); // u - v -+ a
                    RatFun up = u - RatFun(v0 - sa); // u - v +- a
                    RatMat shifted = xcur.compose_affine(-sa, num(1)); // x_j(u -+ a)
                    RatMat resid = um * (xi[static_cast<size_t>(i)] * RatMat(xv)) -
                                   up * (RatMat(xv) * xi[static_cast<size_t>(i)]) +
                                   (num(2) * sa) * (shifted * xi[static_cast<size_t>(i)]);
                    push("y3." + sg + ij, "(u-v-a)xi_i(u)x_j(v) = (u-v+a)x_j(v)xi_i(u)-2a x_j(u-a)xi_i(u)",
                         "v=" + v0.str(), resid);
                }
                // Y4 same-sign currents
                const RatMat& xcur_i = sign > 0 ? xp[static_cast<size_t>(i)] : xm[static_cast<size_t>(i)];
                const Matrix& x0_i = sign > 0 ? xp0_[static_cast<size_t>(i)] : xm0_[static_cast<size_t>(i)];
                const Matrix& x0_j = sign > 0 ? xp0_[static_cast<size_t>(j)] : xm0_[static_cast<size_t>(j)];
                for (const auto& v0 : vsamples) {
                    Matrix xv = xcur.eval(v0);
                    RatFun u = RatFun::x(bk);
                    RatFun um = u - RatFun(v0 + sa);
                    RatFun up = u - RatFun(v0 - sa);
                    RatMat br = RatMat(commutator(x0_i, xv)) -
                                (xcur_i * RatMat(Matrix(x0_j)) - RatMat(Matrix(x0_j)) * xcur_i);
                    RatMat resid = um * (xcur_i * RatMat(xv)) - up * (RatMat(xv) * xcur_i) -
                                   hbar_ * br;
                    push("y4." + sg + ij, "(u-v-a)x_i(u)x_j(v) = (u-v+a)x_j(v)x_i(u)+h([x_i0,x_j(v)]-[x_i(u),x_j0])",
                         "v=" + v0.str(), resid);
                }
            }
            // Y5 with currents
            for (const auto& v0 : vsamples) {
                Matrix xmv = xm[static_cast<size_t>(j)].eval(v0);
                RatFun u = RatFun::x(bk);
                RatMat lhs = (u - RatFun(v0)) * (xp[static_cast<size_t>(i)] * RatMat(xmv) -
                                                 RatMat(xmv) * xp[static_cast<size_t>(i)]);
                RatMat rhs(dim_, dim_, bk);
                if (i == j) {
                    Matrix xiv = xi[static_cast<size_t>(i)].eval(v0);
                    rhs = (-hbar_) * (xi[static_cast<size_t>(i)] - RatMat(xiv));
                }
                push("y5." + ij, "(u-v)[x+_i(u), x-_j(v)] = -delta_ij h (xi_i(u)-xi_i(v))",
                     "v=" + v0.str(), lhs - rhs);
            }
            // shift action of t_{i,1}
            for (int sign = +1; sign >= -1; sign -= 2) {
                Matrix x1 = sign > 0 ? mode_xp(j, 1) : mode_xm(j, 1);
                const Matrix& x0 = sign > 0 ? xp0_[static_cast<size_t>(j)] : xm0_[static_cast<size_t>(j)];
                Matrix resid = commutator(t1_[static_cast<size_t>(i)], x0) -
                               num(sign * cartan_.sym(i, j)) * x1;
                rep.add(std::string("t1.shift.") + (sign > 0 ? "+" : "-") + ij,
                        "[t_i1, x_j0] = d_i a_ij x_j1", "-", resid.sup_norm(), tol);
            }
        }
    }

    // Serre relations for rank >= 2, nested commutators with sampled legs
    if (n >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan_.a(i, j) == 0) continue;
                int m = 1 - cartan_.a(i, j);
                for (int sign = +1; sign >= -1; sign -= 2) {
                    const RatMat& xj = sign > 0 ? xp[static_cast<size_t>(j)] : xm[static_cast<size_t>(j)];
                    std::vector<Matrix> xs;
                    for (int k = 0; k < m; ++k)
                        xs.push_back((sign > 0 ? xp[static_cast<size_t>(i)] : xm[static_cast<size_t>(i)])
                                         .eval(pool.draw_avoiding(poles_)));
                    std::vector<int> perm(static_cast<size_t>(m));
                    for (int k = 0; k < m; ++k) perm[static_cast<size_t>(k)] = k;
                    RatMat acc(dim_, dim_, bk);
                    do {
                        RatMat inner = xj;
                        for (int k = m - 1; k >= 0; --k) {
                            RatMat xc(xs[static_cast<size_t>(perm[static_cast<size_t>(k)])]);
                            inner = xc * inner - inner * xc;
                        }
                        acc += inner;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    push(std::string("y6.") + (sign > 0 ? "+" : "-") + std::to_string(i) + std::to_string(j),
                         "sum_pi [x_i(u1),[...,[x_i(um), x_j(v)]]] = 0", "sampled u", acc);
                }
            }
    }
    return rep;
}

} // namespace yrk
