#include "yrk/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace yrk {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::q_number(int n) {
    if (n == 0) return {};
    if (n < 0) {
        LaurentPoly p = q_number(-n);
        for (auto& x : p.c) x = -x;
        return p;
    }
    LaurentPoly p;
    p.lo = -(n - 1);
    p.c.assign(static_cast<size_t>(2 * n - 1), mpq_class(0));
    for (int k = 0; k < n; ++k) p.c[static_cast<size_t>(2 * k)] = 1;
    return p;
}

bool LaurentPoly::is_zero() const {
    for (auto& x : c) if (x != 0) return false;
    return true;
}

mpq_class LaurentPoly::coeff(int power) const {
    int idx = power - lo;
    if (idx < 0 || idx >= static_cast<int>(c.size())) return mpq_class(0);
    return c[static_cast<size_t>(idx)];
}

void LaurentPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    size_t drop = 0;
    while (drop < c.size() && c[drop] == 0) ++drop;
    if (drop) {
        c.erase(c.begin(), c.begin() + static_cast<long>(drop));
        lo += static_cast<int>(drop);
    }
    if (c.empty()) lo = 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (c.empty()) return o;
    if (o.c.empty()) return *this;
    LaurentPoly r;
    r.lo = std::min(lo, o.lo);
    int hi_p = std::max(hi(), o.hi());
    r.c.assign(static_cast<size_t>(hi_p - r.lo + 1), mpq_class(0));
    for (int p = r.lo; p <= hi_p; ++p)
        r.c[static_cast<size_t>(p - r.lo)] = coeff(p) + o.coeff(p);
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly neg = o;
    for (auto& x : neg.c) x = -x;
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly r;
    r.lo = lo + o.lo;
    r.c.assign(c.size() + o.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return (*this - o).is_zero();
}

bool LaurentPoly::palindromic() const {
    int h = hi();
    for (int p = lo; p <= h; ++p)
        if (coeff(p) != coeff(-p)) return false;
    return true;
}

bool LaurentPoly::nonneg_integer() const {
    for (auto& x : c) {
        if (x < 0) return false;
        if (x.get_den() != 1) return false;
    }
    return true;
}

mpq_class LaurentPoly::eval_one() const {
    mpq_class s(0);
    for (auto& x : c) s += x;
    return s;
}

RatFun LaurentPoly::to_ratfun() const {
    if (is_zero()) return RatFun::zero();
    int shift = std::min(lo, 0);
    std::vector<Scalar> num(static_cast<size_t>(hi() - shift) + 1, Scalar::exact_int(0));
    for (int p = lo; p <= hi(); ++p)
        num[static_cast<size_t>(p - shift)] = Scalar(coeff(p), mpq_class(0));
    Poly den = Poly::x().pow(-shift);
    return RatFun(Poly(std::move(num)), den);
}

std::optional<LaurentPoly> LaurentPoly::from_ratfun(const RatFun& f) {
    if (f.is_zero()) return LaurentPoly{};
    // denominator must be a monomial q^k
    const Poly& d = f.den();
    for (int j = 0; j < d.degree(); ++j)
        if (!d.coeff(j).is_zero()) return std::nullopt;
    int k = d.degree();
    LaurentPoly out;
    out.lo = -k;
    for (int j = 0; j <= f.num().degree(); ++j) {
        Scalar cj = f.num().coeff(j);
        if (cj.exact_im() != 0) return std::nullopt;
        out.c.push_back(cj.exact_re());
    }
    out.trim();
    return out;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int p = hi(); p >= lo; --p) {
        mpq_class v = coeff(p);
        if (v == 0) continue;
        if (!s.empty()) s += " + ";
        s += v.get_str();
        if (p != 0) s += "*q^" + std::to_string(p);
    }
    return s;
}

// ----------------------------------------------------------------- CartanData

CartanData::CartanData(std::string type, std::vector<std::vector<int>> a, std::vector<int> d,
                       int hdual, int m)
    : type_(std::move(type)), a_(std::move(a)), d_(std::move(d)), hdual_(hdual), m_(m) {
    int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sym(i, j) != d_[static_cast<size_t>(j)] * a_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw math_domain_error("Cartan data not symmetrizable by the given d_i");

    // positive roots: closure under root strings, breadth-first by height
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(static_cast<size_t>(n), 0);
        alpha[static_cast<size_t>(i)] = 1;
        roots.insert(alpha);
        frontier.push_back(alpha);
    }
    auto pairing = [&](const std::vector<int>& beta, int i) {
        long num = 0;
        for (int j = 0; j < n; ++j) num += static_cast<long>(beta[static_cast<size_t>(j)]) * sym(j, i);
        return static_cast<int>(num / d_[static_cast<size_t>(i)]);
    };
    auto is_zero_vec = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[static_cast<size_t>(i)] -= 1;
                    if (down[static_cast<size_t>(i)] < 0) break;
                    if (is_zero_vec(down) || roots.count(down)) ++p;
                    else break;
                }
                int q = p - pairing(beta, i);
                if (q >= 1) {
                    std::vector<int> up = beta;
                    up[static_cast<size_t>(i)] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
        if (roots.size() > 200) throw math_domain_error("Cartan data is not of finite type");
    }
    pos_roots_.assign(roots.begin(), roots.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const auto& x, const auto& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    Matrix da(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) da(i, j) = Scalar::exact_int(sym(i, j));
    da_inv_ = da.inverse();
}

CartanData CartanData::A1() { return CartanData("A1", {{2}}, {1}, 2, 1); }
CartanData CartanData::A2() { return CartanData("A2", {{2, -1}, {-1, 2}}, {1, 1}, 3, 1); }
CartanData CartanData::B2() { return CartanData("B2", {{2, -1}, {-2, 2}}, {2, 1}, 3, 2); }
CartanData CartanData::custom(std::vector<std::vector<int>> a, std::vector<int> d, int hdual, int m) {
    return CartanData("custom", std::move(a), std::move(d), hdual, m);
}

int CartanData::height(const std::vector<int>& beta) {
    int h = 0;
    for (int x : beta) h += x;
    return h;
}

Scalar CartanData::beta_of_h(const std::vector<int>& beta, const std::vector<Scalar>& alpha_h) {
    Scalar s = alpha_h.front().zero_like();
    for (size_t i = 0; i < beta.size(); ++i) {
        Scalar n = alpha_h[i].is_exact() ? Scalar::exact_int(beta[i]) : Scalar::flt(beta[i]);
        s += n * alpha_h[i];
    }
    return s;
}

int CartanData::root_dot_alpha(const std::vector<int>& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += beta[static_cast<size_t>(j)] * sym(j, i);
    return s;
}

int CartanData::nu_min_decomposition(const std::vector<int>& beta) const {
    for (int x : beta)
        if (x < 0) throw math_domain_error("nu: not an element of the positive cone");
    if (height(beta) == 0) return 0;
    std::map<std::vector<int>, int> dist;
    std::vector<int> zero(beta.size(), 0);
    dist[zero] = 0;
    std::vector<std::vector<int>> frontier{zero};
    int steps = 0;
    while (!frontier.empty()) {
        ++steps;
        std::vector<std::vector<int>> next;
        for (const auto& pt : frontier)
            for (const auto& r : pos_roots_) {
                std::vector<int> s = pt;
                bool ok = true;
                for (size_t k = 0; k < s.size(); ++k) {
                    s[k] += r[k];
                    if (s[k] > beta[k]) { ok = false; break; }
                }
                if (!ok || dist.count(s)) continue;
                dist[s] = steps;
                if (s == beta) return steps;
                next.push_back(s);
            }
        frontier = std::move(next);
    }
    throw math_domain_error("nu: not a sum of positive roots");
}

std::vector<Scalar> CartanData::t_expansion(const std::vector<Scalar>& alpha_h) const {
    // solve sum_j (d_i a_ij) c_j = alpha_i(h)
    int n = rank();
    Backend bk = alpha_h.front().backend();
    Matrix rhs(n, 1, bk);
    for (int i = 0; i < n; ++i) rhs(i, 0) = alpha_h[static_cast<size_t>(i)];
    Matrix da(n, n, bk);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            da(i, j) = bk == Backend::exact ? Scalar::exact_int(sym(i, j))
                                            : Scalar::flt(sym(i, j));
    Matrix c = da.solve(rhs);
    std::vector<Scalar> out;
    for (int i = 0; i < n; ++i) out.push_back(c(i, 0));
    return out;
}

// ------------------------------------------------------------------ couplings

std::vector<std::vector<LaurentPoly>> q_coupling_matrix(const CartanData& c) {
    int n = c.rank();
    RatMat M(n, n), rhs(n, n);
    LaurentPoly ell = LaurentPoly::q_number(c.ell());
    for (int i = 0; i < n; ++i) {
        rhs(i, i) = ell.to_ratfun();
        for (int j = 0; j < n; ++j)
            M(i, j) = LaurentPoly::q_number(c.sym(i, j)).to_ratfun();
    }
    RatMat X = rat_linear_solve(M, rhs);
    std::vector<std::vector<LaurentPoly>> out(static_cast<size_t>(n),
                                              std::vector<LaurentPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lp = LaurentPoly::from_ratfun(X(i, j));
            if (!lp)
                throw math_domain_error(
                    "coupling matrix is not Laurent-polynomial (wrong level or Cartan data)");
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = *lp;
        }
    // certify the defining identity and the structural properties
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (int k = 0; k < n; ++k)
                acc = acc + out[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                LaurentPoly::q_number(c.sym(k, j));
            LaurentPoly expect = (i == j) ? ell : LaurentPoly{};
            if (!(acc == expect))
                throw math_domain_error("coupling matrix failed its defining identity");
            if (!(out[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  out[static_cast<size_t>(j)][static_cast<size_t>(i)]))
                throw math_domain_error("coupling matrix is not symmetric");
            if (!out[static_cast<size_t>(i)][static_cast<size_t>(j)].palindromic())
                throw math_domain_error("coupling matrix not invariant under q -> 1/q");
        }
    return out;
}

QCouplingModes q_coupling_modes(const CartanData& c) {
    QCouplingModes out;
    out.cq = q_coupling_matrix(c);
    int n = c.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& p = out.cq[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int r = p.lo; r <= p.hi(); ++r) {
                mpq_class v = p.coeff(r);
                if (v == 0) continue;
                out.modes.push_back({i, j, r, v.get_num().get_si()});
            }
        }
    return out;
}

// -------------------------------------------------------------- realizations

ZeroModeRealization ZeroModeRealization::build(const CartanData& c) {
    ZeroModeRealization z;
    z.cartan_ = c;
    auto E = [](int n, int i, int j) { return Matrix::unit(n, n, i, j, Scalar::exact_int(1)); };
    if (c.type() == "A1") {
        z.dim_ = 2;
        z.xp_ = {E(2, 0, 1)};
        z.xm_ = {E(2, 1, 0)};
        z.h_ = {E(2, 0, 0) - E(2, 1, 1)};
    } else if (c.type() == "A2") {
        z.dim_ = 3;
        z.xp_ = {E(3, 0, 1), E(3, 1, 2)};
        z.xm_ = {E(3, 1, 0), E(3, 2, 1)};
        z.h_ = {E(3, 0, 0) - E(3, 1, 1), E(3, 1, 1) - E(3, 2, 2)};
    } else if (c.type() == "B2") {
        // so(5) preserving the antidiagonal form; F_ij = E_ij - E_{4-j,4-i}
        auto F = [&](int i, int j) { return E(5, i, j) - E(5, 4 - j, 4 - i); };
        z.dim_ = 5;
        z.xp_ = {Scalar::exact_int(2) * F(0, 1), Scalar::exact_int(2) * F(1, 2)};
        z.xm_ = {F(1, 0), F(2, 1)};
        z.h_ = {F(0, 0) - F(1, 1), Scalar::exact_int(2) * F(1, 1)};
    } else {
        throw math_domain_error("no built-in realization for Cartan type " + c.type());
    }

    for (int i = 0; i < c.rank(); ++i) {
        Matrix lhs = commutator(z.xp_[static_cast<size_t>(i)], z.xm_[static_cast<size_t>(i)]);
        Matrix rhs = Scalar::exact_int(c.d(i)) * z.h_[static_cast<size_t>(i)];
        if (!(lhs == rhs)) throw math_domain_error("realization violates [x+,x-] = d h");
    }

    // trace-form normalization kappa from (d_i h_i, d_j h_j) = d_i a_ij
    Matrix dh0 = Scalar::exact_int(c.d(0)) * z.h_[0];
    Scalar tr = (dh0 * dh0).trace();
    Scalar kappa = Scalar::exact_int(c.sym(0, 0)) / tr;

    const auto& roots = c.positive_roots();
    z.xp_pos_.resize(roots.size());
    z.xm_pos_.resize(roots.size());
    z.recipes_.resize(roots.size());
    std::map<std::vector<int>, size_t> index;
    for (size_t b = 0; b < roots.size(); ++b) index[roots[b]] = b;

    for (size_t b = 0; b < roots.size(); ++b) {
        const auto& beta = roots[b];
        if (CartanData::height(beta) == 1) {
            int i = 0;
            while (beta[static_cast<size_t>(i)] == 0) ++i;
            z.xp_pos_[b] = z.xp_[static_cast<size_t>(i)];
            z.xm_pos_[b] = z.xm_[static_cast<size_t>(i)];
            z.recipes_[b] = {{i}, Scalar::exact_int(1), Scalar::exact_int(1)};
        } else {
            bool built = false;
            for (int i = 0; i < c.rank() && !built; ++i) {
                std::vector<int> rest = beta;
                rest[static_cast<size_t>(i)] -= 1;
                if (rest[static_cast<size_t>(i)] < 0) continue;
                auto it = index.find(rest);
                if (it == index.end()) continue;
                Matrix cand_p = commutator(z.xp_[static_cast<size_t>(i)], z.xp_pos_[it->second]);
                if (cand_p.is_zero()) continue;
                Matrix cand_m = commutator(z.xm_[static_cast<size_t>(i)], z.xm_pos_[it->second]);
                z.xp_pos_[b] = cand_p;
                z.xm_pos_[b] = cand_m;
                z.recipes_[b].word = {i};
                for (int w : z.recipes_[it->second].word) z.recipes_[b].word.push_back(w);
                z.recipes_[b].scale_p = z.recipes_[it->second].scale_p;
                z.recipes_[b].scale_m = z.recipes_[it->second].scale_m;
                built = true;
            }
            if (!built) throw math_domain_error("failed to build a root vector by brackets");
        }
        // enforce (x-_beta, x+_beta) = 1 by rescaling the lowering vector
        Scalar pairing = kappa * (z.xm_pos_[b] * z.xp_pos_[b]).trace();
        if (pairing.is_zero()) throw math_domain_error("degenerate root-vector pairing");
        z.xm_pos_[b] = pairing.inverse() * z.xm_pos_[b];
        z.recipes_[b].scale_m = z.recipes_[b].scale_m / pairing;
    }
    return z;
}

namespace {
Matrix word_bracket(const std::vector<int>& word, const std::vector<Matrix>& gen) {
    Matrix acc = gen[static_cast<size_t>(word.back())];
    for (size_t k = word.size() - 1; k-- > 0;)
        acc = commutator(gen[static_cast<size_t>(word[k])], acc);
    return acc;
}
} // namespace

Matrix ZeroModeRealization::xp_root_on(int b, const std::vector<Matrix>& xp0) const {
    const Recipe& r = recipes_[static_cast<size_t>(b)];
    Scalar s = r.scale_p;
    if (xp0.front().backend() == Backend::floating) s = s.to_float();
    return s * word_bracket(r.word, xp0);
}

Matrix ZeroModeRealization::xm_root_on(int b, const std::vector<Matrix>& xm0) const {
    const Recipe& r = recipes_[static_cast<size_t>(b)];
    Scalar s = r.scale_m;
    if (xm0.front().backend() == Backend::floating) s = s.to_float();
    return s * word_bracket(r.word, xm0);
}

Matrix ZeroModeRealization::r_tensor() const {
    Matrix acc(dim_ * dim_, dim_ * dim_);
    for (size_t b = 0; b < xp_pos_.size(); ++b) acc = acc + kron(xm_pos_[b], xp_pos_[b]);
    return acc;
}

Matrix ZeroModeRealization::r_tensor_h(const std::vector<Scalar>& alpha_h) const {
    Matrix acc(dim_ * dim_, dim_ * dim_);
    const auto& roots = cartan_.positive_roots();
    for (size_t b = 0; b < xp_pos_.size(); ++b) {
        Scalar gamma_h = CartanData::beta_of_h(roots[b], alpha_h);
        acc = acc - gamma_h * kron(xm_pos_[b], xp_pos_[b]);
    }
    return acc;
}

Matrix ZeroModeRealization::omega_h() const {
    int n = cartan_.rank();
    Matrix acc(dim_ * dim_, dim_ * dim_);
    const Matrix& w = cartan_.sym_cartan_inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (w(j, i).is_zero()) continue;
            Matrix xi_i = Scalar::exact_int(cartan_.d(i)) * h_[static_cast<size_t>(i)];
            Matrix xi_j = Scalar::exact_int(cartan_.d(j)) * h_[static_cast<size_t>(j)];
            acc = acc + w(j, i) * kron(xi_i, xi_j);
        }
    return acc;
}

Matrix ZeroModeRealization::omega_g() const {
    Matrix r = r_tensor();
    Matrix r21(dim_ * dim_, dim_ * dim_);
    for (size_t b = 0; b < xp_pos_.size(); ++b) r21 = r21 + kron(xp_pos_[b], xm_pos_[b]);
    return omega_h() + r + r21;
}

} // namespace yrk
