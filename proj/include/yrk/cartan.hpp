#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yrk/matrix.hpp"
#include "yrk/ratmat.hpp"

namespace yrk {

/// Laurent polynomial in q over the rationals.
struct LaurentPoly {
    int lo = 0;                    // exponent of c[0]
    std::vector<mpq_class> c;      // ascending exponents lo, lo+1, ...

    static LaurentPoly zero() { return {}; }
    static LaurentPoly q_number(int n); // [n]_q

    bool is_zero() const;
    mpq_class coeff(int power) const;
    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    void trim();

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;

    bool palindromic() const;      // invariant under q -> 1/q
    bool nonneg_integer() const;
    mpq_class eval_one() const;    // value at q = 1

    RatFun to_ratfun() const;      // over exact scalars, variable q
    static std::optional<LaurentPoly> from_ratfun(const RatFun& f);

    std::string str() const;
};

/// Root-system data: Cartan matrix, symmetrizers, positive roots, the level
/// ell = m * (dual Coxeter number), and the symmetrized form.
class CartanData {
public:
    static CartanData A1();
    static CartanData A2();
    static CartanData B2();
    /// Arbitrary finite-type data; hdual and m supplied by the caller and
    /// validated downstream through the coupling-matrix identity.
    static CartanData custom(std::vector<std::vector<int>> cartan_matrix,
                             std::vector<int> symmetrizers, int hdual, int m);

    const std::string& type() const { return type_; }
    int rank() const { return static_cast<int>(a_.size()); }
    int a(int i, int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int d(int i) const { return d_[static_cast<size_t>(i)]; }
    const std::vector<int>& symmetrizers() const { return d_; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return a_; }
    int hdual() const { return hdual_; }
    int m() const { return m_; }
    int ell() const { return m_ * hdual_; }

    /// (alpha_i, alpha_j) = d_i a_ij.
    int sym(int i, int j) const { return d(i) * a(i, j); }

    /// Positive roots as coordinate vectors in the simple-root basis,
    /// ordered by height then lexicographically.
    const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }
    static int height(const std::vector<int>& beta);

    /// beta(h) for h given by its values v_i = alpha_i(h).
    static Scalar beta_of_h(const std::vector<int>& beta, const std::vector<Scalar>& alpha_h);

    /// (beta, alpha_i) for beta in root coordinates.
    int root_dot_alpha(const std::vector<int>& beta, int i) const;

    /// Minimal number of positive roots summing to beta; throws if beta is
    /// not in the positive cone of the root lattice.
    int nu_min_decomposition(const std::vector<int>& beta) const;

    /// Inverse of the symmetrized Cartan matrix (exact); W in
    /// Omega_h = sum_ij W(j,i) xi_{i,0} (x) xi_{j,0}.
    const Matrix& sym_cartan_inverse() const { return da_inv_; }

    /// Expansion T(h) = sum_j c_j t_{j,1} for h with values alpha_i(h) = v_i.
    std::vector<Scalar> t_expansion(const std::vector<Scalar>& alpha_h) const;

    bool operator==(const CartanData& o) const {
        return a_ == o.a_ && d_ == o.d_ && hdual_ == o.hdual_ && m_ == o.m_;
    }

private:
    CartanData(std::string type, std::vector<std::vector<int>> a, std::vector<int> d,
               int hdual, int m);

    std::string type_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;
    int hdual_ = 0, m_ = 0;
    std::vector<std::vector<int>> pos_roots_;
    Matrix da_inv_;
};

/// c_ij(q) = [ell]_q ([d_i a_ij]_q)^{-1}, with certification that the result
/// is a Laurent-polynomial matrix satisfying
/// sum_k c_ik(q) [d_k a_kj]_q = delta_ij [ell]_q.
std::vector<std::vector<LaurentPoly>> q_coupling_matrix(const CartanData& c);

/// c_ij^(r): integer coefficient of q^r in c_ij(q).
struct QCouplingModes {
    std::vector<std::vector<LaurentPoly>> cq;
    /// list of (i, j, r, coefficient) with nonzero coefficient
    struct Mode { int i, j, r; long coeff; };
    std::vector<Mode> modes;
};
QCouplingModes q_coupling_modes(const CartanData& c);

/// A faithful realization of g by matrices, with normalized root vectors for
/// every positive root and the bracket recipes to rebuild them inside any
/// module for the zero modes.
class ZeroModeRealization {
public:
    static ZeroModeRealization build(const CartanData& c);

    const CartanData& cartan() const { return cartan_; }
    int dim() const { return dim_; }

    const Matrix& xp_simple(int i) const { return xp_[static_cast<size_t>(i)]; }
    const Matrix& xm_simple(int i) const { return xm_[static_cast<size_t>(i)]; }
    const Matrix& h_simple(int i) const { return h_[static_cast<size_t>(i)]; }

    /// Normalized root vectors on the realization, (x-_beta, x+_beta) = 1.
    const Matrix& xp_root(int b) const { return xp_pos_[static_cast<size_t>(b)]; }
    const Matrix& xm_root(int b) const { return xm_pos_[static_cast<size_t>(b)]; }

    /// Root vectors rebuilt from arbitrary per-node zero-mode matrices.
    Matrix xp_root_on(int b, const std::vector<Matrix>& xp0) const;
    Matrix xm_root_on(int b, const std::vector<Matrix>& xm0) const;

    /// Casimir tensors on (realization) x (realization).
    Matrix r_tensor() const;                      // sum x-_b (x) x+_b
    Matrix r_tensor_h(const std::vector<Scalar>& alpha_h) const; // -sum beta(h) x-_b (x) x+_b
    Matrix omega_h() const;
    Matrix omega_g() const;

private:
    struct Recipe {
        std::vector<int> word;  // x_beta = [x_{w0}, [x_{w1}, ..., x_{w_last}]]
        Scalar scale_p, scale_m;
    };

    CartanData cartan_ = CartanData::A1();
    int dim_ = 0;
    std::vector<Matrix> xp_, xm_, h_;
    std::vector<Matrix> xp_pos_, xm_pos_;
    std::vector<Recipe> recipes_;
};

} // namespace yrk
