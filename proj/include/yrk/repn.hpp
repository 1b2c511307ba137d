#pragma once

#include <memory>
#include <string>
#include <vector>

#include "yrk/cartan.hpp"
#include "yrk/matrix.hpp"
#include "yrk/ratmat.hpp"
#include "yrk/report.hpp"
#include "yrk/series.hpp"

namespace yrk {

class Representation;

/// How a representation was built; drives structured pole sets and
/// spectral-data composition.
struct Provenance {
    enum class Kind { trivial, sl2_eval, user, standard_tensor, drinfeld_tensor, shift };
    Kind kind = Kind::user;
    Scalar param;                                   // evaluation point / tensor shift
    std::shared_ptr<const Representation> left, right;
    std::string describe() const;
};

/// Joint eigenspace data of the commuting family {xi_{i,0}}.
class WeightDecomposition {
public:
    WeightDecomposition() = default;
    /// Simultaneous exact (or toleranced) eigensplitting; throws if some
    /// xi_{i,0} is not semisimple with integer eigenvalues.
    static WeightDecomposition compute(const std::vector<Matrix>& xi0);

    int blocks() const { return static_cast<int>(weights_.size()); }
    const std::vector<long>& weight(int b) const { return weights_[static_cast<size_t>(b)]; }
    /// Columns of the eigenbasis belonging to block b.
    const std::vector<int>& block_cols(int b) const { return cols_[static_cast<size_t>(b)]; }
    int block_of_col(int col) const { return col_block_[static_cast<size_t>(col)]; }
    long col_weight(int col, int node) const {
        return weights_[static_cast<size_t>(col_block_[static_cast<size_t>(col)])][static_cast<size_t>(node)];
    }
    const Matrix& basis() const { return basis_; }
    const Matrix& basis_inv() const { return basis_inv_; }
    Matrix projector(int b) const;

private:
    std::vector<std::vector<long>> weights_; // per block, per node
    std::vector<std::vector<int>> cols_;
    std::vector<int> col_block_;
    Matrix basis_, basis_inv_;
};

/// Finite-dimensional module over the Yangian, stored through the finite
/// generating set {xi_{i,0}, x^+-_{i,0}, t_{i,1}}; all currents and higher
/// modes are derived from these.
class Representation {
public:
    static Representation trivial(const CartanData& c, const Scalar& hbar);
    /// The 2-dimensional evaluation module of the rank-1 Yangian at point a.
    static Representation evaluation_sl2(const Scalar& a, const Scalar& hbar);
    static Representation from_generators(const CartanData& c, const Scalar& hbar,
                                          std::vector<Matrix> xi0, std::vector<Matrix> xp0,
                                          std::vector<Matrix> xm0, std::vector<Matrix> t1,
                                          std::vector<Scalar> poles, Provenance prov);

    /// Pullback along the spectral shift by a: t_{i,1} -> t_{i,1} + a xi_{i,0}.
    Representation shifted(const Scalar& a) const;

    /// Float-backend copy (provenance converted recursively).
    Representation to_float() const;

    const CartanData& cartan() const { return cartan_; }
    const Scalar& hbar() const { return hbar_; }
    int dim() const { return dim_; }
    int rank() const { return cartan_.rank(); }
    Backend backend() const { return hbar_.backend(); }
    const Provenance& provenance() const { return prov_; }

    const Matrix& xi0(int i) const { return xi0_[static_cast<size_t>(i)]; }
    const Matrix& xp0(int i) const { return xp0_[static_cast<size_t>(i)]; }
    const Matrix& xm0(int i) const { return xm0_[static_cast<size_t>(i)]; }
    const Matrix& t1(int i) const { return t1_[static_cast<size_t>(i)]; }

    /// sigma(V): finite superset of the poles of all currents.
    const std::vector<Scalar>& poles() const { return poles_; }
    std::vector<Scalar> shifted_poles(const Scalar& a) const;

    const WeightDecomposition& weights() const { return weights_; }

    /// Rational currents in u from the resolvent of ad(t_{i,1}).
    RatMat current_xp(int i) const;
    RatMat current_xm(int i) const;
    RatMat current_xi(int i) const;
    /// t_i(u) as a truncated series in 1/u (log of the xi current).
    PowerSeries t_current_series(int i, int order) const;
    /// Modes: x^+-_{i,r} and xi_{i,r} read off the currents; t_{i,r} from the
    /// log-series. r = 0,1 come straight from the generator set.
    Matrix mode_xp(int i, int r) const;
    Matrix mode_xm(int i, int r) const;
    Matrix mode_xi(int i, int r) const;
    Matrix mode_t(int i, int r) const;

    /// T(h) = sum_j c_j t_{j,1} for the Cartan element with alpha_i(h) = v_i.
    Matrix t_of_h(const std::vector<Scalar>& alpha_h) const;

    /// Defining-relation battery; two-variable identities are sampled in one
    /// variable and kept rational in the other.
    Report verify_relations(std::uint64_t seed = 7, double tol = 0.0) const;

    bool same_theory(const Representation& o) const {
        return cartan_ == o.cartan_ && hbar_ == o.hbar_;
    }

private:
    Representation() : hbar_(Scalar::exact_int(1)) {}

    CartanData cartan_ = CartanData::A1();
    Scalar hbar_;
    int dim_ = 0;
    std::vector<Matrix> xi0_, xp0_, xm0_, t1_;
    std::vector<Scalar> poles_;
    Provenance prov_;
    WeightDecomposition weights_;
};

/// V (x)_s W along the shifted standard coproduct: zero modes primitive,
/// t_{i,1} gets the s-shift on the first leg and the root-vector correction.
Representation standard_tensor(const Representation& v, const Representation& w, const Scalar& s);

/// The correction tensor -hbar * sum_beta (beta, alpha_i) x^-_beta (x) x^+_beta
/// evaluated on V (x) W.
Matrix coproduct_correction(const Representation& v, const Representation& w, int node);

/// Casimir tensors evaluated on V (x) W.
Matrix r_tensor_on(const Representation& v, const Representation& w);
Matrix omega_h_on(const Representation& v, const Representation& w);
Matrix omega_g_on(const Representation& v, const Representation& w);

/// Shared realization cache (built once per Cartan type).
const ZeroModeRealization& realization_for(const CartanData& c);

} // namespace yrk
