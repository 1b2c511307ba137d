#pragma once

#include <complex>

#include "yrk/drinfeld.hpp"
#include "yrk/repn.hpp"

namespace yrk {

/// Zeros and poles (with multiplicity, by repetition) of the eigenvalues of
/// every node current on each joint eigenline.
struct LineSpectrum {
    std::vector<std::vector<Scalar>> zeros, poles; // per node
};

struct XiSpectrum {
    Matrix basis, basis_inv;
    std::vector<LineSpectrum> lines; // per basis column
    bool exact = true;

    RatFun eigen_ratfun(int line, int node, const Scalar& one) const;
};

/// Joint spectral data of the commuting currents; composed structurally for
/// shift/Drinfeld provenance, computed (and certified by re-diagonalization)
/// otherwise.
XiSpectrum xi_spectrum(const Representation& v);

/// The abelian operator A(s): diagonal in the product eigenbasis with
/// rational eigenvalues kept in factored zero/pole form.
struct AbelianOperator {
    int dim1 = 0, dim2 = 0;
    Backend bk = Backend::exact;
    Scalar hbar;
    int ell = 1;
    Matrix basis, basis_inv; // on V1 (x) V2
    struct Eigen {
        std::vector<Scalar> zeros, poles;
    };
    std::vector<Eigen> eigen;
    bool exact = true;

    int dim() const { return dim1 * dim2; }
    RatFun eigen_ratfun(int k) const;
    RatMat as_ratmat() const;
    /// numeric value of the whole operator at a point
    Matrix eval(std::complex<double> s) const;
    std::complex<double> eval_eigen(int k, std::complex<double> s, int power = 1) const;
    /// second-order decay constant of log lambda_k at infinity
    std::complex<double> decay_c2(int k) const;
    /// excluded evaluation set for the chosen direction (zeros for up,
    /// poles for down), as numeric points
    std::vector<std::complex<double>> excluded_points(bool up) const;
};

AbelianOperator abelian_A(const Representation& v1, const Representation& v2);

struct ProductInfo {
    long factors = 0;
    double tail_estimate = 0.0;
    bool extrapolated = false;
};

/// Canonical solutions of R(s + ell*hbar) = A(s) R(s): the 'up' product of
/// inverse factors at s + n*ell*hbar (n >= 0), the 'down' product of factors
/// at s - n*ell*hbar (n >= 1). Truncation is adaptive with a 2-jet tail
/// bound; past the factor cap the log-tail is Richardson-extrapolated.
Matrix rzero_updown(const AbelianOperator& a, std::complex<double> s, bool up, double tol,
                    ProductInfo* info = nullptr);

/// Same product on a single eigenline.
std::complex<double> rzero_updown_eigen(const AbelianOperator& a, int line,
                                        std::complex<double> s, bool up, double tol,
                                        ProductInfo* info = nullptr);

/// Coefficients of the unique formal solution g of g(x+1) = g(x) - 1/x^2,
/// g = sum_k c_k x^{-k-1}, determined order by order.
std::vector<mpq_class> g_series(int order);
PowerSeries g_series_powerseries(int order);

/// Formal series solution R0(s) through s^{-order}: the Borel-type operator
/// applied to g(s / ell*hbar), exponentiated. Matrix coefficients on
/// V1 (x) V2 (exact backend).
PowerSeries rzero_formal(const Representation& v1, const Representation& v2, int order);

/// Direct Taylor form of log A at infinity from the t-modes (used to verify
/// the difference equation at series level).
PowerSeries log_abelian_series(const Representation& v1, const Representation& v2, int order);

/// Monodromy eta0(s) = Rup(s)^{-1} Rdown(s): periodicity and non-constancy.
Report monodromy_eta0(const Representation& v1, const Representation& v2,
                      const std::vector<std::complex<double>>& samples, double tol);

/// Cabling identities of the abelian factor over the Drinfeld tensor, the
/// shift covariance degeneration, and the intertwiner property.
Report check_rzero_cabling(const Representation& v1, const Representation& v2,
                           const Representation& v3, const Scalar& s1, const Scalar& s2,
                           bool up, double tol);

} // namespace yrk
