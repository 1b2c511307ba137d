#pragma once

#include "yrk/rminus.hpp"
#include "yrk/rzero.hpp"

namespace yrk {

/// Composed meromorphic R-matrix R+(s) R0(s) R-(s): rational outer factors
/// kept exact, abelian factor resummed numerically on evaluation.
class MeromorphicRMatrix {
public:
    MeromorphicRMatrix(const Representation& v1, const Representation& v2, bool up,
                       double tol = 1e-10);

    int dim() const { return abelian_.dim(); }
    bool up() const { return up_; }
    const RatMat& rational_plus() const { return rplus_; }
    const RatMat& rational_minus() const { return rminus_; }
    const AbelianOperator& abelian() const { return abelian_; }

    Matrix eval(std::complex<double> s, ProductInfo* info = nullptr) const;

    /// Composed asymptotic series: exact rational factors times the formal
    /// abelian series.
    PowerSeries series(int order) const;

private:
    bool up_;
    double tol_;
    RatMat rplus_, rminus_;
    AbelianOperator abelian_;
    PowerSeries formal_; // abelian factor series (exact), built lazily in series()
    Representation v1_, v2_;
};

MeromorphicRMatrix rfull(const Representation& v1, const Representation& v2, bool up,
                         double tol = 1e-10);

/// QYBE residuals R12 R13 R23 = R23 R13 R12 at the sample points.
Report check_qybe(const Representation& v1, const Representation& v2, const Representation& v3,
                  bool up, const std::vector<std::pair<Scalar, Scalar>>& samples, double tol);

/// Cabling through the standard tensor product, the module-morphism
/// property, shift covariance and unitarity.
Report check_full_cabling_unitarity(const Representation& v1, const Representation& v2,
                                    const Representation& v3, bool up,
                                    const std::vector<std::pair<Scalar, Scalar>>& samples,
                                    double tol);

/// Error profile of the asymptotic series along a ray, with fitted order
/// constants.
Report asymptotic_report(const Representation& v1, const Representation& v2, bool up, int order,
                         const std::vector<double>& ray_multipliers, double tol);

} // namespace yrk
