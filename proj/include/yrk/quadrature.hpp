#pragma once

#include <complex>
#include <functional>

#include "yrk/repn.hpp"

namespace yrk {

/// (2 pi i)^{-1} oint f(z) dz over a circle, composite trapezoid rule.
/// Exponentially accurate for integrands analytic near the contour; kept as
/// a validator for the residue-exact paths.
Matrix contour_integral(const std::function<Matrix(std::complex<double>)>& f,
                        std::complex<double> center, double radius, int nodes = 256);

/// Quadrature form of the deformed-coproduct contour terms at a numeric
/// shift: the raising term integrates around sigma(W), the lowering one
/// around sigma(V)+s.
Matrix drinfeld_xp_quadrature(const Representation& v, const Representation& w,
                              std::complex<double> s, int node, int nodes = 256);
Matrix drinfeld_xm_quadrature(const Representation& v, const Representation& w,
                              std::complex<double> s, int node, int nodes = 256);

/// Quadrature form of the abelian operator at a numeric point, evaluated on
/// diagonalized currents (log-derivative against the shifted logarithm);
/// independent of the zero/pole extraction behind the residue-exact A.
Matrix abelian_A_quadrature(const Representation& v1, const Representation& v2,
                            std::complex<double> s, int nodes = 256);

} // namespace yrk
