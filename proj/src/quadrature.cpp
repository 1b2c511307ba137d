#include "yrk/quadrature.hpp"

#include <cmath>

#include "yrk/rzero.hpp"

namespace yrk {

Matrix contour_integral(const std::function<Matrix(std::complex<double>)>& f,
                        std::complex<double> center, double radius, int nodes) {
    Matrix acc;
    for (int k = 0; k < nodes; ++k) {
        double theta = 2.0 * M_PI * k / nodes;
        std::complex<double> offset = std::polar(radius, theta);
        Matrix val = f(center + offset);
        // (2 pi i)^{-1} f(z) dz with dz = i * offset * dtheta
        Matrix term = Scalar(offset / static_cast<double>(nodes)) * val;
        acc = k == 0 ? term : acc + term;
    }
    return acc;
}

namespace {

// circle enclosing the given points with a safety margin
void enclosing_circle(const std::vector<Scalar>& pts, std::complex<double>& center,
                      double& radius) {
    center = 0.0;
    if (pts.empty()) {
        radius = 0.75;
        return;
    }
    for (const auto& p : pts) center += p.to_complex();
    center /= static_cast<double>(pts.size());
    radius = 0.0;
    for (const auto& p : pts) radius = std::max(radius, std::abs(p.to_complex() - center));
    radius += 0.75;
}

} // namespace

Matrix drinfeld_xp_quadrature(const Representation& v, const Representation& w,
                              std::complex<double> s, int node, int nodes) {
    RatMat xiv = v.current_xi(node).to_float();
    RatMat xpw = w.current_xp(node).to_float();
    std::complex<double> center;
    double radius;
    enclosing_circle(w.poles(), center, radius);
    auto f = [&](std::complex<double> z) {
        return kron(xiv.eval(Scalar(z - s)), xpw.eval(Scalar(z)));
    };
    Scalar hinv = v.hbar().to_float().inverse();
    Matrix first = kron(v.xp0(node).to_float(), Matrix::identity(w.dim(), Backend::floating));
    return first + hinv * contour_integral(f, center, radius, nodes);
}

Matrix drinfeld_xm_quadrature(const Representation& v, const Representation& w,
                              std::complex<double> s, int node, int nodes) {
    RatMat xmv = v.current_xm(node).to_float();
    RatMat xiw = w.current_xi(node).to_float();
    std::complex<double> center;
    double radius;
    enclosing_circle(v.poles(), center, radius);
    center += s; // contour around sigma(V) + s
    auto f = [&](std::complex<double> z) {
        return kron(xmv.eval(Scalar(z - s)), xiw.eval(Scalar(z)));
    };
    Scalar hinv = v.hbar().to_float().inverse();
    Matrix second = kron(Matrix::identity(v.dim(), Backend::floating), w.xm0(node).to_float());
    return second + hinv * contour_integral(f, center, radius, nodes);
}

Matrix abelian_A_quadrature(const Representation& v1, const Representation& v2,
                            std::complex<double> s, int nodes) {
    XiSpectrum s1 = xi_spectrum(v1);
    XiSpectrum s2 = xi_spectrum(v2);
    QCouplingModes modes = q_coupling_modes(v1.cartan());
    double hb_half = 0.5;
    std::complex<double> hbar = v1.hbar().to_complex();
    int ell = v1.cartan().ell();

    // diagonalized currents and their exact derivatives, per node
    auto diag_of = [](const Representation& v, const XiSpectrum& sp, int i) {
        return (RatMat(sp.basis_inv) * v.current_xi(i) * RatMat(sp.basis)).to_float();
    };
    std::vector<RatMat> d1, d2, d1p;
    for (int i = 0; i < v1.rank(); ++i) {
        d1.push_back(diag_of(v1, s1, i));
        d1p.push_back(d1.back().derivative());
        d2.push_back(diag_of(v2, s2, i));
    }

    int dim = v1.dim() * v2.dim();
    Matrix diag(dim, dim, Backend::floating);
    for (int l1 = 0; l1 < v1.dim(); ++l1) {
        // contour around all zeros and poles of the first-leg eigenvalues
        std::vector<Scalar> enclosed;
        for (int i = 0; i < v1.rank(); ++i) {
            for (const auto& z : s1.lines[static_cast<size_t>(l1)].zeros[static_cast<size_t>(i)])
                enclosed.push_back(z);
            for (const auto& p : s1.lines[static_cast<size_t>(l1)].poles[static_cast<size_t>(i)])
                enclosed.push_back(p);
        }
        std::complex<double> center;
        double radius;
        enclosing_circle(enclosed, center, radius);

        for (int l2 = 0; l2 < v2.dim(); ++l2) {
            std::complex<double> log_a = 0.0;
            for (const auto& mode : modes.modes) {
                std::complex<double> shc =
                    static_cast<double>(ell + mode.r) * hbar * hb_half + s;
                auto f = [&](std::complex<double> z) {
                    std::complex<double> lam =
                        d1[static_cast<size_t>(mode.i)](l1, l1).eval(z);
                    std::complex<double> dlam =
                        d1p[static_cast<size_t>(mode.i)](l1, l1).eval(z);
                    std::complex<double> other =
                        d2[static_cast<size_t>(mode.j)](l2, l2).eval(z + shc);
                    Matrix m(1, 1, Backend::floating);
                    m(0, 0) = Scalar(dlam / lam * std::log(other));
                    return m;
                };
                Matrix integral = contour_integral(f, center, radius, nodes);
                log_a -= static_cast<double>(mode.coeff) * integral(0, 0).to_complex();
            }
            diag(l1 * v2.dim() + l2, l1 * v2.dim() + l2) = Scalar(std::exp(log_a));
        }
    }
    Matrix basis = kron(s1.basis, s2.basis).to_float();
    Matrix basis_inv = kron(s1.basis_inv, s2.basis_inv).to_float();
    return basis * diag * basis_inv;
}

} // namespace yrk
