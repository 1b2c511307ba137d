#pragma once

#include <random>
#include <vector>

#include "yrk/scalar.hpp"

namespace yrk {

/// Seeded sample-point generator over a disc of radius 10|hbar|.
/// Exact backend draws small Gaussian rationals; declared poles (and a
/// lattice around them) are avoided by rejection.
class SamplePool {
public:
    SamplePool(std::uint64_t seed, Backend backend, double radius = 10.0)
        : rng_(seed), backend_(backend), radius_(radius) {}

    Scalar draw() {
        if (backend_ == Backend::exact) {
            long den = 1 + static_cast<long>(rng_() % 4);
            long num = static_cast<long>(rng_() % (8 * static_cast<unsigned long>(radius_) + 1)) -
                       4 * static_cast<long>(radius_);
            long imn = static_cast<long>(rng_() % 7) - 3;
            return Scalar(mpq_class(num, 2 * den), mpq_class(imn, 4));
        }
        std::uniform_real_distribution<double> d(-radius_, radius_);
        return Scalar::flt(d(rng_), d(rng_) / 4);
    }

    Scalar draw_real() {
        Scalar s = draw();
        if (s.is_exact()) return Scalar(s.exact_re(), mpq_class(0));
        return Scalar::flt(s.to_complex().real());
    }

    /// Rejection sampling against forbidden points (and small shifts of them).
    Scalar draw_avoiding(const std::vector<Scalar>& avoid, double min_gap = 1e-3) {
        for (int tries = 0; tries < 400; ++tries) {
            Scalar s = draw();
            bool ok = true;
            for (const auto& p : avoid) {
                if (std::abs(s.to_complex() - p.to_complex()) < min_gap) { ok = false; break; }
            }
            if (ok) return s;
        }
        throw math_domain_error("sampling failed: forbidden set too dense");
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
    Backend backend_;
    double radius_;
};

} // namespace yrk
