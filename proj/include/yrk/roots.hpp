#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "yrk/poly.hpp"

namespace yrk {

struct RootList {
    std::vector<Scalar> roots;       // one entry per root, multiplicity by repetition
    bool exact = true;               // false once a numeric fallback was used
};

/// All complex roots by the Durand-Kerner iteration (float arithmetic).
std::vector<std::complex<double>> roots_numeric(const Poly& p);

/// Clusters a numeric root list: roots closer than tol are merged.
/// Throws math_domain_error when two clusters overlap ambiguously
/// (separation between distinct clusters below 10*tol).
std::vector<std::pair<std::complex<double>, int>>
cluster_roots(const std::vector<std::complex<double>>& roots, double tol);

/// Exact square root in Q(i) when one exists.
std::optional<Scalar> exact_sqrt(const Scalar& z);

/// Factors an exact polynomial into linear factors over Q(i).
/// Tries the candidate points first (trial division), then degree<=2 leftovers,
/// then falls back to numeric roots (exact=false) for what remains.
RootList find_roots(const Poly& p, const std::vector<Scalar>& candidates);

} // namespace yrk
