#pragma once

#include "yrk/repn.hpp"

namespace yrk {

/// Generator matrices of a tensor-product action with entries rational in
/// the shift parameter s (one RatMat per node).
struct SymbolicModule {
    CartanData cartan = CartanData::A1();
    Scalar hbar;
    int dim = 0;
    std::vector<RatMat> xi0, xp0, xm0, t1;

    const RatMat& gen(char which, int node) const {
        switch (which) {
            case 'x': return xi0[static_cast<size_t>(node)];
            case '+': return xp0[static_cast<size_t>(node)];
            case '-': return xm0[static_cast<size_t>(node)];
            default: return t1[static_cast<size_t>(node)];
        }
    }
};

/// sum_{p in poles} Res_{v=p} [ left(v-s) (x) right(v) ], entries rational
/// in s. The poles are those of `right`; `left` must be regular there.
RatMat residue_kron_shift_left(const RatMat& left, const RatMat& right,
                               const std::vector<Scalar>& poles);

/// sum_{q in poles} Res_{w=q} [ left(w) (x) right(w+s) ]; poles of `left`.
RatMat residue_kron_shift_right(const RatMat& left, const RatMat& right,
                                const std::vector<Scalar>& poles);

/// Deformed Drinfeld tensor product, shift kept symbolic.
SymbolicModule drinfeld_tensor_symbolic(const Representation& v, const Representation& w);

/// Shifted standard coproduct with the shift kept symbolic.
SymbolicModule standard_tensor_symbolic(const Representation& v, const Representation& w);

/// Deformed Drinfeld tensor product at a numeric shift; requires
/// (sigma(V)+s) and sigma(W) disjoint.
Representation drinfeld_tensor(const Representation& v, const Representation& w, const Scalar& s);

/// Currents of the Drinfeld tensor action straight from the contour
/// formulae (variable u, numeric shift); used to cross-check the resolvent
/// route on the composed module.
RatMat drinfeld_current_xi(const Representation& v, const Representation& w, const Scalar& s, int node);
RatMat drinfeld_current_xp(const Representation& v, const Representation& w, const Scalar& s, int node);
RatMat drinfeld_current_xm(const Representation& v, const Representation& w, const Scalar& s, int node);

/// Laurent-series form of the deformed coproduct on the generator set
/// (and modes r >= 0 of the currents), truncated at s^{-order}.
struct DrinfeldSeries {
    PowerSeries xi0, xp0, xm0, t1; // matrix coefficients, variable s
};
DrinfeldSeries drinfeld_tensor_series(const Representation& v, const Representation& w, int node,
                                      int order);

/// (V1 (x)_{s1} V2) (x)_{s2} V3 = V1 (x)_{s1+s2} (V2 (x)_{s2} V3) as
/// generator matrices, plus counit and shift-covariance degenerations.
Report coassociativity_check(const Representation& v1, const Representation& v2,
                             const Representation& v3, const Scalar& s1, const Scalar& s2);

} // namespace yrk
