// Shared test fixtures beyond the built-in constructors.
#pragma once

#include "yrk/repn.hpp"

namespace fixtures {

using namespace yrk;

// Pullback of the fundamental representation along the rank-2 evaluation
// map: node-1 currents have their pole at a, node-2 currents at a + hbar/2,
// and t_{i,1} = xi_{i,1} - (hbar/2) xi_{i,0}^2 fixes the diagonals.
inline Representation sl3_eval(const Scalar& a, const Scalar& hbar) {
    Backend bk = hbar.backend();
    auto E = [&](int i, int j) {
        return Matrix::unit(3, 3, i, j, hbar.one_like());
    };
    Matrix xi1 = E(0, 0) - E(1, 1);
    Matrix xi2 = E(1, 1) - E(2, 2);
    Scalar half = bk == Backend::exact ? Scalar::exact_ratio(1, 2) : Scalar::flt(0.5);
    Scalar a2 = a + half * hbar;
    // t_{1,1} = a xi1 - h/2 (E11 + E22), t_{2,1} = a2 xi2 - h/2 (E22 + E33)
    Matrix t1 = a * xi1 - (half * hbar) * (E(0, 0) + E(1, 1));
    Matrix t2 = a2 * xi2 - (half * hbar) * (E(1, 1) + E(2, 2));
    Provenance prov;
    prov.kind = Provenance::Kind::user;
    return Representation::from_generators(
        CartanData::A2(), hbar, {xi1, xi2}, {E(0, 1), E(1, 2)}, {E(1, 0), E(2, 1)}, {t1, t2},
        {a, a2}, std::move(prov));
}

} // namespace fixtures
