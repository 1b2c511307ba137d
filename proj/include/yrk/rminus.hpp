#pragma once

#include "yrk/drinfeld.hpp"
#include "yrk/repn.hpp"

namespace yrk {

/// The strictly-lower-triangular factor, stored block by block along the
/// positive cone; each block is supported on weight pairs lowered by beta on
/// the first leg and raised by beta on the second.
struct TriangularBlockSeries {
    std::vector<std::pair<std::vector<int>, RatMat>> blocks; // (beta, full-size block)
    int dim = 0;
    Backend backend = Backend::exact;

    /// I + sum of blocks.
    RatMat assemble() const {
        RatMat r = RatMat::identity(dim, backend);
        for (const auto& [beta, blk] : blocks) r += blk;
        return r;
    }
};

/// Lower Gauss factor by the weight-block recursion in the regular Cartan
/// direction h (default: alpha_i(h) = 1 for every node). Entries are exact
/// rational functions of s.
TriangularBlockSeries rminus_blocks(const Representation& v1, const Representation& v2,
                                    std::vector<Scalar> alpha_h = {});

RatMat rminus_recursive(const Representation& v1, const Representation& v2,
                        std::vector<Scalar> alpha_h = {});

/// Rank-1 closed form: resummed composition series of residue words,
/// finite by nilpotency. Cross-validates the recursion.
RatMat rminus_sl2_closed_form(const Representation& v1, const Representation& v2);

/// Upper factor via the flip of the inverted lower factor at -s.
RatMat rplus_from_rminus(const Representation& v1, const Representation& v2,
                         std::vector<Scalar> alpha_h = {});

/// Intertwining battery: R- conjugates the shifted standard action into the
/// deformed Drinfeld action, plus the 1-jet and translation properties.
Report check_intertwine_minus(const Representation& v1, const Representation& v2);

/// Both cocycle identities at the given sample points.
Report check_cocycle(const Representation& v1, const Representation& v2,
                     const Representation& v3,
                     const std::vector<std::pair<Scalar, Scalar>>& samples);

} // namespace yrk
