#pragma once

#include "yrk/report.hpp"

namespace yrk {

/// The full verification battery over the shipped fixtures. Check ids are
/// grouped as criterion-1 .. criterion-15; seeded sampling is reproducible.
Report acceptance_battery(std::uint64_t seed);

} // namespace yrk
