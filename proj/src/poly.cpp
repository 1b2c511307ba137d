#include "yrk/poly.hpp"

namespace yrk {

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.backend() != Backend::exact || b.backend() != Backend::exact)
        throw backend_mismatch();
    Poly x = a.monic(), y = b.monic();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x;
}

} // namespace yrk
