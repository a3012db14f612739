#include "floodscope/rng.hpp"

#include "floodscope/common.hpp"

#include <cmath>

namespace floodscope {

double Rng::next_normal() {
    // u1 in (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

double Rng::next_truncated_normal(double mu, double sigma, double lo, double hi) {
    if (sigma < 0.0) raise(Errc::bad_sigma, "sigma must be >= 0");
    if (sigma == 0.0) return mu < lo ? lo : (mu > hi ? hi : mu);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double x = mu + sigma * next_normal();
        if (x >= lo && x <= hi) return x;
    }
    // Interval is far outside the distribution's mass; pin to the near edge.
    return mu < lo ? lo : hi;
}

} // namespace floodscope
