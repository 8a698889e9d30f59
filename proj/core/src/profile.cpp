#include "fracpme/profile.hpp"

#include <algorithm>
#include <cmath>

namespace fracpme {

double Profile::operator()(double eta) const {
    if (eta >= eta_star) return 0.0;
    const auto n = values.size();
    if (n == 0) return 0.0;
    if (n == 1) return values[0];
    const double idx = eta / grid_step;
    const double last = static_cast<double>(n - 1);
    if (idx <= 0.0) return values[0];
    if (idx >= last) {
        // inside the support but past the grid: extrapolate from the last cell
        const double ext = values[n - 1] + (values[n - 1] - values[n - 2]) * (idx - last);
        return unit_range ? std::clamp(ext, 0.0, 1.0) : ext;
    }
    const auto i = static_cast<std::size_t>(idx);
    const double frac = idx - static_cast<double>(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

bool in_unit_class(const Profile& p, double tol) {
    if (p.values.empty()) return false;
    if (std::abs(p.values[0] - 1.0) > tol) return false;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double v = p.values[i];
        if (v < -tol || v > 1.0 + tol) return false;
        if (static_cast<double>(i) * p.grid_step >= p.eta_star && std::abs(v) > tol) return false;
    }
    return true;
}

Profile to_physical(const Profile& y, double m) {
    if (y.represents == Profile::Represents::U) return y;
    Profile u = y;
    u.represents = Profile::Represents::U;
    const double expo = 1.0 / (1.0 + m);
    for (auto& v : u.values) v = std::pow(std::max(v, 0.0), expo);
    return u;
}

}  // namespace fracpme
