#pragma once

#include <limits>
#include <vector>

namespace fracpme {

/// A function sampled on the uniform grid eta_i = i * grid_step, together
/// with its free boundary. values may store either the fixed-point variable
/// Y = U^(m+1) or the physical profile U itself; both live in [0,1] with
/// value 1 at the origin and vanish from eta_star on.
///
/// eta_star = +inf marks a profile without a front (closed-form test
/// fixtures, or the continuation branch below the critical slope).
struct Profile {
    enum class Represents { Y, U };

    double grid_step = 0.0;
    std::vector<double> values;
    double eta_star = std::numeric_limits<double>::infinity();
    Represents represents = Represents::Y;

    /// Fixtures taking values outside [0,1] set this to false so that the
    /// beyond-grid extrapolation is not clamped into the unit range.
    bool unit_range = true;

    double eta_max() const { return grid_step * static_cast<double>(values.size() - 1); }

    /// Piecewise-linear evaluation: zero at and beyond eta_star; past the last
    /// grid node (but inside the support) linear extrapolation from the last
    /// two nodes, clamped to [0,1] when unit_range.
    double operator()(double eta) const;
};

/// Membership in the solution class: values in [0,1] within tol, value 1 at
/// the origin, zero from eta_star on.
bool in_unit_class(const Profile& p, double tol = 1e-12);

/// U = Y^(1/(1+m)) nodewise (non-Y input is returned unchanged).
Profile to_physical(const Profile& y, double m);

}  // namespace fracpme
