#pragma once

#include <span>
#include <vector>

#include "fracpme/bounds.hpp"
#include "fracpme/profile.hpp"

namespace fracpme {

/// L1 convolution weights b_k = (k+1)^(1-alpha) - k^(1-alpha), k = 0..n-1,
/// positive and decreasing. The caller applies the 1/(Gamma(2-alpha) dt^alpha)
/// scaling. With a zero initial state the Riemann-Liouville derivative
/// coincides with the Caputo form this discretises.
std::vector<double> l1_weights(double alpha, int n);

struct OracleConfig {
    int nx = 512;
    int nt = 2048;
    double t_final = 1.0;
    /// Domain length = domain_factor * eta1(beta0) * t_final^(alpha/2); the
    /// front never reaches the right boundary.
    double domain_factor = 1.5;
    int corrections = 3;            // Picard relinearisations per step
    double front_threshold = 1e-3;  // level set used for the front trajectory

    void validate() const;
};

/// Space-time field of the direct time march. Row 0 is the zero initial
/// state; rows 1..nt carry u(0,t) = 1 and u(L,t) = 0.
struct PdeField {
    double dx = 0.0, dt = 0.0;
    int nx = 0, nt = 0;
    double alpha = 0.0, m = 0.0;
    std::vector<double> u;       // (nt+1) x nx, row-major
    std::vector<double> weights; // L1 weights, length nt
    double max_clip = 0.0;       // worst maximum-principle violation clipped away

    double* row(int n) { return u.data() + static_cast<std::size_t>(n) * nx; }
    const double* row(int n) const { return u.data() + static_cast<std::size_t>(n) * nx; }
    double time_of(int n) const { return dt * n; }

    /// Level-set front position at time level n (linear interpolation).
    double front_position(int n, double threshold) const;
};

/// Allocate the field and fill row 0 / boundary values; rows 1..nt are
/// produced by step().
PdeField make_field(const ProblemParams& params, const OracleConfig& config);

/// Fill row t_index from rows 0..t_index-1: L1 memory sum plus semi-implicit
/// degenerate diffusion, interface diffusivity (u_i^m + u_{i+1}^m)/2 frozen
/// at the previous corrector pass. Throws InstabilityError if the update
/// leaves [0 - eps, 1 + eps]; smaller violations are clipped and recorded.
void step(PdeField& field, int t_index, const OracleConfig& config);

/// Run the whole march.
PdeField run_oracle(const ProblemParams& params, const OracleConfig& config);

/// max over the given time levels of sup_x |u(x,t) - U(x t^(-alpha/2))|.
double compare_self_similar(const PdeField& field, const Profile& profile,
                            std::span<const int> levels);

/// Log-log least-squares slope of the front trajectory over the last decade
/// of simulated time; the self-similar ansatz gives alpha/2.
double front_exponent(const PdeField& field, double threshold);

}  // namespace fracpme
