#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fracpme/bounds.hpp"
#include "fracpme/ek_operator.hpp"
#include "fracpme/profile.hpp"

namespace fracpme {

struct SolverConfig {
    /// Grid spacing; unset means span/1024 where span is the closed-form
    /// support scale at the given slope.
    std::optional<double> grid_step;
    double picard_tol = 1e-10;     // sup-norm stop for the fixed-point loop
    int max_picard_iters = 500;
    double damping = 1.0;          // Y <- (1-d) Y + d A(Y)
    int gauss_nodes = 32;          // base Erdelyi-Kober rule size
    /// When positive, a run whose residual stops improving for this many
    /// iterations exits early as non-converged (stagnation detection used by
    /// the shooting classification; off by default).
    int stagnation_window = 0;

    void validate() const;
};

struct FixedPointDiagnostics {
    int iterations = 0;
    double final_residual = 0.0;
    std::vector<double> eta_star_history;
    bool converged = false;
    bool front_found = false;       // false on the continuation branch (no zero)
    double max_clamp_excess = 0.0;  // worst range violation absorbed by clamping
};

/// One application of the integral operator
///   S(Y)(eta) = 1 + (m+1) [ -beta eta
///                           + int_0^eta ((1-alpha/2) eta - z) (I U)(z) dz ],
/// U = Y^(1/(1+m)), evaluated at every grid node. The eta-dependence
/// factorises, so the integral reduces to two running integrals of W = I U
/// and z W computed once per sweep.
struct OperatorImage {
    std::vector<double> values;         // raw S, untruncated (negative past the zero)
    std::vector<double> ek_values;      // W at the grid nodes
    std::vector<double> ek_cumulative;  // P_i = int_0^{eta_i} W dz
    double grid_step = 0.0;

    double value_at(double eta) const;       // linear interpolation of values
    double cumulative_at(double eta) const;  // linear interpolation of P
};

OperatorImage apply_S(const Profile& y, double beta, const ProblemParams& params,
                      const EkOperator& ek);

/// First grid cell where the raw image changes sign, refined on the linear
/// interpolant. Scans up to eta1(beta)+2h for admissible slopes (the zero is
/// guaranteed there), otherwise to the end of the grid.
/// Throws NoZeroError when no sign change is found inside the scan range.
double detect_eta_star(std::span<const double> raw, double grid_step, double beta,
                       const ProblemParams& params);

/// Non-throwing variant: std::nullopt when the image never crosses zero.
std::optional<double> find_first_crossing(std::span<const double> raw, double grid_step);

/// Truncated operator A: S clamped into [0,1] on [0, eta*), zero beyond.
Profile apply_A(const Profile& y, double beta, const ProblemParams& params,
                const EkOperator& ek, FixedPointDiagnostics* diag = nullptr);

struct PicardResult {
    Profile profile;  // fixed-point Y with its detected front
    FixedPointDiagnostics diagnostics;
};

/// Picard iteration Y_{k+1} = (1-d) Y_k + d A(Y_k) from Y_0 = clip(g2, 0, 1)
/// until the sup-norm change drops below picard_tol.
///
/// Slopes below the critical one produce an image without a zero; the
/// iteration then runs with plain range clamping and no truncation and the
/// result is flagged front_found = false. Throws NonConvergenceError after
/// max_picard_iters.
PicardResult picard_solve(double beta, const ProblemParams& params, const SolverConfig& config);

/// Same, seeded with an explicit initial iterate (its grid is adopted).
PicardResult picard_solve(double beta, const ProblemParams& params, const SolverConfig& config,
                          const Profile& initial);

/// Non-throwing variant: a run that exhausts max_picard_iters comes back with
/// diagnostics.converged = false instead of raising. Right at the critical
/// slope the free-front iteration can flip between fronted and frontless
/// states indefinitely, which is classification data rather than an error.
PicardResult try_picard_solve(double beta, const ProblemParams& params,
                              const SolverConfig& config);
PicardResult try_picard_solve(double beta, const ProblemParams& params,
                              const SolverConfig& config, const Profile& initial);

/// Sup over interior nodes with U > 0.05 of the pointwise defect of the
/// differential form, |(U^m U')' - [(1-alpha) - (alpha/2) eta d/deta] I U|,
/// by centred differences. Validation only; the solver never uses it.
double residual_eq2(const Profile& profile, double beta, const ProblemParams& params,
                    const EkOperator& ek);

/// Grid geometry used by the solver at a given slope: spacing and node count.
/// The grid spans the closed-form support scale plus margin (a wider margin
/// below beta0, where the front of the critical solution lies beyond the
/// naive scale).
struct GridSpec {
    double h = 0.0;
    std::size_t points = 0;
};
GridSpec solver_grid(double beta, const ProblemParams& params, const SolverConfig& config);

}  // namespace fracpme
