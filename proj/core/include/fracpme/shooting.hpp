#pragma once

#include <utility>
#include <vector>

#include "fracpme/volterra.hpp"

namespace fracpme {

/// Front flux functional of a converged profile:
///   -beta + (1 - alpha/2) int_0^{eta*} (I U)(z) dz,
/// the value the no-flux condition drives to zero. The boundary term of the
/// differentiated equation is absent because I U vanishes at the front of a
/// compactly supported profile.
double flux(const Profile& profile, double beta, const ProblemParams& params,
            const EkOperator& ek);
double flux(const Profile& profile, double beta, const ProblemParams& params);

struct ShootingResult {
    double beta_star = 0.0;
    double eta_star = 0.0;
    Profile profile;                    // converged physical profile U
    double flux_residual = 0.0;         // flux functional at the solution
    double front_value_residual = 0.0;  // raw operator image at the front
    std::vector<std::pair<double, double>> bracket_history;
    std::vector<FixedPointDiagnostics> picard_diagnostics;
    bool upward_bracket = false;  // true if flux(beta0) > 0 held and the
                                  // textbook upward bisection was used
};

/// Find the slope for which the compactly supported fixed point satisfies the
/// no-flux condition at its front.
///
/// The flux of any fixed point truncated at a transversal zero equals the
/// (nonpositive) slope of the operator image there, so the no-flux solution
/// is the tangential touch at the lower edge of the zero-admitting slope
/// range. The search proceeds in two stages: a bisection on the
/// front-existence predicate locates the critical slope, then an alternation
/// polishes the pair (beta, front): the front position is updated from the
/// front-zone shape (the image behaves like (front - eta)^p with
/// p = (2-alpha)(m+1)/m there) and the slope re-solved so the image vanishes
/// at the pinned front.
///
/// If the flux at beta0 is positive (not observed for any admissible
/// parameters; kept for the sign-change reading of the existence argument)
/// an ordinary upward doubling bracket plus bisection on the flux sign runs
/// instead.
ShootingResult shoot(const ProblemParams& params, const SolverConfig& config,
                     double shoot_tol = 1e-8);

/// Flux on a slope grid, evaluated concurrently (at most `jobs` at a time).
/// Entries with no front report the flux of the frontless continuation
/// evaluated at the end of its grid. Scan mode exists to surface any
/// additional sign structure; all sign changes found are returned.
struct FluxScan {
    std::vector<double> betas;
    std::vector<double> flux_values;
    std::vector<bool> front_found;
    std::vector<std::pair<double, double>> sign_changes;
};
FluxScan flux_scan(const ProblemParams& params, const SolverConfig& config, double beta_lo,
                   double beta_hi, int count, int jobs = 1);

}  // namespace fracpme
