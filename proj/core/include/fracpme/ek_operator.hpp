#pragma once

#include <vector>

#include "fracpme/profile.hpp"

namespace fracpme {

/// Erdelyi-Kober integral I^{0,1-alpha}_{-2/alpha} applied to gridded
/// profiles:
///
///                1    / 1
///   (I p)(eta) = ---  |   (1-s)^(-alpha) p(s^(-alpha/2) eta) ds
///              G(1-a) / 0
///
/// The kernel singularity at s = 1 is integrated exactly by a Gauss-Jacobi
/// rule with weight exponent -alpha. The integrand vanishes identically for
/// s < s_lo = (eta/eta_star)^(2/alpha), so the rule is mapped onto
/// (s_lo, 1) when the profile has a front. Profiles without a front can grow
/// algebraically as s -> 0 (power-law fixtures); that end is covered by
/// Gauss-Legendre panels on a geometric subdivision, which keeps the full
/// composite rule accurate for any integrable behaviour.
class EkOperator {
  public:
    explicit EkOperator(double alpha, int gauss_nodes = 32);

    double alpha() const { return alpha_; }
    int gauss_nodes() const { return default_nodes_; }

    /// (I p)(eta); eta >= 0. Result is within [0, 1/Gamma(2-alpha)] for
    /// profiles in the unit class.
    double apply(const Profile& p, double eta) const;

    /// (I p) at every grid node of p. Node count safeguard: evaluations at
    /// three spot-check points are repeated with a doubled rule, and the rule
    /// is escalated (up to 256 nodes) while two consecutive counts disagree
    /// by more than 1e-9.
    std::vector<double> apply_grid(const Profile& p) const;

  private:
    double apply_with(const Profile& p, double eta, int rule_index) const;

    double alpha_;
    int default_nodes_;
    double inv_gamma_1ma_;   // 1/Gamma(1-alpha)
    double inv_gamma_2ma_;   // 1/Gamma(2-alpha)

    // Gauss-Jacobi rules on (0,1) for node counts {n, 2n, 4n, ...} <= 256,
    // plus, per rule, argument factors s^(-alpha/2) for the fixed mapping
    // onto (1/16, 1).
    struct Rule {
        std::vector<double> nodes, weights;
        std::vector<double> fixed_arg;  // (1/16 + 15/16 s_j)^(-alpha/2)
        std::vector<double> fixed_s;    // 1/16 + 15/16 s_j
    };
    std::vector<Rule> rules_;

    // Gauss-Legendre panels on [2^-(j+5), 2^-(j+4)): per sample, the factor
    // arg[k] = s_k^(-alpha/2) and weight w_k (1-s_k)^(-alpha).
    struct Panel {
        double lo, hi;
        double arg[16];
        double w[16];
    };
    std::vector<Panel> panels_;
};

}  // namespace fracpme
