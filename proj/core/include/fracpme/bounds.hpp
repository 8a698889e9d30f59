#pragma once

#include <optional>

namespace fracpme {

/// Problem data of the similarity equation: fractional order alpha in (0,1)
/// and nonlinearity exponent m > 1.
struct ProblemParams {
    double alpha = 0.5;
    double m = 2.0;

    /// Throws std::invalid_argument listing every violated constraint.
    void validate() const;
};

/// Admissibility threshold (2-alpha)/sqrt(2 Gamma(2-alpha) (m+1)). For slopes
/// above it the upper envelope has a real root, which forces the operator
/// image to cross zero.
double beta0(const ProblemParams& params);

/// Upper envelope 1 + (m+1)(-beta eta + (2-alpha)^2 eta^2 / (8 Gamma(2-alpha))).
double g1(double eta, double beta, const ProblemParams& params);

/// Lower envelope 1 + (m+1)(-beta eta - alpha^2 eta^2 / (8 Gamma(2-alpha))).
double g2(double eta, double beta, const ProblemParams& params);

/// Smaller positive root of g1(., beta); requires beta >= beta0 (throws
/// BracketError otherwise). A discriminant within 1e-12 of zero is clamped.
double eta1(double beta, const ProblemParams& params);

/// Unique positive root of g2(., beta); defined for every beta >= 0.
double eta2(double beta, const ProblemParams& params);

/// Flux upper bound -beta + (1 - alpha/2) eta1(beta) / Gamma(2-alpha);
/// requires beta >= beta0.
double f_plus(double beta, const ProblemParams& params);

/// Flux lower bound -beta + (1-alpha/2)/Gamma(2-alpha) *
/// int_0^{eta2(beta)} g2(z,beta)^{1/(1+m)} dz, composite Simpson (512 panels).
double f_minus(double beta, const ProblemParams& params);

/// All closed-form quantities evaluated at one slope.
struct BoundsReport {
    double beta = 0.0;
    double beta0 = 0.0;
    std::optional<double> eta1;    // present iff beta >= beta0
    double eta2 = 0.0;
    std::optional<double> f_plus;  // same domain as eta1
    double f_minus = 0.0;
};

BoundsReport bounds_report(double beta, const ProblemParams& params);

}  // namespace fracpme
