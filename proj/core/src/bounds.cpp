#include "fracpme/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracpme/errors.hpp"
#include "fracpme/special.hpp"

namespace fracpme {

void ProblemParams::validate() const {
    std::string bad;
    if (!(alpha > 0.0 && alpha < 1.0)) {
        bad += "alpha must lie in (0,1), got " + std::to_string(alpha) + "; ";
    }
    if (!(m > 1.0)) {
        bad += "m must exceed 1, got " + std::to_string(m) + "; ";
    }
    if (!bad.empty()) throw std::invalid_argument("invalid problem parameters: " + bad);
}

double beta0(const ProblemParams& p) {
    return (2.0 - p.alpha) / std::sqrt(2.0 * gamma(2.0 - p.alpha) * (p.m + 1.0));
}

double g1(double eta, double beta, const ProblemParams& p) {
    const double c = (2.0 - p.alpha) * (2.0 - p.alpha) / (8.0 * gamma(2.0 - p.alpha));
    return 1.0 + (p.m + 1.0) * (-beta * eta + c * eta * eta);
}

double g2(double eta, double beta, const ProblemParams& p) {
    const double c = p.alpha * p.alpha / (8.0 * gamma(2.0 - p.alpha));
    return 1.0 + (p.m + 1.0) * (-beta * eta - c * eta * eta);
}

double eta1(double beta, const ProblemParams& p) {
    // smaller root of the upward parabola g1: [beta - sqrt(beta^2 - beta0^2)]/(2c).
    // beta^2 - 4c/(m+1) equals beta^2 - beta0^2; the factored form stays exact
    // when beta sits at the threshold.
    const double c = (2.0 - p.alpha) * (2.0 - p.alpha) / (8.0 * gamma(2.0 - p.alpha));
    const double b0 = beta0(p);
    double disc = (beta - b0) * (beta + b0);
    if (disc < 0.0) {
        if (disc > -1e-12) {
            disc = 0.0;  // beta numerically at beta0
        } else {
            throw BracketError("eta1: beta = " + std::to_string(beta) +
                               " below admissibility threshold beta0 = " + std::to_string(b0));
        }
    }
    return (beta - std::sqrt(disc)) / (2.0 * c);
}

double eta2(double beta, const ProblemParams& p) {
    // unique positive root of the downward parabola g2
    const double c = p.alpha * p.alpha / (8.0 * gamma(2.0 - p.alpha));
    return (-beta + std::sqrt(beta * beta + 4.0 * c / (p.m + 1.0))) / (2.0 * c);
}

double f_plus(double beta, const ProblemParams& p) {
    return -beta + (1.0 - p.alpha / 2.0) * eta1(beta, p) / gamma(2.0 - p.alpha);
}

double f_minus(double beta, const ProblemParams& p) {
    const double end = eta2(beta, p);
    const double expo = 1.0 / (1.0 + p.m);
    const double integral = integrate_simpson(
        [&](double z) { return std::pow(std::max(g2(z, beta, p), 0.0), expo); }, 0.0, end,
        512);
    return -beta + (1.0 - p.alpha / 2.0) / gamma(2.0 - p.alpha) * integral;
}

BoundsReport bounds_report(double beta, const ProblemParams& p) {
    BoundsReport r;
    r.beta = beta;
    r.beta0 = beta0(p);
    r.eta2 = eta2(beta, p);
    r.f_minus = f_minus(beta, p);
    if (beta >= r.beta0) {
        r.eta1 = eta1(beta, p);
        r.f_plus = f_plus(beta, p);
    }
    return r;
}

}  // namespace fracpme
