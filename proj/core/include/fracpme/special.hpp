#pragma once

#include <span>
#include <vector>

namespace fracpme {

/// Gamma function for x > 0. Lanczos approximation, relative error well below
/// 1e-13 on the range used here (all callers stay inside (0, 4]).
/// Throws std::domain_error for x <= 0.
double gamma(double x);

struct QuadratureRule {
    enum class Kind { gauss_jacobi_alpha, composite_smooth };
    std::vector<double> nodes;    // strictly increasing, inside (0,1)
    std::vector<double> weights;  // positive
    Kind kind = Kind::gauss_jacobi_alpha;
};

/// n-point Gauss rule on (0,1) for the weight (1-s)^(-alpha), 0 < alpha < 1.
/// Integrates (1-s)^(-alpha) * p(s) exactly for polynomials p of degree
/// <= 2n-1:  sum_j w_j p(s_j) ~ int_0^1 (1-s)^(-alpha) p(s) ds.
/// Golub-Welsch on the Jacobi recurrence, so nodes/weights are accurate to
/// machine precision for the node counts used here (n <= 256).
QuadratureRule jacobi_rule(double alpha, int n);

/// Composite Simpson over uniformly spaced samples (step h). A trailing odd
/// interval is closed with the three-point Newton-Cotes rule.
double simpson(std::span<const double> values, double h);

/// Running integral F_i = int_0^{i h} of the sampled integrand; F_0 = 0.
/// Simpson pairs plus a quadratic correction on odd prefixes, O(h^4) global.
std::vector<double> cumulative_integral(std::span<const double> values, double h);

/// Composite Simpson of f over [a,b] with n panels (n rounded up to even).
template <typename F>
double integrate_simpson(F&& f, double a, double b, int n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(a + i * h);
    for (int i = 2; i < n; i += 2) even += f(a + i * h);
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace fracpme
