#include "fracpme/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracpme {

namespace {

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_half_plane(double x) {
    // valid for x >= 0.5
    double a = kLanczos[0];
    const double t = x + kLanczosG - 0.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma: argument must be positive, got " + std::to_string(x));
    }
    if (x < 0.5) return lanczos_half_plane(x + 1.0) / x;
    return lanczos_half_plane(x);
}

namespace {

// Symmetric tridiagonal eigensolve (implicit-shift QL) that accumulates only
// the first component of each eigenvector, which is all Golub-Welsch needs.
// diag/sub are overwritten; on return diag holds eigenvalues and first holds
// the corresponding first components. Classic gaucof-style routine.
void tridiag_eigen_first_components(std::vector<double>& diag, std::vector<double>& sub,
                                    std::vector<double>& first) {
    const int n = static_cast<int>(diag.size());
    first.assign(n, 0.0);
    first[0] = 1.0;
    if (n == 1) return;
    sub.push_back(0.0);  // sub[n-1] sentinel

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(sub[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("jacobi_rule: QL failed to converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * sub[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + sub[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * sub[i];
                    const double b = c * sub[i];
                    r = std::hypot(f, g);
                    sub[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        sub[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                    f = first[i + 1];
                    first[i + 1] = s * first[i] + c * f;
                    first[i] = c * first[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                diag[l] -= p;
                sub[l] = g;
                sub[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

QuadratureRule jacobi_rule(double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("jacobi_rule: alpha must lie in (0,1)");
    }
    if (n < 2) throw std::domain_error("jacobi_rule: need at least 2 nodes");

    // Monic three-term recurrence for the Jacobi weight (1-x)^a (1+x)^b on
    // [-1,1] with a = -alpha, b = 0.
    const double a = -alpha;
    std::vector<double> diag(n), sub(n - 1);
    diag[0] = -a / (a + 2.0);
    for (int k = 1; k < n; ++k) {
        const double den = (2.0 * k + a) * (2.0 * k + a + 2.0);
        diag[k] = -a * a / den;  // (b^2 - a^2) / den with b = 0
    }
    if (n > 1) {
        sub[0] = std::sqrt(4.0 * (1.0 + a) / ((2.0 + a) * (2.0 + a) * (3.0 + a)));
        for (int k = 2; k < n; ++k) {
            const double t = 2.0 * k + a;
            const double bk =
                4.0 * k * k * (k + a) * (k + a) / (t * t * (t + 1.0) * (t - 1.0));
            sub[k - 1] = std::sqrt(bk);
        }
    }

    std::vector<double> first;
    tridiag_eigen_first_components(diag, sub, first);

    // mu0 = int_{-1}^{1} (1-x)^(-alpha) dx
    const double mu0 = std::pow(2.0, 1.0 - alpha) / (1.0 - alpha);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::gauss_jacobi_alpha;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double wmap = std::pow(2.0, alpha - 1.0);  // map [-1,1] -> (0,1)
    for (int i = 0; i < n; ++i) {
        const int j = order[i];
        rule.nodes[i] = 0.5 * (diag[j] + 1.0);
        rule.weights[i] = wmap * mu0 * first[j] * first[j];
    }
    return rule;
}

double simpson(std::span<const double> v, double h) {
    const auto n = v.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (v[0] + v[1]);
    double acc = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) acc += h / 3.0 * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
    if (i + 1 < n) {
        // trailing single interval, quadratic through the last three samples
        acc += h / 12.0 * (-v[n - 3] + 8.0 * v[n - 2] + 5.0 * v[n - 1]);
    }
    return acc;
}

std::vector<double> cumulative_integral(std::span<const double> v, double h) {
    const auto n = v.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
            out[i] = out[i - 2] + h / 3.0 * (v[i - 2] + 4.0 * v[i - 1] + v[i]);
        } else if (i == 1) {
            out[1] = n >= 3 ? h / 12.0 * (5.0 * v[0] + 8.0 * v[1] - v[2])
                            : 0.5 * h * (v[0] + v[1]);
        } else {
            out[i] = out[i - 1] + h / 12.0 * (-v[i - 2] + 8.0 * v[i - 1] + 5.0 * v[i]);
        }
    }
    return out;
}

}  // namespace fracpme
