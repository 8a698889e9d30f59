#include "reference.hpp"

#include <algorithm>
#include <cmath>

#include "fracpme/special.hpp"

namespace fracpme::testref {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double singular_kernel_integral(const std::function<double(double)>& g, double alpha,
                                double rel_tol) {
    // v = (1-s)^(1-alpha):  int_0^1 (1-s)^(-alpha) g(s) ds
    //                     = 1/(1-alpha) int_0^1 g(1 - v^(1/(1-alpha))) dv
    const double expo = 1.0 / (1.0 - alpha);
    auto h = [&](double v) { return g(1.0 - std::pow(v, expo)); };
    return integrate_adaptive(h, 0.0, 1.0, rel_tol) / (1.0 - alpha);
}

double ek_reference(const std::function<double(double)>& u, double eta, double alpha,
                    double rel_tol) {
    auto g = [&](double s) {
        return s > 0.0 ? u(std::pow(s, -alpha / 2.0) * eta) : (eta > 0.0 ? 0.0 : u(0.0));
    };
    return singular_kernel_integral(g, alpha, rel_tol) / fracpme::gamma(1.0 - alpha);
}

Profile random_monotone_profile(std::mt19937& rng, double grid_step, std::size_t points) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> knot_count(2, 6);

    Profile p;
    p.grid_step = grid_step;
    p.represents = Profile::Represents::Y;
    p.values.resize(points);

    const double span = grid_step * static_cast<double>(points - 1);
    p.eta_star = span * (0.3 + 0.65 * unif(rng));

    // decreasing piecewise-linear from 1 to 0 over [0, eta_star]
    const int k = knot_count(rng);
    std::vector<double> xs{0.0}, ys{1.0};
    for (int i = 1; i < k; ++i) xs.push_back(p.eta_star * unif(rng));
    xs.push_back(p.eta_star);
    std::sort(xs.begin(), xs.end());
    for (int i = 1; i < k; ++i) ys.push_back(ys.back() * unif(rng));
    ys.push_back(0.0);

    for (std::size_t i = 0; i < points; ++i) {
        const double eta = grid_step * static_cast<double>(i);
        if (eta >= p.eta_star) {
            p.values[i] = 0.0;
            continue;
        }
        auto it = std::upper_bound(xs.begin(), xs.end(), eta);
        const auto j = static_cast<std::size_t>(std::distance(xs.begin(), it));
        const auto lo = j == 0 ? 0 : j - 1;
        const auto hi = std::min(j, xs.size() - 1);
        if (hi == lo || xs[hi] == xs[lo]) {
            p.values[i] = ys[lo];
        } else {
            const double t = (eta - xs[lo]) / (xs[hi] - xs[lo]);
            p.values[i] = ys[lo] + t * (ys[hi] - ys[lo]);
        }
    }
    p.values[0] = 1.0;
    return p;
}

}  // namespace fracpme::testref
