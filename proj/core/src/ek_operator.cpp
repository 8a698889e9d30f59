#include "fracpme/ek_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "fracpme/special.hpp"

namespace fracpme {

namespace {

// 16-point Gauss-Legendre on [-1,1].
constexpr int kGL = 16;
constexpr double kGLX[kGL] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGLW[kGL] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

constexpr double kSplit = 1.0 / 16.0;  // panels take over below this point
constexpr int kMaxRuleNodes = 256;

}  // namespace

EkOperator::EkOperator(double alpha, int gauss_nodes) : alpha_(alpha), default_nodes_(gauss_nodes) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("EkOperator: alpha must lie in (0,1)");
    }
    if (gauss_nodes < 2) throw std::domain_error("EkOperator: need at least 2 Gauss nodes");
    inv_gamma_1ma_ = 1.0 / gamma(1.0 - alpha);
    inv_gamma_2ma_ = 1.0 / gamma(2.0 - alpha);

    for (int n = gauss_nodes; n <= kMaxRuleNodes; n *= 2) {
        auto gj = jacobi_rule(alpha, n);
        Rule r;
        r.nodes = std::move(gj.nodes);
        r.weights = std::move(gj.weights);
        r.fixed_s.resize(n);
        r.fixed_arg.resize(n);
        for (int j = 0; j < n; ++j) {
            r.fixed_s[j] = kSplit + (1.0 - kSplit) * r.nodes[j];
            r.fixed_arg[j] = std::pow(r.fixed_s[j], -alpha / 2.0);
        }
        rules_.push_back(std::move(r));
        if (n == kMaxRuleNodes) break;
    }

    // Dyadic panels down to the smallest normal magnitudes.
    double hi = kSplit;
    while (hi > 1e-290) {
        const double lo = hi / 2.0;
        Panel pan;
        pan.lo = lo;
        pan.hi = hi;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int k = 0; k < kGL; ++k) {
            const double s = mid + half * kGLX[k];
            pan.arg[k] = std::pow(s, -alpha / 2.0);
            pan.w[k] = half * kGLW[k] * std::pow(1.0 - s, -alpha);
        }
        panels_.push_back(pan);
        hi = lo;
    }
}

double EkOperator::apply_with(const Profile& p, double eta, int rule_index) const {
    if (eta < 0.0) throw std::domain_error("EkOperator::apply: eta must be nonnegative");
    if (eta >= p.eta_star) return 0.0;
    if (eta == 0.0) return p.values.empty() ? 0.0 : p.values[0] * inv_gamma_2ma_;

    const Rule& rule = rules_[static_cast<std::size_t>(rule_index)];
    const double s_lo =
        std::isfinite(p.eta_star) ? std::pow(eta / p.eta_star, 2.0 / alpha_) : 0.0;

    double acc = 0.0;
    if (s_lo >= kSplit) {
        // single Jacobi rule mapped onto (s_lo, 1)
        const double len = 1.0 - s_lo;
        double sum = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double s = s_lo + len * rule.nodes[j];
            sum += rule.weights[j] * p(std::pow(s, -alpha_ / 2.0) * eta);
        }
        acc = std::pow(len, 1.0 - alpha_) * sum;
    } else {
        // fixed Jacobi part on (1/16, 1)
        double sum = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            sum += rule.weights[j] * p(rule.fixed_arg[j] * eta);
        }
        acc = std::pow(1.0 - kSplit, 1.0 - alpha_) * sum;

        // geometric panels from 1/16 down to s_lo
        for (const Panel& pan : panels_) {
            if (pan.hi <= s_lo) break;
            if (pan.lo >= s_lo) {
                double c = 0.0;
                for (int k = 0; k < kGL; ++k) c += pan.w[k] * p(pan.arg[k] * eta);
                acc += c;
                if (std::abs(c) <= 1e-16 * std::abs(acc)) break;
            } else {
                // clipped final panel [s_lo, pan.hi)
                const double mid = 0.5 * (s_lo + pan.hi), half = 0.5 * (pan.hi - s_lo);
                double c = 0.0;
                for (int k = 0; k < kGL; ++k) {
                    const double s = mid + half * kGLX[k];
                    c += half * kGLW[k] * std::pow(1.0 - s, -alpha_) *
                         p(std::pow(s, -alpha_ / 2.0) * eta);
                }
                acc += c;
                break;
            }
        }
    }
    return acc * inv_gamma_1ma_;
}

double EkOperator::apply(const Profile& p, double eta) const { return apply_with(p, eta, 0); }

std::vector<double> EkOperator::apply_grid(const Profile& p) const {
    const std::size_t n = p.values.size();
    std::vector<double> out(n, 0.0);
    if (n == 0) return out;

    // escalate the rule while spot checks with a doubled count disagree
    int rule_index = 0;
    const double span = std::min(p.eta_star, p.eta_max());
    const double checks[3] = {0.25 * span, 0.5 * span, 0.75 * span};
    while (rule_index + 1 < static_cast<int>(rules_.size())) {
        double dev = 0.0;
        for (double c : checks) {
            dev = std::max(dev, std::abs(apply_with(p, c, rule_index) -
                                         apply_with(p, c, rule_index + 1)));
        }
        if (dev <= 1e-9) break;
        ++rule_index;
    }

    for (std::size_t i = 0; i < n; ++i) {
        out[i] = apply_with(p, static_cast<double>(i) * p.grid_step, rule_index);
    }
    return out;
}

}  // namespace fracpme
