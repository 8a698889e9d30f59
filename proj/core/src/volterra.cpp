#include "fracpme/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracpme/errors.hpp"
#include "fracpme/log.hpp"
#include "fracpme/special.hpp"

namespace fracpme {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double interp_at(std::span<const double> v, double h, double eta) {
    const double idx = eta / h;
    const auto n = v.size();
    if (idx <= 0.0) return v.front();
    if (idx >= static_cast<double>(n - 1)) return v.back();
    const auto i = static_cast<std::size_t>(idx);
    const double f = idx - static_cast<double>(i);
    return v[i] * (1.0 - f) + v[i + 1] * f;
}

}  // namespace

void SolverConfig::validate() const {
    std::string bad;
    if (grid_step && !(*grid_step > 0.0)) bad += "grid_step must be positive; ";
    if (!(picard_tol > 0.0)) bad += "picard_tol must be positive; ";
    if (max_picard_iters < 1) bad += "max_picard_iters must be at least 1; ";
    if (!(damping > 0.0 && damping <= 1.0)) bad += "damping must lie in (0,1]; ";
    if (gauss_nodes < 2) bad += "gauss_nodes must be at least 2; ";
    if (!bad.empty()) throw std::invalid_argument("invalid solver config: " + bad);
}

double OperatorImage::value_at(double eta) const { return interp_at(values, grid_step, eta); }
double OperatorImage::cumulative_at(double eta) const {
    return interp_at(ek_cumulative, grid_step, eta);
}

GridSpec solver_grid(double beta, const ProblemParams& params, const SolverConfig& config) {
    const double b0 = beta0(params);
    double span, margin;
    if (beta >= b0) {
        span = eta1(beta, params);
        margin = 0.0;
    } else {
        // continuation below the admissibility threshold: scale the lower
        // support root by the ratio the two roots have at beta0, plus slack
        // for the critical front, which overshoots that scale
        span = eta2(beta, params) * (eta1(b0, params) / eta2(b0, params));
        margin = 0.6 * span;
    }
    GridSpec g;
    g.h = config.grid_step.value_or(span / 1024.0);
    g.points = static_cast<std::size_t>(std::ceil((span + margin) / g.h)) + 5;
    return g;
}

OperatorImage apply_S(const Profile& y, double beta, const ProblemParams& params,
                      const EkOperator& ek) {
    if (!(beta >= 0.0)) throw std::invalid_argument("apply_S: beta must be nonnegative");
    const Profile u = to_physical(y, params.m);

    OperatorImage img;
    img.grid_step = y.grid_step;
    img.ek_values = ek.apply_grid(u);

    const std::size_t n = img.ek_values.size();
    img.ek_cumulative = cumulative_integral(img.ek_values, y.grid_step);

    std::vector<double> zw(n);
    for (std::size_t i = 0; i < n; ++i) {
        zw[i] = static_cast<double>(i) * y.grid_step * img.ek_values[i];
    }
    const std::vector<double> q = cumulative_integral(zw, y.grid_step);

    img.values.resize(n);
    const double half = 1.0 - params.alpha / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double eta = static_cast<double>(i) * y.grid_step;
        img.values[i] =
            1.0 + (params.m + 1.0) * (-beta * eta + half * eta * img.ek_cumulative[i] - q[i]);
    }
    return img;
}

std::optional<double> find_first_crossing(std::span<const double> raw, double grid_step) {
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] > 0.0 && raw[i + 1] <= 0.0) {
            const double t = raw[i] / (raw[i] - raw[i + 1]);
            return (static_cast<double>(i) + t) * grid_step;
        }
    }
    return std::nullopt;
}

double detect_eta_star(std::span<const double> raw, double grid_step, double beta,
                       const ProblemParams& params) {
    if (raw.empty() || raw[0] <= 0.0) {
        throw std::invalid_argument("detect_eta_star: image must start positive");
    }
    double limit = static_cast<double>(raw.size() - 1) * grid_step;
    const bool admissible = beta >= beta0(params);
    if (admissible) limit = std::min(limit, eta1(beta, params) + 2.0 * grid_step);

    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (static_cast<double>(i) * grid_step > limit) break;
        if (raw[i] > 0.0 && raw[i + 1] <= 0.0) {
            const double t = raw[i] / (raw[i] - raw[i + 1]);
            return (static_cast<double>(i) + t) * grid_step;
        }
    }
    throw NoZeroError("detect_eta_star: no sign change up to eta = " + std::to_string(limit) +
                      (admissible ? " (grid too coarse?)"
                                  : " (slope below the critical value, no front)"));
}

namespace {

// clamp into [0,1], accumulating the worst excess
double clamp_tracked(double v, double& excess) {
    if (v < 0.0) {
        excess = std::max(excess, -v);
        return 0.0;
    }
    if (v > 1.0) {
        excess = std::max(excess, v - 1.0);
        return 1.0;
    }
    return v;
}

Profile truncate_image(const OperatorImage& img, std::optional<double> front,
                       FixedPointDiagnostics* diag) {
    Profile out;
    out.grid_step = img.grid_step;
    out.represents = Profile::Represents::Y;
    out.eta_star = front.value_or(kInf);
    out.values.resize(img.values.size());
    double excess = 0.0;
    for (std::size_t i = 0; i < img.values.size(); ++i) {
        const double eta = static_cast<double>(i) * img.grid_step;
        if (eta < out.eta_star) {
            out.values[i] = clamp_tracked(img.values[i], excess);
        } else {
            out.values[i] = 0.0;
        }
    }
    if (front && excess > 1e-8) {
        log::info("apply_A: clamped range violation of %.3e inside the support", excess);
    }
    if (diag) diag->max_clamp_excess = std::max(diag->max_clamp_excess, excess);
    return out;
}

Profile initial_iterate(double beta, const ProblemParams& params, const GridSpec& grid) {
    Profile y;
    y.grid_step = grid.h;
    y.represents = Profile::Represents::Y;
    y.eta_star = eta2(beta, params);
    y.values.resize(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double eta = static_cast<double>(i) * grid.h;
        y.values[i] =
            eta < y.eta_star ? std::clamp(g2(eta, beta, params), 0.0, 1.0) : 0.0;
    }
    return y;
}

PicardResult picard_loop(double beta, const ProblemParams& params, const SolverConfig& config,
                         Profile y, const EkOperator& ek) {
    FixedPointDiagnostics diag;
    const std::size_t n = y.values.size();
    double residual = kInf;
    const double b0 = beta0(params);
    double best_residual = kInf;
    int best_iteration = 0;

    for (int k = 0; k < config.max_picard_iters; ++k) {
        const OperatorImage img = apply_S(y, beta, params, ek);
        const auto front = find_first_crossing(img.values, y.grid_step);
        if (!front && beta >= b0) {
            // Lemma guarantees a zero here; reaching this means the grid
            // does not resolve it
            detect_eta_star(img.values, y.grid_step, beta, params);  // throws
        }
        Profile next = truncate_image(img, front, &diag);

        if (config.damping < 1.0) {
            for (std::size_t i = 0; i < n; ++i) {
                next.values[i] =
                    (1.0 - config.damping) * y.values[i] + config.damping * next.values[i];
            }
            next.eta_star = std::max(next.eta_star, y.eta_star);
            // damped mixes of fronted and frontless iterates leave a
            // geometrically decaying residue past the front; drop it once it
            // is far below the convergence tolerance so the support stays
            // meaningful
            std::size_t tail = n;
            while (tail > 1 && std::abs(next.values[tail - 1]) <= 1e-14) --tail;
            if (tail < n && std::isinf(next.eta_star)) {
                next.eta_star = static_cast<double>(tail) * next.grid_step;
                for (std::size_t i = tail; i < n; ++i) next.values[i] = 0.0;
            }
        }

        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(next.values[i] - y.values[i]));
        }
        y = std::move(next);
        diag.iterations = k + 1;
        diag.eta_star_history.push_back(y.eta_star);
        if (residual <= config.picard_tol) {
            diag.converged = true;
            diag.final_residual = residual;
            diag.front_found = std::isfinite(y.eta_star);
            return {std::move(y), std::move(diag)};
        }
        // stagnation exit: in a narrow band at the critical slope the damped
        // map has no attracting state and the residual plateaus; bail out
        // instead of burning the full budget
        if (config.stagnation_window > 0) {
            if (residual < 0.7 * best_residual) {
                best_residual = residual;
                best_iteration = k;
            } else if (k - best_iteration > config.stagnation_window) {
                break;
            }
        }
    }
    diag.converged = false;
    diag.final_residual = residual;
    diag.front_found = std::isfinite(y.eta_star);
    return {std::move(y), std::move(diag)};
}

}  // namespace

Profile apply_A(const Profile& y, double beta, const ProblemParams& params, const EkOperator& ek,
                FixedPointDiagnostics* diag) {
    const OperatorImage img = apply_S(y, beta, params, ek);
    const double front = detect_eta_star(img.values, y.grid_step, beta, params);
    return truncate_image(img, front, diag);
}

namespace {

PicardResult require_converged(PicardResult r, double beta, const SolverConfig& config) {
    if (!r.diagnostics.converged) {
        log::error("picard_solve: no convergence at beta=%.12g after %d iterations, residual %.3e",
                   beta, r.diagnostics.iterations, r.diagnostics.final_residual);
        throw NonConvergenceError("picard_solve: fixed-point iteration did not converge", beta,
                                  config.max_picard_iters, r.diagnostics.final_residual);
    }
    return r;
}

}  // namespace

PicardResult picard_solve(double beta, const ProblemParams& params, const SolverConfig& config) {
    return require_converged(try_picard_solve(beta, params, config), beta, config);
}

PicardResult picard_solve(double beta, const ProblemParams& params, const SolverConfig& config,
                          const Profile& initial) {
    params.validate();
    config.validate();
    const EkOperator ek(params.alpha, config.gauss_nodes);
    return require_converged(picard_loop(beta, params, config, initial, ek), beta, config);
}

PicardResult try_picard_solve(double beta, const ProblemParams& params,
                              const SolverConfig& config) {
    params.validate();
    config.validate();
    const EkOperator ek(params.alpha, config.gauss_nodes);
    const GridSpec grid = solver_grid(beta, params, config);
    return picard_loop(beta, params, config, initial_iterate(beta, params, grid), ek);
}

PicardResult try_picard_solve(double beta, const ProblemParams& params,
                              const SolverConfig& config, const Profile& initial) {
    params.validate();
    config.validate();
    const EkOperator ek(params.alpha, config.gauss_nodes);
    return picard_loop(beta, params, config, initial, ek);
}

double residual_eq2(const Profile& profile, double beta, const ProblemParams& params,
                    const EkOperator& ek) {
    (void)beta;
    const Profile u = to_physical(profile, params.m);
    const std::vector<double> w = ek.apply_grid(u);
    const std::size_t n = u.values.size();
    if (n < 6) return 0.0;
    const double h = u.grid_step;

    // F_i = U^m U' by centred differences, defined on [1, n-2]
    std::vector<double> flux_pointwise(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double du = (u.values[i + 1] - u.values[i - 1]) / (2.0 * h);
        flux_pointwise[i] = std::pow(u.values[i], params.m) * du;
    }

    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        if (u.values[i] <= 0.05) continue;
        const double lhs = (flux_pointwise[i + 1] - flux_pointwise[i - 1]) / (2.0 * h);
        const double dw = (w[i + 1] - w[i - 1]) / (2.0 * h);
        const double eta = static_cast<double>(i) * h;
        const double rhs = (1.0 - params.alpha) * w[i] - 0.5 * params.alpha * eta * dw;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace fracpme
