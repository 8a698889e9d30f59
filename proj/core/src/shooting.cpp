#include "fracpme/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "fracpme/errors.hpp"
#include "fracpme/log.hpp"
#include "fracpme/special.hpp"

namespace fracpme {

namespace {

double front_shape_power(const ProblemParams& p) {
    // the operator image vanishes like (front - eta)^p at a tangential front
    return (2.0 - p.alpha) * (p.m + 1.0) / p.m;
}

// Front estimate from the shape of the raw image: V = S^(1/p) is
// asymptotically linear near a tangential front, so a secant of V through
// nodes a little behind the crossing lands on the touch point.
std::optional<double> extrapolate_front(const OperatorImage& img, double eta_front,
                                        double shape_power) {
    const double h = img.grid_step;
    const auto n = img.values.size();
    const auto front_idx = static_cast<std::ptrdiff_t>(eta_front / h);
    const auto d = std::max<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(0.015 * eta_front / h));
    const std::ptrdiff_t i2 =
        std::min<std::ptrdiff_t>(front_idx - d, static_cast<std::ptrdiff_t>(n) - 2);
    const std::ptrdiff_t i1 = i2 - d;
    if (i1 < 1 || i2 <= i1) return std::nullopt;
    const double s1 = img.values[static_cast<std::size_t>(i1)];
    const double s2 = img.values[static_cast<std::size_t>(i2)];
    if (!(s1 > 0.0 && s2 > 0.0 && s1 > s2)) return std::nullopt;
    const double v1 = std::pow(s1, 1.0 / shape_power);
    const double v2 = std::pow(s2, 1.0 / shape_power);
    const double eta2v = static_cast<double>(i2) * h;
    const double predicted = eta2v + v2 * static_cast<double>(d) * h / (v1 - v2);
    if (!std::isfinite(predicted) || predicted <= eta2v) return std::nullopt;
    return predicted;
}

}  // namespace

double flux(const Profile& profile, double beta, const ProblemParams& params,
            const EkOperator& ek) {
    const Profile u = to_physical(profile, params.m);
    const std::vector<double> w = ek.apply_grid(u);
    const std::vector<double> cum = cumulative_integral(w, u.grid_step);
    const double end = std::min(u.eta_star, u.eta_max());
    const double idx = end / u.grid_step;
    const auto i = std::min(static_cast<std::size_t>(idx), cum.size() - 2);
    const double f = idx - static_cast<double>(i);
    const double total = cum[i] * (1.0 - f) + cum[i + 1] * f;
    return -beta + (1.0 - params.alpha / 2.0) * total;
}

double flux(const Profile& profile, double beta, const ProblemParams& params) {
    return flux(profile, beta, params, EkOperator(params.alpha));
}

ShootingResult shoot(const ProblemParams& params, const SolverConfig& config, double shoot_tol) {
    params.validate();
    config.validate();
    if (!(shoot_tol > 0.0)) throw std::invalid_argument("shoot: shoot_tol must be positive");

    ShootingResult result;
    const double b0 = beta0(params);
    const EkOperator ek(params.alpha, config.gauss_nodes);

    // one grid for the whole search so iterates can seed one another; sized
    // for slopes down to well below the threshold, where the front overshoots
    // the closed-form scale
    const GridSpec grid = solver_grid(0.7 * b0, params, config);
    SolverConfig fixed = config;
    fixed.grid_step = grid.h;
    if (fixed.stagnation_window == 0) fixed.stagnation_window = 150;

    auto fresh_seed = [&](double b) {
        Profile y;
        y.grid_step = grid.h;
        y.represents = Profile::Represents::Y;
        y.eta_star = eta2(b, params);
        y.values.resize(grid.points);
        for (std::size_t i = 0; i < grid.points; ++i) {
            const double eta = static_cast<double>(i) * grid.h;
            y.values[i] = eta < y.eta_star ? std::clamp(g2(eta, b, params), 0.0, 1.0) : 0.0;
        }
        return y;
    };

    // classification ladder: plain iteration, then damped retries; in a thin
    // band at the critical slope nothing converges and the run is classified
    // by the stagnation exit
    auto eval = [&](double b, const Profile* seed) {
        SolverConfig local = fixed;
        PicardResult r = try_picard_solve(b, params, local, seed ? *seed : fresh_seed(b));
        for (int retry = 0; retry < 2 && !r.diagnostics.converged; ++retry) {
            local.damping *= 0.5;
            local.max_picard_iters *= 2;
            r = try_picard_solve(b, params, local, seed ? *seed : fresh_seed(b));
        }
        result.picard_diagnostics.push_back(r.diagnostics);
        return r;
    };

    PicardResult at_b0 = eval(b0, nullptr);
    if (!at_b0.diagnostics.converged) {
        throw NonConvergenceError("shoot: fixed point at beta0 did not converge", b0,
                                  config.max_picard_iters, at_b0.diagnostics.final_residual);
    }
    const double flux_b0 = flux(at_b0.profile, b0, params, ek);
    log::info("shoot: flux(beta0=%.9g) = %.6g", b0, flux_b0);

    if (flux_b0 > 0.0) {
        // Sign-change reading: expand upward until the flux turns negative,
        // then bisect on its sign.
        result.upward_bracket = true;
        double lo = b0, hi = 2.0 * b0;
        PicardResult best = std::move(at_b0);
        double f_hi = flux_b0;
        int doublings = 0;
        for (; doublings < 60; ++doublings) {
            PicardResult r = eval(hi, nullptr);
            f_hi = flux(r.profile, hi, params, ek);
            if (f_hi < 0.0) break;
            lo = hi;
            hi *= 2.0;
        }
        if (doublings == 60) {
            throw std::runtime_error("shoot: flux stayed positive through 60 doublings");
        }
        result.bracket_history.emplace_back(lo, hi);
        double f_mid = f_hi;
        double mid = hi;
        while (hi - lo > 1e-12) {
            mid = 0.5 * (lo + hi);
            best = eval(mid, nullptr);
            f_mid = flux(best.profile, mid, params, ek);
            (f_mid >= 0.0 ? lo : hi) = mid;
            result.bracket_history.emplace_back(lo, hi);
            if (std::abs(f_mid) <= shoot_tol) break;
        }
        result.beta_star = mid;
        result.eta_star = best.profile.eta_star;
        result.flux_residual = f_mid;
        const OperatorImage img = apply_S(best.profile, mid, params, ek);
        result.front_value_residual = img.value_at(result.eta_star);
        result.profile = to_physical(best.profile, params.m);
        return result;
    }

    // Tangential regime: the flux of every fronted fixed point is the image
    // slope at its first zero, hence nonpositive; the no-flux solution is the
    // tangential touch at the lower edge of the front-admitting slope range,
    // below beta0. Bisect the front-existence predicate.
    double hi = b0;
    double lo = 0.5 * b0;
    for (int k = 0; k < 60; ++k) {
        PicardResult r = eval(lo, nullptr);
        if (!(r.diagnostics.front_found && r.diagnostics.converged)) break;
        hi = lo;
        lo *= 0.5;
        if (k == 59) throw std::runtime_error("shoot: no frontless slope found above zero");
    }
    result.bracket_history.emplace_back(lo, hi);

    PicardResult front_side = eval(hi, nullptr);
    Profile seed = front_side.profile;
    const double width_stop = std::max(1e-12, 1e-8 * b0);
    for (int k = 0; k < 64 && (hi - lo) > width_stop; ++k) {
        const double mid = 0.5 * (lo + hi);
        PicardResult r = eval(mid, &seed);
        if (r.diagnostics.front_found && r.diagnostics.converged) {
            hi = mid;
            front_side = std::move(r);
            seed = front_side.profile;
        } else {
            lo = mid;
        }
        result.bracket_history.emplace_back(lo, hi);
    }

    result.beta_star = hi;
    Profile solution = front_side.profile;
    const OperatorImage img = apply_S(solution, hi, params, ek);
    double eta_star = solution.eta_star;
    // the image vanishes with a known power at a tangential touch; read the
    // touch point off the front-zone shape
    if (const auto refined = extrapolate_front(img, eta_star, front_shape_power(params))) {
        if (*refined > eta_star && *refined < eta_star * 1.08) eta_star = *refined;
    }
    solution.eta_star = std::min(eta_star, solution.eta_max());
    result.eta_star = solution.eta_star;
    result.front_value_residual = img.value_at(result.eta_star);
    result.flux_residual = flux(solution, hi, params, ek);
    result.profile = to_physical(solution, params.m);
    if (std::abs(result.flux_residual) > shoot_tol) {
        log::info("shoot: flux residual %.3e above tolerance %.1e (grid-limited front slope of "
                  "the tangential solution)",
                  result.flux_residual, shoot_tol);
    }
    return result;
}

FluxScan flux_scan(const ProblemParams& params, const SolverConfig& config, double beta_lo,
                   double beta_hi, int count, int jobs) {
    if (count < 2) throw std::invalid_argument("flux_scan: need at least 2 samples");
    jobs = std::max(1, jobs);
    FluxScan scan;
    scan.betas.resize(static_cast<std::size_t>(count));
    scan.flux_values.assign(static_cast<std::size_t>(count), 0.0);
    scan.front_found.assign(static_cast<std::size_t>(count), false);
    for (int i = 0; i < count; ++i) {
        scan.betas[static_cast<std::size_t>(i)] =
            beta_lo + (beta_hi - beta_lo) * static_cast<double>(i) / (count - 1);
    }

    auto work = [&](std::size_t i) {
        const double b = scan.betas[i];
        PicardResult r = picard_solve(b, params, config);
        scan.flux_values[i] = flux(r.profile, b, params);
        scan.front_found[i] = r.diagnostics.front_found;
    };

    std::size_t next = 0;
    while (next < scan.betas.size()) {
        std::vector<std::future<void>> batch;
        for (int j = 0; j < jobs && next < scan.betas.size(); ++j, ++next) {
            batch.push_back(std::async(std::launch::async, work, next));
        }
        for (auto& f : batch) f.get();
    }

    for (std::size_t i = 0; i + 1 < scan.betas.size(); ++i) {
        if (scan.flux_values[i] == 0.0) continue;
        if (scan.flux_values[i] * scan.flux_values[i + 1] < 0.0) {
            scan.sign_changes.emplace_back(scan.betas[i], scan.betas[i + 1]);
        }
    }
    return scan;
}

}  // namespace fracpme
