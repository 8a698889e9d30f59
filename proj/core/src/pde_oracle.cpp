#include "fracpme/pde_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracpme/errors.hpp"
#include "fracpme/special.hpp"

namespace fracpme {

std::vector<double> l1_weights(double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("l1_weights: alpha outside (0,1)");
    if (n < 1) throw std::domain_error("l1_weights: need n >= 1");
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        w[static_cast<std::size_t>(k)] =
            std::pow(k + 1.0, 1.0 - alpha) - std::pow(static_cast<double>(k), 1.0 - alpha);
    }
    return w;
}

void OracleConfig::validate() const {
    std::string bad;
    if (nx < 8) bad += "nx must be at least 8; ";
    if (nt < 4) bad += "nt must be at least 4; ";
    if (!(t_final > 0.0)) bad += "t_final must be positive; ";
    if (!(domain_factor > 1.0)) bad += "domain_factor must exceed 1; ";
    if (corrections < 1) bad += "corrections must be at least 1; ";
    if (!(front_threshold > 0.0 && front_threshold < 1.0)) {
        bad += "front_threshold must lie in (0,1); ";
    }
    if (!bad.empty()) throw std::invalid_argument("invalid oracle config: " + bad);
}

double PdeField::front_position(int n, double threshold) const {
    const double* r = row(n);
    for (int i = nx - 1; i >= 0; --i) {
        if (r[i] > threshold) {
            if (i + 1 >= nx) return dx * i;
            const double t = (r[i] - threshold) / (r[i] - r[i + 1]);
            return dx * (i + t);
        }
    }
    return 0.0;
}

PdeField make_field(const ProblemParams& params, const OracleConfig& config) {
    params.validate();
    config.validate();
    PdeField f;
    f.alpha = params.alpha;
    f.m = params.m;
    f.nx = config.nx;
    f.nt = config.nt;
    const double domain = config.domain_factor * eta1(beta0(params), params) *
                          std::pow(config.t_final, params.alpha / 2.0);
    f.dx = domain / (config.nx - 1);
    f.dt = config.t_final / config.nt;
    f.u.assign(static_cast<std::size_t>(config.nt + 1) * config.nx, 0.0);
    f.weights = l1_weights(params.alpha, config.nt);
    return f;
}

namespace {

// Thomas solve; diagonals passed as vectors, result overwrites rhs.
void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

}  // namespace

void step(PdeField& f, int n, const OracleConfig& config) {
    if (n < 1 || n > f.nt) throw std::invalid_argument("step: t_index out of range");
    const int nx = f.nx;
    const double scale = gamma(2.0 - f.alpha) * std::pow(f.dt, f.alpha);
    const double c0 = f.weights[0] / scale;

    // history part of the memory sum (everything except the b_0 u^n term)
    std::vector<double> hist(f.row(n - 1), f.row(n - 1) + nx);
    for (double& v : hist) v *= f.weights[0];
    for (int k = 1; k < n; ++k) {
        const double* newer = f.row(n - k);
        const double* older = f.row(n - k - 1);
        const double bk = f.weights[static_cast<std::size_t>(k)];
        for (int i = 0; i < nx; ++i) hist[static_cast<std::size_t>(i)] -= bk * (newer[i] - older[i]);
    }

    std::vector<double> v(f.row(n - 1), f.row(n - 1) + nx);
    v[0] = 1.0;  // Dirichlet values of the unknown level
    v[static_cast<std::size_t>(nx - 1)] = 0.0;

    std::vector<double> lower(static_cast<std::size_t>(nx)), diag(static_cast<std::size_t>(nx)),
        upper(static_cast<std::size_t>(nx)), rhs(static_cast<std::size_t>(nx));
    const double inv_dx2 = 1.0 / (f.dx * f.dx);

    for (int pass = 0; pass < config.corrections; ++pass) {
        diag[0] = 1.0; upper[0] = 0.0; lower[0] = 0.0; rhs[0] = 1.0;
        diag[static_cast<std::size_t>(nx - 1)] = 1.0;
        lower[static_cast<std::size_t>(nx - 1)] = 0.0;
        upper[static_cast<std::size_t>(nx - 1)] = 0.0;
        rhs[static_cast<std::size_t>(nx - 1)] = 0.0;
        for (int i = 1; i + 1 < nx; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            const double am = std::pow(v[ui], f.m);
            const double a_east = 0.5 * (am + std::pow(v[ui + 1], f.m)) * inv_dx2;
            const double a_west = 0.5 * (am + std::pow(v[ui - 1], f.m)) * inv_dx2;
            lower[ui] = -a_west;
            diag[ui] = c0 + a_east + a_west;
            upper[ui] = -a_east;
            rhs[ui] = hist[ui] / scale;
        }
        std::vector<double> lo = lower, di = diag, up = upper, rh = rhs;
        solve_tridiagonal(lo, di, up, rh);
        v = std::move(rh);
    }

    double* out = f.row(n);
    for (int i = 0; i < nx; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (v[ui] < -1e-6 || v[ui] > 1.0 + 1e-6) {
            throw InstabilityError("pde_oracle: level " + std::to_string(n) + " left [0,1] by " +
                                   std::to_string(std::max(-v[ui], v[ui] - 1.0)));
        }
        const double clipped = std::clamp(v[ui], 0.0, 1.0);
        f.max_clip = std::max(f.max_clip, std::abs(clipped - v[ui]));
        out[i] = clipped;
    }
    out[0] = 1.0;
    out[nx - 1] = 0.0;
}

PdeField run_oracle(const ProblemParams& params, const OracleConfig& config) {
    PdeField f = make_field(params, config);
    for (int n = 1; n <= f.nt; ++n) step(f, n, config);
    return f;
}

double compare_self_similar(const PdeField& f, const Profile& profile,
                            std::span<const int> levels) {
    const Profile u = to_physical(profile, f.m);
    double worst = 0.0;
    for (int n : levels) {
        if (n < 1 || n > f.nt) throw std::invalid_argument("compare_self_similar: bad level");
        const double t = f.time_of(n);
        const double stretch = std::pow(t, -f.alpha / 2.0);
        const double* r = f.row(n);
        for (int i = 0; i < f.nx; ++i) {
            const double eta = f.dx * i * stretch;
            worst = std::max(worst, std::abs(r[i] - u(eta)));
        }
    }
    return worst;
}

double front_exponent(const PdeField& f, double threshold) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = 1; n <= f.nt; ++n) {
        const double t = f.time_of(n);
        if (t < f.time_of(f.nt) / 10.0) continue;
        const double xf = f.front_position(n, threshold);
        if (xf <= 0.0) continue;
        const double lx = std::log(t), ly = std::log(xf);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++count;
    }
    if (count < 2) return 0.0;
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace fracpme
