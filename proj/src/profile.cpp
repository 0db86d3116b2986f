#include "bowlcert/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bowlcert {
namespace {

constexpr double kSeriesSwitch = 1e-3;

double ode_rhs(double r, double psi) {
    return (1.0 - psi / r) * (1.0 + psi * psi);
}

double series_psi(double r) { return 0.5 * r + r * r * r / 32.0; }

// Dormand-Prince 5(4) step: returns 5th-order value, writes embedded error.
double dp54_step(double r, double psi, double h, double& err) {
    const double k1 = ode_rhs(r, psi);
    const double k2 = ode_rhs(r + h / 5.0, psi + h * (k1 / 5.0));
    const double k3 = ode_rhs(r + 3.0 * h / 10.0, psi + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
    const double k4 = ode_rhs(r + 4.0 * h / 5.0,
                              psi + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
    const double k5 =
        ode_rhs(r + 8.0 * h / 9.0, psi + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                                              64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
    const double k6 = ode_rhs(
        r + h, psi + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 + 46732.0 / 5247.0 * k3 +
                          49.0 / 176.0 * k4 - 5103.0 / 18656.0 * k5));
    const double y5 = psi + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                                 2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
    const double k7 = ode_rhs(r + h, y5);
    const double y4 = psi + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 +
                                 393.0 / 640.0 * k4 - 92097.0 / 339200.0 * k5 +
                                 187.0 / 2100.0 * k6 + k7 / 40.0);
    err = std::fabs(y5 - y4);
    return y5;
}

// Advance psi from (r, psi) to r_target with local error control.
double integrate_to(double r, double psi, double r_target, double local_tol) {
    double h = std::min(1e-3, r_target - r);
    while (r < r_target) {
        h = std::min(h, r_target - r);
        double err = 0.0;
        const double cand = dp54_step(r, psi, h, err);
        const double tol = local_tol * (1.0 + std::fabs(psi));
        if (err <= tol || h <= 1e-13) {
            r += h;
            psi = cand;
            const double grow = (err > 0.0) ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.2));
        }
    }
    return psi;
}

double ddpsi_closed_form(double r, double psi, double dpsi) {
    const double one_plus = 1.0 + psi * psi;
    return (psi / (r * r) - dpsi / r) * one_plus + (1.0 - psi / r) * 2.0 * psi * dpsi;
}

// Eighth-order central difference of psi at node j.
double fd8_derivative(const std::vector<double>& f, int j, double h) {
    return ((4.0 / 5.0) * (f[j + 1] - f[j - 1]) - (1.0 / 5.0) * (f[j + 2] - f[j - 2]) +
            (4.0 / 105.0) * (f[j + 3] - f[j - 3]) - (1.0 / 280.0) * (f[j + 4] - f[j - 4])) /
           h;
}

double grid_residual(const ProfileTable& t) {
    const int n = static_cast<int>(t.r.size()) - 1;
    double worst = 0.0;
    for (int j = 4; j + 4 <= n; ++j) {
        const double dp = fd8_derivative(t.psi, j, t.grid_step);
        const double res =
            std::fabs(dp / (1.0 + t.psi[j] * t.psi[j]) + t.psi[j] / t.r[j] - 1.0);
        worst = std::max(worst, res);
    }
    return worst;
}

ProfileTable build_table(double r_max, double step, double local_tol) {
    ProfileTable t;
    t.r_max = r_max;
    t.grid_step = step;
    t.series_switch = kSeriesSwitch;

    const int n = static_cast<int>(std::llround(r_max / step));
    t.r.resize(n + 1);
    t.psi.resize(n + 1);
    for (int j = 0; j <= n; ++j) t.r[j] = j * step;

    t.psi[0] = 0.0;
    double r = kSeriesSwitch;
    double psi = series_psi(r);
    for (int j = 1; j <= n; ++j) {
        if (t.r[j] <= kSeriesSwitch) {
            t.psi[j] = series_psi(t.r[j]);
            continue;
        }
        psi = integrate_to(r, psi, t.r[j], local_tol);
        r = t.r[j];
        t.psi[j] = psi;
    }

    t.dpsi.resize(n + 1);
    t.ddpsi.resize(n + 1);
    t.K.resize(n + 1);
    t.dpsi[0] = 0.5;       // psi'(0) limit
    t.ddpsi[0] = 0.0;
    t.K[0] = 0.5;
    for (int j = 1; j <= n; ++j) {
        t.dpsi[j] = ode_rhs(t.r[j], t.psi[j]);
        t.ddpsi[j] = ddpsi_closed_form(t.r[j], t.psi[j], t.dpsi[j]);
        t.K[j] = t.psi[j] / t.r[j];
    }
    t.residual_bound = grid_residual(t);
    return t;
}

// Quintic Hermite basis on [0,1].
struct QuinticBasis {
    double h0, h1, h2, h3, h4, h5;
};

QuinticBasis quintic_basis(double t) {
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    return {1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5,
            t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5,
            0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5,
            10.0 * t3 - 15.0 * t4 + 6.0 * t5,
            -4.0 * t3 + 7.0 * t4 - 3.0 * t5,
            0.5 * t3 - t4 + 0.5 * t5};
}

}  // namespace

ProfileTable solve_profile(double r_max, double tol, double step) {
    if (!(r_max > 0.0) || !(tol > 0.0) || !(step > 0.0) || step > r_max)
        throw DomainError("solve_profile: need r_max > 0, tol > 0, 0 < step <= r_max");

    double local_tol = std::min(1e-12, 0.01 * tol);
    for (int attempt = 0; attempt < 3; ++attempt) {
        ProfileTable t = build_table(r_max, step, local_tol);
        t.ode_tol = tol;
        if (t.residual_bound <= tol) return t;
        local_tol *= 0.01;
    }
    throw ToleranceNotMet("solve_profile: residual above tolerance after refinement");
}

PsiDerivs psi_at(const ProfileTable& table, double r) {
    if (!(r > 0.0) || r > table.r_max * (1.0 + 1e-12))
        throw OutOfRange("psi_at: radius outside (0, r_max]");

    double psi;
    if (r <= table.series_switch) {
        psi = series_psi(r);
    } else {
        const int n = static_cast<int>(table.r.size()) - 1;
        int j = static_cast<int>(r / table.grid_step);
        j = std::clamp(j, 0, n - 1);
        const double r0 = table.r[j];
        const double L = table.grid_step;
        const double t = (r - r0) / L;
        const QuinticBasis B = quintic_basis(t);
        psi = table.psi[j] * B.h0 + table.dpsi[j] * L * B.h1 +
              table.ddpsi[j] * L * L * B.h2 + table.psi[j + 1] * B.h3 +
              table.dpsi[j + 1] * L * B.h4 + table.ddpsi[j + 1] * L * L * B.h5;
    }
    const double dpsi = ode_rhs(r, psi);
    return {psi, dpsi, ddpsi_closed_form(r, psi, dpsi)};
}

double K_at(const ProfileTable& table, double r) {
    return psi_at(table, r).psi / r;
}

CoefficientBundle coefficients_at(const ProfileTable& table, double r) {
    if (!(r > 0.0)) throw OutOfRange("coefficients_at: need r > 0");
    const double K = K_at(table, r);
    const double rK = r * K;
    const double q = 1.0 + rK * rK;  // 1 + r^2 K^2
    CoefficientBundle c;
    c.r = r;
    c.alpha = 1.0 / q;
    c.beta = 1.0 / r - 4.0 * (1.0 - K) * rK / q;
    c.gamma = 2.0 * (1.0 - K) * (1.0 - 2.0 * (1.0 - K) / q) -
              (1.0 + 2.0 * rK * rK / q) / (r * r);
    const double s = r - 2.2;
    c.delta = 2.0 * r * r * c.alpha + 2.0 * s * r * r * c.beta -
              (5.0 - s * s) * r * r * c.gamma;
    return c;
}

double l0_coefficient_consistency(const ProfileTable& table, double r) {
    if (!(r > 0.0)) throw OutOfRange("l0_coefficient_consistency: need r > 0");
    const CoefficientBundle viaK = coefficients_at(table, r);
    const PsiDerivs p = psi_at(table, r);
    const double q = 1.0 + p.psi * p.psi;
    const double alpha_d = 1.0 / q;
    const double beta_d = 1.0 / r - 4.0 * p.dpsi * p.psi / (q * q);
    // (psi' psi / (1+psi^2)^2)' expanded with the stored second derivative
    const double uprime = (p.ddpsi * p.psi + p.dpsi * p.dpsi) / (q * q) -
                          4.0 * p.psi * p.psi * p.dpsi * p.dpsi / (q * q * q);
    const double gamma_d = -1.0 / (r * r) - 2.0 * uprime;
    return std::max({std::fabs(alpha_d - viaK.alpha), std::fabs(beta_d - viaK.beta),
                     std::fabs(gamma_d - viaK.gamma)});
}

std::string profile_csv(const ProfileTable& table) {
    std::ostringstream out;
    out << "r,psi,dpsi,K\n";
    char line[160];
    for (std::size_t j = 0; j < table.r.size(); ++j) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", table.r[j],
                      table.psi[j], table.dpsi[j], table.K[j]);
        out << line;
    }
    return out.str();
}

}  // namespace bowlcert
