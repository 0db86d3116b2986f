#pragma once

#include <string>
#include <vector>

#include "bowlcert/errors.hpp"

namespace bowlcert {

/// Dense samples of the bowl profile derivative psi (psi' /(1+psi^2) + psi/r = 1,
/// psi(0) = 0) together with the derived macroscopic curvature K = psi/r.
///
/// residual_bound is the max over interior grid nodes of
/// |psi'/(1+psi^2) + psi/r - 1| with psi' reconstructed by an eighth-order
/// finite difference of the stored psi samples, so integration error is
/// visible rather than hidden by the closed-form derivative.
struct ProfileTable {
    double r_max = 0.0;
    double grid_step = 0.0;
    double series_switch = 1e-3;
    double ode_tol = 0.0;
    double residual_bound = 0.0;

    std::vector<double> r;
    std::vector<double> psi;
    std::vector<double> dpsi;
    std::vector<double> ddpsi;
    std::vector<double> K;
};

struct PsiDerivs {
    double psi = 0.0;
    double dpsi = 0.0;
    double ddpsi = 0.0;
};

/// Coefficients of the model operator and their working combination at one radius.
struct CoefficientBundle {
    double r = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

/// Integrates the profile ODE onto a uniform grid. Near r = 0 the series
/// start psi = r/2 + r^3/32 is used up to the switch radius; beyond it an
/// adaptive fifth-order Runge-Kutta scheme with local error 1e-12 lands on
/// the grid nodes. Throws ToleranceNotMet if the reconstructed ODE residual
/// exceeds tol after refinement.
ProfileTable solve_profile(double r_max, double tol, double step);

/// psi and its first two derivatives at r (0 < r <= r_max). psi is a quintic
/// Hermite interpolant of the table; psi' and psi'' come from the ODE closed
/// forms so barrier verification sees smooth third-order-consistent data.
PsiDerivs psi_at(const ProfileTable& table, double r);

double K_at(const ProfileTable& table, double r);

CoefficientBundle coefficients_at(const ProfileTable& table, double r);

/// Max absolute discrepancy between the K-form coefficients (alpha, beta,
/// gamma as functions of r and K alone) and the same coefficients computed
/// directly from (psi, psi', psi''). Algebraically zero; measures rounding
/// plus interpolation consistency.
double l0_coefficient_consistency(const ProfileTable& table, double r);

/// CSV dump with header r,psi,dpsi,K.
std::string profile_csv(const ProfileTable& table);

}  // namespace bowlcert
