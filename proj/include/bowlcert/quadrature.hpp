#pragma once

#include <functional>

namespace bowlcert {

/// Adaptive Gauss-Kronrod (G7/K15) integration to an absolute error target.
/// Throws QuadratureFailure if the interval budget is exhausted before the
/// error estimate drops below abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

/// Integral over [a, +inf), mapped to [0,1) by rho = a + t/(1-t). The
/// Kronrod nodes are interior, so the integrand is never evaluated at the
/// (possibly singular) image of t = 1.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double abs_tol);

}  // namespace bowlcert
