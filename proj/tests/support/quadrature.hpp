/* Copyright 2026 the dickebec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Test-only adaptive-quadrature evaluation of the thermal integrals, used as
// an independent cross-check of the series-based evaluators. Never on any
// production code path.

#ifndef DICKEBEC_TESTS_SUPPORT_QUADRATURE_HPP
#define DICKEBEC_TESTS_SUPPORT_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace dickebec::testing {

inline double gsl_trampoline(double x, void* p) {
  return (*static_cast<std::function<double(double)>*>(p))(x);
}

/// Adaptive integration of f over [a, infinity).
inline double integrate_semi_infinite(std::function<double(double)> f,
                                      double a = 0.0, double epsrel = 1e-12) {
  static gsl_error_handler_t* old = gsl_set_error_handler_off();
  (void)old;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(8000);
  gsl_function gf;
  gf.function = &gsl_trampoline;
  gf.params = &f;
  double result = 0.0, abserr = 0.0;
  const int status = gsl_integration_qagiu(&gf, a, 1e-300, epsrel, 8000, ws,
                                           &result, &abserr);
  gsl_integration_workspace_free(ws);
  if (status != GSL_SUCCESS && status != GSL_EROUND) {
    throw std::runtime_error("quadrature failed, status " +
                             std::to_string(status));
  }
  return result;
}

/// Surface area of the unit sphere in nu dimensions over (2 pi)^nu.
inline double angular_factor(int nu) {
  const double s_nu = 2.0 * std::pow(M_PI, 0.5 * nu) / std::tgamma(0.5 * nu);
  return s_nu / std::pow(2.0 * M_PI, nu);
}

/// rho0(mu) = int d^nu k / (2 pi)^nu 1/(e^{beta(k^2/2m - mu)} - 1)
inline double rho0_quadrature(double beta, double mass, int nu, double mu) {
  const double c = angular_factor(nu);
  return c * integrate_semi_infinite([=](double k) {
    const double t = beta * (k * k / (2.0 * mass) - mu);
    return std::pow(k, nu - 1) / std::expm1(t);
  });
}

/// p0(mu) = -(1/beta) int d^nu k / (2 pi)^nu ln(1 - e^{-beta(k^2/2m - mu)})
inline double p0_quadrature(double beta, double mass, int nu, double mu) {
  const double c = angular_factor(nu);
  return -c / beta * integrate_semi_infinite([=](double k) {
    const double t = beta * (k * k / (2.0 * mass) - mu);
    if (t > 745.0) return 0.0;  // 1 - e^{ -t } indistinguishable from 1
    return std::pow(k, nu - 1) * std::log(-std::expm1(-t));
  });
}

/// Occupation-entropy integral for two modes at gap x:
///   2 int d^nu k/(2 pi)^nu [(1+A)ln(1+A) - A ln A],
///   A(k) = (e^{beta(k^2/2m + x)} - 1)^{-1}.
inline double entropy_quadrature(double beta, double mass, int nu, double x) {
  const double c = angular_factor(nu);
  return 2.0 * c * integrate_semi_infinite([=](double k) {
    const double t = beta * (k * k / (2.0 * mass) + x);
    if (t > 700.0) return 0.0;
    const double a = 1.0 / std::expm1(t);
    if (a <= 0.0) return 0.0;
    const double val = (1.0 + a) * std::log1p(a) - a * std::log(a);
    return std::pow(k, nu - 1) * val;
  });
}

/// Total thermal density from the momentum distribution,
/// 2 int d^nu k/(2 pi)^nu A(k); equals 2 rho0(-x).
inline double momentum_density_quadrature(double beta, double mass, int nu,
                                          double x) {
  return 2.0 * rho0_quadrature(beta, mass, nu, -x);
}

}  // namespace dickebec::testing

#endif  // DICKEBEC_TESTS_SUPPORT_QUADRATURE_HPP
