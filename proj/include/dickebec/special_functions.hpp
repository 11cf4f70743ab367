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

#ifndef DICKEBEC_SPECIAL_FUNCTIONS_HPP
#define DICKEBEC_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dickebec/errors.hpp"

namespace dickebec {

namespace detail {

inline double zeta_memo(double s) {
  thread_local std::unordered_map<double, double> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  const double v = std::riemann_zeta(s);
  cache.emplace(s, v);
  return v;
}

/// Direct Bose series sum_{k>=1} z^k / k^s for any real s and 0 <= z < 1,
/// truncated when a rigorous geometric tail bound drops below tol times the
/// partial sum. For s > 0 the bound is z^{k+1} / ((k+1)^s (1-z)); for s < 0
/// the term ratio is bounded by z ((k+2)/(k+1))^{-s} instead of z.
inline double bose_series(double s, double z, double tol) {
  if (z == 0.0) return 0.0;
  double acc = 0.0;
  double term = z;  // z^k / k^s at k = 1
  for (long k = 1; k < 1000000; ++k) {
    acc += term;
    const double next =
        term * z * std::pow(static_cast<double>(k) / (k + 1), s);
    double ratio = z;
    if (s < 0.0) {
      ratio = z * std::pow(static_cast<double>(k + 2) / (k + 1), -s);
    }
    if (ratio < 1.0 && next / (1.0 - ratio) <= tol * acc) return acc;
    term = next;
  }
  throw std::runtime_error("bose_series: no convergence within term cap");
}

/// Li_s(e^{-a}) for 0 < a <= 1 by the expansion around the unit-fugacity
/// point: a power series in a whose coefficients are zeta values, plus the
/// non-analytic a^{s-1} piece (a log term when s is a positive integer).
/// Converges for a < 2 pi; used only on a <= 1 where ~30 terms reach
/// machine precision. The direct power series in z is useless here: its
/// term count scales like 1/a.
inline double bose_li_expansion(double s, double a, double tol) {
  const double rounded = std::round(s);
  const bool integer_order = std::abs(s - rounded) < 1e-9;
  double acc = 0.0;
  int skip = -1;
  if (integer_order) {
    const int si = static_cast<int>(rounded);
    // s = 0 and s = 1 have closed forms and are handled by the caller.
    double harmonic = 0.0;
    for (int j = 1; j < si; ++j) harmonic += 1.0 / j;
    double lead = harmonic - std::log(a);
    for (int j = 1; j < si; ++j) lead *= -a / j;  // (-a)^{s-1} / (s-1)!
    acc = lead;
    skip = si - 1;
  } else {
    acc = std::tgamma(1.0 - s) * std::pow(a, s - 1.0);
  }
  double fac = 1.0;  // (-a)^n / n!
  bool prev_small = false;
  for (int n = 0; n < 200; ++n) {
    if (n != skip) {
      const double t = fac * zeta_memo(s - n);
      acc += t;
      // zeta vanishes at negative even integers, so require two
      // consecutive negligible terms before stopping.
      const bool small = std::abs(t) <= tol * std::abs(acc);
      if (small && prev_small && n > 2) return acc;
      prev_small = small;
    }
    fac *= -a / (n + 1);
  }
  throw std::runtime_error("bose_li_expansion: no convergence");
}

/// Li_s(e^{-a}) for a > 0, any real s. Dispatches between the direct series
/// (a >= 1, i.e. z <= 1/e) and the unit-fugacity expansion (a < 1).
inline double bose_li_alpha(double s, double a, double tol) {
  if (!(a > 0.0)) {
    throw std::domain_error("bose_li_alpha: require a > 0");
  }
  if (s == 0.0) return 1.0 / std::expm1(a);
  if (s == 1.0) return -std::log(-std::expm1(-a));
  if (a >= 1.0) return bose_series(s, std::exp(-a), tol);
  return bose_li_expansion(s, a, tol);
}

}  // namespace detail

/// Bose-Einstein polylogarithm Li_s(z) = sum_{k>=1} z^k / k^s for order
/// s > 0 and fugacity 0 <= z < 1.
inline double bose_polylog(double s, double z, double tol = 1e-12) {
  if (!(s > 0.0)) {
    throw std::domain_error("bose_polylog: order must be positive");
  }
  if (z < 0.0 || z >= 1.0) {
    throw std::domain_error("bose_polylog: fugacity must lie in [0, 1)");
  }
  if (z == 0.0) return 0.0;
  return detail::bose_li_alpha(s, -std::log(z), tol);
}

enum class ThermalMode {
  Full,          ///< thermal k != 0 cloud included
  ZeroModeOnly,  ///< rho0, p0, rho0' forced to 0 (condensate-sector model)
};

/// Free-Bose-gas thermodynamics in nu spatial dimensions for quadratic
/// dispersion k^2/(2m), natural units hbar = k_B = 1:
///
///   rho0(mu) = (m/(2 pi beta))^{nu/2}          Li_{nu/2}  (e^{beta mu})
///   p0(mu)   = (m/(2 pi beta))^{nu/2} / beta * Li_{nu/2+1}(e^{beta mu})
///   rho0'(mu)= (m/(2 pi beta))^{nu/2} * beta * Li_{nu/2-1}(e^{beta mu})
///
/// All three vanish identically in ZeroModeOnly mode.
class ThermalCloud {
 public:
  ThermalCloud(double beta, double mass, int nu, double series_tol = 1e-12,
               ThermalMode mode = ThermalMode::Full)
      : beta_(beta), mass_(mass), nu_(nu), tol_(series_tol), mode_(mode) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw std::domain_error("ThermalCloud: beta must be positive");
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw std::domain_error("ThermalCloud: mass must be positive");
    }
    if (nu < 1) {
      throw std::domain_error("ThermalCloud: nu must be a positive integer");
    }
    if (!(series_tol > 0.0)) {
      throw std::domain_error("ThermalCloud: series_tol must be positive");
    }
    prefactor_ = std::pow(mass_ / (2.0 * M_PI * beta_), 0.5 * nu_);
  }

  double beta() const { return beta_; }
  double mass() const { return mass_; }
  int nu() const { return nu_; }
  double series_tol() const { return tol_; }
  ThermalMode mode() const { return mode_; }

  /// (m/(2 pi beta))^{nu/2}
  double thermal_prefactor() const { return prefactor_; }

  /// Free-gas density at chemical potential mu <= 0. mu = 0 is finite only
  /// for nu > 2.
  double rho0(double mu) const {
    check_mu(mu, "rho0");
    if (mode_ == ThermalMode::ZeroModeOnly) return 0.0;
    const double order = 0.5 * nu_;
    if (mu == 0.0) {
      if (nu_ <= 2) {
        throw DivergenceError("rho0 diverges at mu = 0 for nu <= 2");
      }
      return prefactor_ * detail::zeta_memo(order);
    }
    return prefactor_ * detail::bose_li_alpha(order, -beta_ * mu, tol_);
  }

  /// Free-gas pressure at mu <= 0; finite at mu = 0 for every nu >= 1.
  double p0(double mu) const {
    check_mu(mu, "p0");
    if (mode_ == ThermalMode::ZeroModeOnly) return 0.0;
    const double order = 0.5 * nu_ + 1.0;
    if (mu == 0.0) return prefactor_ / beta_ * detail::zeta_memo(order);
    return prefactor_ / beta_ * detail::bose_li_alpha(order, -beta_ * mu, tol_);
  }

  /// d rho0 / d mu at mu < 0 (strictly).
  double rho0_prime(double mu) const {
    if (mode_ == ThermalMode::ZeroModeOnly) {
      check_mu(mu, "rho0_prime");
      return 0.0;
    }
    if (!(mu < 0.0)) {
      throw std::domain_error("rho0_prime: require mu < 0");
    }
    const double order = 0.5 * nu_ - 1.0;
    return prefactor_ * beta_ *
           detail::bose_li_alpha(order, -beta_ * mu, tol_);
  }

  /// Limit rho0'(mu -> 0^-); +infinity for nu <= 4.
  double rho0_prime_at_zero() const {
    if (mode_ == ThermalMode::ZeroModeOnly) return 0.0;
    if (nu_ <= 4) return std::numeric_limits<double>::infinity();
    return prefactor_ * beta_ * detail::zeta_memo(0.5 * nu_ - 1.0);
  }

 private:
  static void check_mu(double mu, const char* who) {
    if (mu > 0.0 || std::isnan(mu)) {
      throw std::domain_error(std::string(who) + ": require mu <= 0");
    }
  }

  double beta_;
  double mass_;
  int nu_;
  double tol_;
  ThermalMode mode_;
  double prefactor_;
};

}  // namespace dickebec

#endif  // DICKEBEC_SPECIAL_FUNCTIONS_HPP
