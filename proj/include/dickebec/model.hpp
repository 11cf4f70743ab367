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

#ifndef DICKEBEC_MODEL_HPP
#define DICKEBEC_MODEL_HPP

#include <cmath>
#include <limits>
#include <string>

#include "dickebec/errors.hpp"
#include "dickebec/special_functions.hpp"

namespace dickebec {

/// Raw model couplings as supplied by the user, before validation.
/// Units: natural, hbar = k_B = 1; energies and densities are expressed in
/// the same energy scale as beta^{-1}.
struct RawParams {
  double beta = 1.0;     ///< inverse temperature
  double lambda = 1.0;   ///< mean-field repulsion (energy * volume)
  double omega = 1.0;    ///< photon mode frequency (> 0)
  double g = 1.0;        ///< matter-light coupling (>= 0)
  double epsilon = 0.0;  ///< internal level splitting (>= 0)
  double mass = 1.0;     ///< boson mass
  int nu = 3;            ///< spatial dimension
  double series_tol = 1e-12;
};

/// Validated model parameters. eta = 8 omega lambda / g^2 - 1 is the
/// stability margin; thermodynamic stability requires eta > 0, i.e.
/// lambda > g^2 / (8 omega). For g = 0 the photon sector decouples and
/// eta is stored as +infinity.
struct ModelParams {
  double beta;
  double lambda;
  double omega;
  double g;
  double epsilon;
  double mass;
  int nu;
  double series_tol;
  double eta;
};

namespace detail {

inline ModelParams build_params(const RawParams& raw, bool enforce_stability) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error(std::string("validate_params: ") + name +
                              " must be positive and finite");
    }
  };
  positive(raw.beta, "beta");
  positive(raw.lambda, "lambda");
  positive(raw.omega, "omega");
  positive(raw.mass, "mass");
  positive(raw.series_tol, "series_tol");
  if (raw.g < 0.0 || !std::isfinite(raw.g)) {
    throw std::domain_error("validate_params: g must be >= 0 and finite");
  }
  if (raw.epsilon < 0.0 || !std::isfinite(raw.epsilon)) {
    throw std::domain_error("validate_params: epsilon must be >= 0");
  }
  if (raw.nu < 1) {
    throw std::domain_error("validate_params: nu must be a positive integer");
  }
  double eta = std::numeric_limits<double>::infinity();
  if (raw.g > 0.0) {
    eta = 8.0 * raw.omega * raw.lambda / (raw.g * raw.g) - 1.0;
  }
  if (enforce_stability && !(eta > 0.0)) {
    throw StabilityViolation(
        "stability requires lambda > g^2/(8*omega); got lambda = " +
        std::to_string(raw.lambda) + ", g^2/(8*omega) = " +
        std::to_string(raw.g * raw.g / (8.0 * raw.omega)));
  }
  return ModelParams{raw.beta, raw.lambda,     raw.omega, raw.g,
                     raw.epsilon, raw.mass,    raw.nu,    raw.series_tol,
                     eta};
}

}  // namespace detail

/// Validates raw couplings and computes eta. Throws StabilityViolation when
/// lambda <= g^2/(8 omega) and std::domain_error for out-of-range fields.
inline ModelParams validate_params(const RawParams& raw) {
  return detail::build_params(raw, /*enforce_stability=*/true);
}

/// Builds params without the stability check. Only meaningful for
/// finite-volume experiments that probe the unstable regime; the
/// thermodynamic-limit solvers require eta > 0.
inline ModelParams unchecked_params(const RawParams& raw) {
  return detail::build_params(raw, /*enforce_stability=*/false);
}

inline ThermalCloud make_cloud(const ModelParams& p,
                               ThermalMode mode = ThermalMode::Full) {
  return ThermalCloud(p.beta, p.mass, p.nu, p.series_tol, mode);
}

/// Stationary-point branches of the free-energy functional.
enum class Branch {
  Normal,             ///< all condensate amplitudes zero
  Superradiant,       ///< both matter modes and the photon condensed (upper root)
  SuperradiantLower,  ///< lower root of the superradiant gap equation
  MinusCondensate,    ///< only the minus mode condensed, x pinned at epsilon
};

enum class PhaseLabel { NoBEC, MinusOnlyBEC, SuperradiantBEC };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::Normal: return "case1";
    case Branch::Superradiant: return "case2_upper";
    case Branch::SuperradiantLower: return "case2_lower";
    case Branch::MinusCondensate: return "case3";
  }
  return "?";
}

inline const char* to_string(PhaseLabel p) {
  switch (p) {
    case PhaseLabel::NoBEC: return "NoBEC";
    case PhaseLabel::MinusOnlyBEC: return "MinusOnlyBEC";
    case PhaseLabel::SuperradiantBEC: return "SuperradiantBEC";
  }
  return "?";
}

inline PhaseLabel phase_of(Branch b) {
  switch (b) {
    case Branch::Normal: return PhaseLabel::NoBEC;
    case Branch::MinusCondensate: return PhaseLabel::MinusOnlyBEC;
    default: return PhaseLabel::SuperradiantBEC;
  }
}

/// One stationary point of the free-energy functional at fixed mu.
/// x = lambda rho - mu is the gap seen by the thermal cloud; amplitudes are
/// real after gauge fixing, with alpha_b <= 0 by convention.
struct BranchSolution {
  Branch branch;
  double x;
  double rho;
  double alpha_plus;
  double alpha_minus;
  double alpha_b;
  double pressure;
};

/// The pressure-maximizing stationary point plus derived observables.
struct EquilibriumState {
  BranchSolution solution;
  PhaseLabel phase_label;
  double condensate_density_plus;   ///< alpha_plus^2
  double condensate_density_minus;  ///< alpha_minus^2
  double photon_density;            ///< alpha_b^2
  double thermal_density;           ///< 2 rho0(mu - lambda rho)
  double entropy_density;
  double free_energy_density;  ///< -pressure
};

/// Occupation of the thermal mode at wave number k for gap x:
/// (e^{beta (k^2/2m + x)} - 1)^{-1}.
inline double momentum_distribution(const ThermalCloud& tc, double x,
                                    double k) {
  if (x < 0.0 || k < 0.0) {
    throw std::domain_error("momentum_distribution: require x >= 0, k >= 0");
  }
  if (x == 0.0 && k == 0.0) {
    throw DivergenceError("momentum_distribution diverges at k = 0, x = 0");
  }
  return 1.0 / std::expm1(tc.beta() * (k * k / (2.0 * tc.mass()) + x));
}

/// Entropy density of the two thermal clouds at gap x >= 0, evaluated in
/// closed form through the free-gas functions:
///   S(x) = 2 beta [ (nu/2 + 1) p0(-x) + x rho0(-x) ].
/// This is the thermodynamic identity s = beta (e + p - mu_eff rho) applied
/// per mode with mu_eff = -x; the quadrature of the occupation-entropy
/// integrand agrees with it (see tests).
inline double entropy_density(const ThermalCloud& tc, double x) {
  if (x < 0.0) {
    throw std::domain_error("entropy_density: require x >= 0");
  }
  const double p = tc.p0(-x);
  const double r = tc.rho0(-x);  // throws DivergenceError at x=0, nu<=2
  return 2.0 * tc.beta() * ((0.5 * tc.nu() + 1.0) * p + x * r);
}

/// Grand-canonical energy density of a candidate state (alpha_plus,
/// alpha_minus, alpha_b, x) at chemical potential mu, with the thermal
/// occupations at their conditional optimum A(k) = (e^{beta(eps(k)+x)}-1)^-1.
/// The thermal integrals reduce to the free-gas functions:
///   integral (eps(k) - mu) A = (nu/2) p0(-x) - mu rho0(-x)   per mode.
inline double energy_density(const ModelParams& mp, const ThermalCloud& tc,
                             double alpha_plus, double alpha_minus,
                             double alpha_b, double x, double mu) {
  if (x < mp.epsilon) {
    throw std::domain_error(
        "energy_density: constraint x >= epsilon violated");
  }
  const double ap2 = alpha_plus * alpha_plus;
  const double am2 = alpha_minus * alpha_minus;
  const double rho = ap2 + am2 + 2.0 * tc.rho0(-x);
  double e = -(mu - mp.epsilon) * ap2 - (mu + mp.epsilon) * am2;
  e += 2.0 * (0.5 * tc.nu() * tc.p0(-x) - mu * tc.rho0(-x));
  e += mp.g * alpha_plus * alpha_minus * alpha_b +
       mp.omega * alpha_b * alpha_b;
  e += 0.5 * mp.lambda * rho * rho;
  return e;
}

}  // namespace dickebec

#endif  // DICKEBEC_MODEL_HPP
