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

#ifndef DICKEBEC_BRANCH_SOLVERS_HPP
#define DICKEBEC_BRANCH_SOLVERS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "dickebec/model.hpp"
#include "dickebec/rootfind.hpp"

namespace dickebec {

/// Critical chemical potentials of the model at one epsilon.
///
///   x0    minimizer of 2 lambda rho0(-x) + eta x (solves 2 lambda rho0' = eta)
///   mu0   minimum of the superradiant gap curve, 2 lambda rho0(-x0) + eta x0
///   mu1   end of the normal branch, 2 lambda rho0(-eps) - eps
///   mu2   uniqueness threshold of the superradiant branch,
///         2 lambda rho0(-eps) + eta eps
///   mu_c1 <= mu_c2 are the phase boundaries NoBEC / MinusOnlyBEC /
///   SuperradiantBEC found by pressure comparison. mu_c1 == mu_c2 means the
///   intermediate phase is absent. Thresholds of a branch that never exists
///   (g = 0, or the x = 0 endpoint at eps = 0 in nu <= 2) are +infinity.
struct CriticalSet {
  double epsilon;
  double x0;
  double mu0;
  double mu1;
  double mu2;
  double mu_c1;
  double mu_c2;
  bool intermediate_phase_present;
};

/// Solves the three stationary-point equations for the gap x = lambda rho -
/// mu at fixed mu and classifies the critical chemical potentials. All roots
/// are found by bisection on monotone segments, run until the bracket
/// collapses to adjacent doubles; endpoint signs are known analytically so
/// singular endpoints are never evaluated.
class BranchSolver {
 public:
  BranchSolver(const ModelParams& params, const ThermalCloud& cloud)
      : p_(params), tc_(cloud) {
    compute_thresholds();
    classify();
  }

  BranchSolver(const ModelParams& params, ThermalMode mode = ThermalMode::Full)
      : BranchSolver(params, make_cloud(params, mode)) {}

  const ModelParams& params() const { return p_; }
  const ThermalCloud& cloud() const { return tc_; }

  double x0() const { return x0_; }
  double mu0() const { return mu0_; }
  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }
  const CriticalSet& critical_set() const { return crit_; }

  /// Normal branch: unique root x1(mu) >= eps of 2 lambda rho0(-x) - x = mu,
  /// defined for mu <= mu1.
  std::optional<BranchSolution> solve_case1(double mu) const {
    if (!(mu <= mu1_)) return std::nullopt;
    return make_case1(case1_root(mu), mu);
  }

  /// Superradiant branch: roots of 2 lambda rho0(-x) + eta x = mu with
  /// x >= eps. Zero, one or two entries; the upper root comes first.
  std::vector<BranchSolution> solve_case2(double mu) const {
    std::vector<BranchSolution> out;
    if (!std::isfinite(p_.eta)) return out;  // g = 0: branch degenerates away
    const double thresh = (p_.epsilon <= x0_) ? mu0_ : mu2_;
    if (mu >= thresh) {
      out.push_back(make_case2(case2_upper_root(mu), mu, Branch::Superradiant));
    }
    if (p_.epsilon < x0_ && mu > mu0_ && mu <= mu2_) {
      out.push_back(
          make_case2(case2_lower_root(mu), mu, Branch::SuperradiantLower));
    }
    return out;
  }

  /// Minus-condensate branch pinned at the boundary x = eps, defined for
  /// mu > mu1.
  std::optional<BranchSolution> solve_case3(double mu) const {
    if (!(mu > mu1_)) return std::nullopt;
    const double rho = (mu + p_.epsilon) / p_.lambda;
    const double rad = rho - 2.0 * tc_.rho0(-p_.epsilon);
    if (rad < 0.0) {
      throw NegativeRadicandError(
          "solve_case3: negative condensate density; mu <= mu1 slipped "
          "through");
    }
    BranchSolution s;
    s.branch = Branch::MinusCondensate;
    s.x = p_.epsilon;
    s.rho = rho;
    s.alpha_plus = 0.0;
    s.alpha_minus = std::sqrt(rad);
    s.alpha_b = 0.0;
    s.pressure = case3_pressure(mu);
    return s;
  }

  /// All stationary points at mu in the fixed order case1, case3, case2
  /// (upper then lower). The order also encodes the tie-break rule: at exact
  /// pressure ties the earlier candidate wins, which keeps observables
  /// continuous from below.
  std::vector<BranchSolution> candidates(double mu) const {
    std::vector<BranchSolution> out;
    if (auto c1 = solve_case1(mu)) out.push_back(*c1);
    if (auto c3 = solve_case3(mu)) out.push_back(*c3);
    for (const auto& c2 : solve_case2(mu)) out.push_back(c2);
    return out;
  }

  double case1_pressure(double x, double mu) const {
    const double s = x + mu;
    return 2.0 * tc_.p0(-x) + s * s / (2.0 * p_.lambda);
  }

  double case2_pressure(double x, double mu) const {
    const double s = x + mu;
    const double ep = p_.epsilon;
    return 2.0 * tc_.p0(-x) +
           (s * s - (p_.eta + 1.0) * x * x) / (2.0 * p_.lambda) +
           (p_.eta + 1.0) * ep * ep / (2.0 * p_.lambda);
  }

  double case3_pressure(double mu) const {
    const double s = mu + p_.epsilon;
    return 2.0 * tc_.p0(-p_.epsilon) + s * s / (2.0 * p_.lambda);
  }

 private:
  double h1(double x) const { return 2.0 * p_.lambda * tc_.rho0(-x) - x; }
  double h2(double x) const {
    return 2.0 * p_.lambda * tc_.rho0(-x) + p_.eta * x;
  }

  // Root of h1(x) = mu on [eps, inf); h1 is strictly decreasing and
  // h1(eps) = mu1 >= mu, possibly +infinity at the eps = 0 endpoint.
  double case1_root(double mu) const {
    const double eps = p_.epsilon;
    if (mu == mu1_) return eps;
    auto f = [&](double x) { return h1(x) - mu; };
    const double hi =
        grow_upper_bracket(f, std::max(eps, 1.0) * 2.0, /*sign_lo=*/+1);
    return bisect_known_signs(f, eps, hi, +1);
  }

  // Upper root of h2(x) = mu on [max(x0, eps), inf); h2 is strictly
  // increasing there with value `thresh` <= mu at the left endpoint.
  double case2_upper_root(double mu) const {
    const double lo = std::max(x0_, p_.epsilon);
    const double thresh = (p_.epsilon <= x0_) ? mu0_ : mu2_;
    if (mu == thresh) return lo;
    auto f = [&](double x) { return h2(x) - mu; };
    const double start = std::max(lo * 2.0, std::max(p_.epsilon, 1.0) * 2.0);
    const double hi = grow_upper_bracket(f, start, /*sign_lo=*/-1);
    return bisect_known_signs(f, lo, hi, -1);
  }

  // Lower root of h2(x) = mu on [eps, x0]; h2 is strictly decreasing there,
  // h2(eps) = mu2 >= mu and h2(x0) = mu0 < mu.
  double case2_lower_root(double mu) const {
    if (mu == mu2_) return p_.epsilon;
    auto f = [&](double x) { return h2(x) - mu; };
    return bisect_known_signs(f, p_.epsilon, x0_, +1);
  }

  // rho is stored through the branch's density equation (a sum of positive
  // terms) rather than (x + mu)/lambda, which cancels catastrophically in
  // the dilute limit x ~ -mu.
  BranchSolution make_case1(double x, double mu) const {
    BranchSolution s;
    s.branch = Branch::Normal;
    s.x = x;
    s.rho = 2.0 * tc_.rho0(-x);
    s.alpha_plus = s.alpha_minus = s.alpha_b = 0.0;
    s.pressure = case1_pressure(x, mu);
    return s;
  }

  BranchSolution make_case2(double x, double mu, Branch tag) const {
    BranchSolution s;
    s.branch = tag;
    s.x = x;
    s.rho = (p_.eta + 1.0) * x / p_.lambda + 2.0 * tc_.rho0(-x);
    const double om = p_.omega;
    s.alpha_plus =
        2.0 * std::sqrt(om * std::max(0.0, x - p_.epsilon)) / p_.g;
    s.alpha_minus = 2.0 * std::sqrt(om * (x + p_.epsilon)) / p_.g;
    // Photon amplitude through the lock 2 omega alpha_b + g a+ a- = 0 so the
    // identity holds exactly in floating point.
    s.alpha_b = -p_.g * s.alpha_plus * s.alpha_minus / (2.0 * om);
    s.pressure = case2_pressure(x, mu);
    return s;
  }

  void compute_thresholds() {
    const double inf = std::numeric_limits<double>::infinity();
    const double eps = p_.epsilon;
    const bool full = tc_.mode() == ThermalMode::Full;

    if (eps == 0.0 && full && p_.nu <= 2) {
      mu1_ = inf;  // rho0(0) diverges: the normal branch never terminates
    } else {
      mu1_ = 2.0 * p_.lambda * tc_.rho0(-eps) - eps;
    }

    if (!std::isfinite(p_.eta)) {
      x0_ = inf;
      mu0_ = inf;
      mu2_ = inf;
      return;
    }

    if (tc_.mode() == ThermalMode::ZeroModeOnly) {
      x0_ = 0.0;  // rho0' vanishes identically; the gap curve is a line
      mu0_ = 0.0;
    } else if (p_.nu > 4 &&
               2.0 * p_.lambda * tc_.rho0_prime_at_zero() <= p_.eta) {
      x0_ = 0.0;  // gap curve strictly increasing from x = 0
      mu0_ = 2.0 * p_.lambda * tc_.rho0(0.0);
    } else {
      auto f = [&](double x) {
        return 2.0 * p_.lambda * tc_.rho0_prime(-x) - p_.eta;
      };
      double lo = 1.0, hi = 1.0;
      if (f(1.0) > 0.0) {
        hi = grow_upper_bracket(f, 2.0, +1);
      } else {
        lo = 0.5;
        while (f(lo) <= 0.0) {
          lo *= 0.5;
          if (lo < 1e-290) {
            throw BracketError("x0 bracket: rho0' stays below eta/(2 lambda)");
          }
        }
        hi = 2.0 * lo;
      }
      x0_ = bisect_known_signs(f, lo, hi, +1);
      mu0_ = h2(x0_);
    }

    if (eps == 0.0) {
      mu2_ = mu1_;
    } else {
      mu2_ = 2.0 * p_.lambda * tc_.rho0(-eps) + p_.eta * eps;
    }
  }

  void classify() {
    const double inf = std::numeric_limits<double>::infinity();
    crit_.epsilon = p_.epsilon;
    crit_.x0 = x0_;
    crit_.mu0 = mu0_;
    crit_.mu1 = mu1_;
    crit_.mu2 = mu2_;

    auto d21 = [&](double mu) {
      return case2_pressure(case2_upper_root(mu), mu) -
             case1_pressure(case1_root(mu), mu);
    };
    auto d23 = [&](double mu) {
      return case2_pressure(case2_upper_root(mu), mu) - case3_pressure(mu);
    };

    if (!std::isfinite(p_.eta)) {
      // Pure mean-field gas: one transition, no superradiant phase.
      crit_.mu_c1 = mu1_;
      crit_.mu_c2 = inf;
    } else if (p_.epsilon == 0.0) {
      double mu_c;
      if (std::isfinite(mu1_)) {
        if (mu1_ - mu0_ <= 1e-14 * std::max(1.0, std::abs(mu1_))) {
          mu_c = mu1_;  // degenerate window (zero-mode limit)
        } else {
          mu_c = bisect_known_signs(d21, mu0_, mu1_, -1);
        }
      } else {
        // nu <= 2: the normal branch never ends but the superradiant
        // pressure still overtakes it; expand the bracket upward.
        double hi = mu0_ + std::max(1.0, std::abs(mu0_));
        int tries = 0;
        while (d21(hi) < 0.0) {
          hi = mu0_ + 2.0 * (hi - mu0_);
          if (++tries > 60) {
            throw BracketError("mu_c bracket: P2 never exceeds P1");
          }
        }
        mu_c = bisect_known_signs(d21, mu0_, hi, -1);
      }
      crit_.mu_c1 = crit_.mu_c2 = mu_c;
    } else if (p_.epsilon >= x0_) {
      // Simplest ordering: the three phases meet exactly at mu1 and mu2.
      crit_.mu_c1 = mu1_;
      crit_.mu_c2 = mu2_;
    } else {
      // 0 < eps < x0: compare pressures where both branches live.
      if (mu0_ < mu1_) {
        const double s = d21(mu1_);
        if (s > 0.0) {
          // Superradiance overtakes the normal branch before it ends: the
          // intermediate phase is preempted.
          const double mu_c = bisect_known_signs(d21, mu0_, mu1_, -1);
          crit_.mu_c1 = crit_.mu_c2 = mu_c;
        } else {
          crit_.mu_c1 = mu1_;
          crit_.mu_c2 = bisect_known_signs(d23, mu1_, mu2_, -1);
        }
      } else {
        // Only the minus condensate exists on (mu1, mu0).
        crit_.mu_c1 = mu1_;
        crit_.mu_c2 = bisect_known_signs(d23, mu0_, mu2_, -1);
      }
    }
    crit_.intermediate_phase_present = crit_.mu_c1 < crit_.mu_c2;
  }

  ModelParams p_;
  ThermalCloud tc_;
  double x0_ = 0.0;
  double mu0_ = 0.0;
  double mu1_ = 0.0;
  double mu2_ = 0.0;
  CriticalSet crit_{};
};

}  // namespace dickebec

#endif  // DICKEBEC_BRANCH_SOLVERS_HPP
