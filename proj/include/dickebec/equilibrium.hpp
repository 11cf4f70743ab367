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

#ifndef DICKEBEC_EQUILIBRIUM_HPP
#define DICKEBEC_EQUILIBRIUM_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "dickebec/branch_solvers.hpp"
#include "dickebec/model.hpp"

namespace dickebec {

/// One phase transition located by the critical-set classification.
/// `pressure_left_at_mu` / `pressure_right_at_mu` are the adjoining branch
/// pressures evaluated exactly at mu (they agree at a genuine transition);
/// densities and amplitudes come from one-sided offsets mu -+ delta.
struct Transition {
  double mu;
  PhaseLabel left_phase;
  PhaseLabel right_phase;
  double pressure_left_at_mu;
  double pressure_right_at_mu;
  double rho_left;
  double rho_right;
  double delta_rho;
  bool first_order;  ///< density jump above tolerance
};

struct TransitionReport {
  double delta;  ///< one-sided offset used for the limits
  std::vector<Transition> transitions;
};

/// Assembles all stationary points at fixed mu, selects the equilibrium by
/// maximal pressure and derives the observable set.
class EquilibriumSolver {
 public:
  explicit EquilibriumSolver(const ModelParams& params,
                             ThermalMode mode = ThermalMode::Full)
      : solver_(params, mode) {}

  EquilibriumSolver(const ModelParams& params, const ThermalCloud& cloud)
      : solver_(params, cloud) {}

  const BranchSolver& branches() const { return solver_; }
  const ModelParams& params() const { return solver_.params(); }
  const ThermalCloud& cloud() const { return solver_.cloud(); }
  const CriticalSet& critical_set() const { return solver_.critical_set(); }

  /// The pressure-maximizing stationary point with all derived observables.
  EquilibriumState solve(double mu) const {
    const auto cands = solver_.candidates(mu);
    if (cands.empty()) {
      throw NoCandidateError(
          "solve_equilibrium: no stationary point at mu; stability "
          "violated?");
    }
    const BranchSolution* best = &cands.front();
    for (const auto& c : cands) {
      if (c.pressure > best->pressure) best = &c;
    }
    return observables(*best);
  }

  /// Equilibrium pressure P(mu); continuous and convex in mu.
  double pressure(double mu) const { return solve(mu).solution.pressure; }

  /// Left/right limits of the observables at each critical chemical
  /// potential, with a first/second-order classification of the density
  /// jump. The jump tolerance 1e-6 max(rho_l, rho_r) is numerical, not
  /// physical.
  TransitionReport transition_report(double delta = 1e-7) const {
    const CriticalSet& cs = solver_.critical_set();
    TransitionReport rep;
    rep.delta = delta;
    std::vector<double> points;
    if (std::isfinite(cs.mu_c1)) points.push_back(cs.mu_c1);
    if (std::isfinite(cs.mu_c2) && cs.mu_c2 > cs.mu_c1) {
      points.push_back(cs.mu_c2);
    }
    for (double mu_c : points) {
      const EquilibriumState left = solve(mu_c - delta);
      const EquilibriumState right = solve(mu_c + delta);
      Transition t;
      t.mu = mu_c;
      t.left_phase = left.phase_label;
      t.right_phase = right.phase_label;
      t.pressure_left_at_mu = branch_pressure_at(left.solution.branch, mu_c);
      t.pressure_right_at_mu = branch_pressure_at(right.solution.branch, mu_c);
      t.rho_left = left.solution.rho;
      t.rho_right = right.solution.rho;
      t.delta_rho = t.rho_right - t.rho_left;
      t.first_order = std::abs(t.delta_rho) >
                      1e-6 * std::max(t.rho_left, t.rho_right);
      rep.transitions.push_back(t);
    }
    return rep;
  }

  /// Populates the derived observables of a stationary point.
  EquilibriumState observables(const BranchSolution& sol) const {
    EquilibriumState st;
    st.solution = sol;
    st.phase_label = phase_of(sol.branch);
    st.condensate_density_plus = sol.alpha_plus * sol.alpha_plus;
    st.condensate_density_minus = sol.alpha_minus * sol.alpha_minus;
    st.photon_density = sol.alpha_b * sol.alpha_b;
    st.thermal_density = 2.0 * cloud().rho0(-sol.x);
    st.entropy_density = entropy_density(cloud(), sol.x);
    st.free_energy_density = -sol.pressure;
    return st;
  }

 private:
  // Pressure of a given branch evaluated through its closed form at mu;
  // used for the continuity check at transitions where one side exists
  // only as a one-sided limit.
  double branch_pressure_at(Branch b, double mu) const {
    switch (b) {
      case Branch::Normal: {
        auto c1 = solver_.solve_case1(mu);
        return c1 ? c1->pressure : std::numeric_limits<double>::quiet_NaN();
      }
      case Branch::MinusCondensate:
        return solver_.case3_pressure(mu);
      default: {
        auto c2 = solver_.solve_case2(mu);
        return c2.empty() ? std::numeric_limits<double>::quiet_NaN()
                          : c2.front().pressure;
      }
    }
  }

  BranchSolver solver_;
};

}  // namespace dickebec

#endif  // DICKEBEC_EQUILIBRIUM_HPP
