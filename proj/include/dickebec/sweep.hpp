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

#ifndef DICKEBEC_SWEEP_HPP
#define DICKEBEC_SWEEP_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dickebec/equilibrium.hpp"

namespace dickebec {

/// A non-equilibrium stationary point recorded alongside a sweep sample so
/// the full multi-branch pressure structure can be plotted from one file.
struct CandidateRow {
  Branch branch;
  double x;
  double rho;
  double alpha_plus;
  double alpha_minus;
  double alpha_b;
  double pressure;
  double entropy_density;
  double thermal_density;
};

/// One sweep sample: the equilibrium observables at (params, mu) plus every
/// candidate branch defined there.
struct PhaseDiagramRow {
  double beta, lambda, omega, g, epsilon, mass;
  int nu;
  double mu;
  PhaseLabel phase_label;
  double x, rho, alpha_plus, alpha_minus, alpha_b;
  double pressure, entropy_density, thermal_density;
  std::vector<CandidateRow> candidates;
};

/// Evaluates the equilibrium on a strictly increasing mu grid, one row per
/// grid point. Rows are ordered by grid index.
inline std::vector<PhaseDiagramRow> sweep_mu(const EquilibriumSolver& solver,
                                             const std::vector<double>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::domain_error("sweep_mu: grid must be strictly increasing");
    }
  }
  const ModelParams& p = solver.params();
  std::vector<PhaseDiagramRow> rows;
  rows.reserve(grid.size());
  for (double mu : grid) {
    const EquilibriumState eq = solver.solve(mu);
    PhaseDiagramRow row;
    row.beta = p.beta;
    row.lambda = p.lambda;
    row.omega = p.omega;
    row.g = p.g;
    row.epsilon = p.epsilon;
    row.mass = p.mass;
    row.nu = p.nu;
    row.mu = mu;
    row.phase_label = eq.phase_label;
    row.x = eq.solution.x;
    row.rho = eq.solution.rho;
    row.alpha_plus = eq.solution.alpha_plus;
    row.alpha_minus = eq.solution.alpha_minus;
    row.alpha_b = eq.solution.alpha_b;
    row.pressure = eq.solution.pressure;
    row.entropy_density = eq.entropy_density;
    row.thermal_density = eq.thermal_density;
    for (const auto& cand : solver.branches().candidates(mu)) {
      const EquilibriumState cs = solver.observables(cand);
      row.candidates.push_back(CandidateRow{
          cand.branch, cand.x, cand.rho, cand.alpha_plus, cand.alpha_minus,
          cand.alpha_b, cand.pressure, cs.entropy_density,
          cs.thermal_density});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Critical set per epsilon over an epsilon grid (values >= 0), mapping out
/// which phase sequence each splitting realizes.
inline std::vector<CriticalSet> phase_boundary_map(
    const ModelParams& base, const std::vector<double>& epsilon_grid,
    ThermalMode mode = ThermalMode::Full) {
  std::vector<CriticalSet> out;
  out.reserve(epsilon_grid.size());
  for (double eps : epsilon_grid) {
    if (eps < 0.0) {
      throw std::domain_error("phase_boundary_map: epsilon must be >= 0");
    }
    ModelParams p = base;
    p.epsilon = eps;
    out.push_back(BranchSolver(p, mode).critical_set());
  }
  return out;
}

/// Doubles are serialized with 17 significant digits, which round-trips
/// IEEE-754 binary64 exactly.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_human(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline const char* sweep_csv_header() {
  return "branch,phase,beta,lambda,omega,g,epsilon,mass,nu,mu,x,rho,"
         "alpha_plus,alpha_minus,alpha_b,pressure,entropy_density,"
         "thermal_density";
}

/// Writes the sweep as delimiter-separated values. Each grid point yields
/// one `equilibrium` record followed by one record per defined candidate
/// branch (case1, case2_upper, case2_lower, case3).
inline void write_sweep_csv(std::ostream& os,
                            const std::vector<PhaseDiagramRow>& rows) {
  os << sweep_csv_header() << '\n';
  auto emit = [&os](const char* branch, const char* phase,
                    const PhaseDiagramRow& r, double x, double rho, double ap,
                    double am, double ab, double pr, double s, double th) {
    os << branch << ',' << phase << ',' << format_full(r.beta) << ','
       << format_full(r.lambda) << ',' << format_full(r.omega) << ','
       << format_full(r.g) << ',' << format_full(r.epsilon) << ','
       << format_full(r.mass) << ',' << r.nu << ',' << format_full(r.mu)
       << ',' << format_full(x) << ',' << format_full(rho) << ','
       << format_full(ap) << ',' << format_full(am) << ',' << format_full(ab)
       << ',' << format_full(pr) << ',' << format_full(s) << ','
       << format_full(th) << '\n';
  };
  for (const auto& r : rows) {
    emit("equilibrium", to_string(r.phase_label), r, r.x, r.rho, r.alpha_plus,
         r.alpha_minus, r.alpha_b, r.pressure, r.entropy_density,
         r.thermal_density);
    for (const auto& c : r.candidates) {
      emit(to_string(c.branch), to_string(phase_of(c.branch)), r, c.x, c.rho,
           c.alpha_plus, c.alpha_minus, c.alpha_b, c.pressure,
           c.entropy_density, c.thermal_density);
    }
  }
}

inline nlohmann::json to_json(const CriticalSet& cs) {
  return nlohmann::json{
      {"epsilon", cs.epsilon},
      {"x0", cs.x0},
      {"mu0", cs.mu0},
      {"mu1", cs.mu1},
      {"mu2", cs.mu2},
      {"mu_c1", cs.mu_c1},
      {"mu_c2", cs.mu_c2},
      {"intermediate_phase_present", cs.intermediate_phase_present},
  };
}

inline nlohmann::json to_json(const ModelParams& p) {
  return nlohmann::json{
      {"beta", p.beta},       {"lambda", p.lambda},
      {"omega", p.omega},     {"g", p.g},
      {"epsilon", p.epsilon}, {"mass", p.mass},
      {"nu", p.nu},           {"series_tol", p.series_tol},
      {"eta", p.eta},
  };
}

/// Structured output for critical sets. Non-finite thresholds (a branch
/// that never exists) serialize as JSON null.
inline void write_critical_json(std::ostream& os, const ModelParams& params,
                                const std::vector<CriticalSet>& sets) {
  nlohmann::json doc;
  doc["params"] = to_json(params);
  doc["critical_sets"] = nlohmann::json::array();
  for (const auto& cs : sets) doc["critical_sets"].push_back(to_json(cs));
  os << doc.dump(2) << '\n';
}

}  // namespace dickebec

#endif  // DICKEBEC_SWEEP_HPP
