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

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "dickebec/dickebec.hpp"

namespace {

using namespace dickebec;

struct ParamOverrides {
  std::optional<double> beta, lambda, omega, g, epsilon, mass, series_tol;
  std::optional<int> nu;
};

RawParams parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  RawParams raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      line.erase(pos);
    }
    for (char& c : line) {
      if (c == '=') c = ' ';
    }
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;  // blank line
    double value;
    if (!(ls >> value)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key value'");
    }
    if (key == "beta") raw.beta = value;
    else if (key == "lambda") raw.lambda = value;
    else if (key == "omega") raw.omega = value;
    else if (key == "g") raw.g = value;
    else if (key == "epsilon") raw.epsilon = value;
    else if (key == "mass") raw.mass = value;
    else if (key == "nu") raw.nu = static_cast<int>(value);
    else if (key == "series_tol") raw.series_tol = value;
    else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
  return raw;
}

RawParams load_params(const std::string& config_path,
                      const ParamOverrides& ov) {
  RawParams raw = parse_config(config_path);
  if (ov.beta) raw.beta = *ov.beta;
  if (ov.lambda) raw.lambda = *ov.lambda;
  if (ov.omega) raw.omega = *ov.omega;
  if (ov.g) raw.g = *ov.g;
  if (ov.epsilon) raw.epsilon = *ov.epsilon;
  if (ov.mass) raw.mass = *ov.mass;
  if (ov.nu) raw.nu = *ov.nu;
  if (ov.series_tol) raw.series_tol = *ov.series_tol;
  return raw;
}

void add_param_flags(CLI::App* cmd, std::string& config_path,
                     ParamOverrides& ov) {
  cmd->add_option("--config", config_path, "flat key-value parameter file")
      ->required();
  cmd->add_option("--beta", ov.beta, "override inverse temperature");
  cmd->add_option("--lambda", ov.lambda, "override mean-field coupling");
  cmd->add_option("--omega", ov.omega, "override photon frequency");
  cmd->add_option("--g", ov.g, "override matter-light coupling");
  cmd->add_option("--epsilon", ov.epsilon, "override level splitting");
  cmd->add_option("--mass", ov.mass, "override boson mass");
  cmd->add_option("--nu", ov.nu, "override spatial dimension");
  cmd->add_option("--series-tol", ov.series_tol,
                  "override polylog series tolerance");
}

nlohmann::json state_to_json(const EquilibriumState& st, double mu) {
  return nlohmann::json{
      {"mu", mu},
      {"phase", to_string(st.phase_label)},
      {"branch", to_string(st.solution.branch)},
      {"x", st.solution.x},
      {"rho", st.solution.rho},
      {"alpha_plus", st.solution.alpha_plus},
      {"alpha_minus", st.solution.alpha_minus},
      {"alpha_b", st.solution.alpha_b},
      {"pressure", st.solution.pressure},
      {"condensate_density_plus", st.condensate_density_plus},
      {"condensate_density_minus", st.condensate_density_minus},
      {"photon_density", st.photon_density},
      {"thermal_density", st.thermal_density},
      {"entropy_density", st.entropy_density},
      {"free_energy_density", st.free_energy_density},
  };
}

int run_solve(const RawParams& raw, double mu, const std::string& out) {
  const ModelParams p = validate_params(raw);
  EquilibriumSolver solver(p);
  const EquilibriumState st = solver.solve(mu);
  std::cout << "phase=" << to_string(st.phase_label) << '\n'
            << "mu=" << format_human(mu) << '\n'
            << "x=" << format_human(st.solution.x) << '\n'
            << "rho=" << format_human(st.solution.rho) << '\n'
            << "alpha_plus=" << format_human(st.solution.alpha_plus) << '\n'
            << "alpha_minus=" << format_human(st.solution.alpha_minus) << '\n'
            << "alpha_b=" << format_human(st.solution.alpha_b) << '\n'
            << "pressure=" << format_human(st.solution.pressure) << '\n'
            << "entropy_density=" << format_human(st.entropy_density) << '\n'
            << "thermal_density=" << format_human(st.thermal_density) << '\n';
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    nlohmann::json doc;
    doc["params"] = to_json(p);
    doc["state"] = state_to_json(st, mu);
    os << doc.dump(2) << '\n';
  }
  return 0;
}

int run_sweep(const RawParams& raw, double mu_min, double mu_max, int steps,
              const std::string& out) {
  if (steps < 2) throw std::runtime_error("sweep: --steps must be >= 2");
  if (!(mu_min < mu_max)) {
    throw std::runtime_error("sweep: require --mu-min < --mu-max");
  }
  const ModelParams p = validate_params(raw);
  EquilibriumSolver solver(p);
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = mu_min + (mu_max - mu_min) * i / double(steps - 1);
  }
  const auto rows = sweep_mu(solver, grid);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  write_sweep_csv(os, rows);
  std::cout << "wrote " << out << " (" << rows.size() << " grid points)\n";
  const TransitionReport rep = solver.transition_report();
  for (const auto& t : rep.transitions) {
    if (t.mu < mu_min || t.mu > mu_max) continue;
    std::cout << "transition at mu=" << format_human(t.mu) << ": "
              << to_string(t.left_phase) << " -> " << to_string(t.right_phase)
              << (t.first_order ? " (first order, delta_rho="
                                : " (continuous, delta_rho=")
              << format_human(t.delta_rho) << ")\n";
  }
  return 0;
}

int run_critical(const RawParams& raw, const std::vector<double>& eps_list,
                 const std::string& out) {
  const ModelParams p = validate_params(raw);
  const auto sets = phase_boundary_map(p, eps_list);
  std::cout << "epsilon x0 mu0 mu1 mu2 mu_c1 mu_c2 intermediate\n";
  for (const auto& cs : sets) {
    std::cout << format_human(cs.epsilon) << ' ' << format_human(cs.x0) << ' '
              << format_human(cs.mu0) << ' ' << format_human(cs.mu1) << ' '
              << format_human(cs.mu2) << ' ' << format_human(cs.mu_c1) << ' '
              << format_human(cs.mu_c2) << ' '
              << (cs.intermediate_phase_present ? "yes" : "no") << '\n';
  }
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    write_critical_json(os, p, sets);
  }
  return 0;
}

int run_oracle(const RawParams& raw, double mu, std::vector<double> volumes,
               std::optional<int> nmax, std::optional<int> mmax,
               const std::string& out) {
  const ModelParams p = validate_params(raw);
  EquilibriumSolver zero_mode(p, ThermalMode::ZeroModeOnly);
  const EquilibriumState var = zero_mode.solve(mu);
  const double p_var = var.solution.pressure;
  std::cout << "zero-mode variational pressure P=" << format_human(p_var)
            << " (phase " << to_string(var.phase_label) << ")\n";
  std::cout << "V n_max m_max p_V gap cut_ratio\n";
  std::ostringstream csv;
  csv << "V,n_max,m_max,p_V,P_var,gap,cut_ratio\n";
  for (double v : volumes) {
    OracleConfig cfg;
    cfg.volume = v;
    cfg.beta = p.beta;
    cfg.mu = mu;
    cfg.params = p;
    if (nmax) {
      cfg.n_max = *nmax;
    } else {
      const double mean_n = var.solution.rho * v;
      cfg.n_max = static_cast<int>(
          std::ceil(mean_n + std::sqrt(88.0 * v / (p.beta * p.lambda)) + 8));
    }
    if (mmax) {
      cfg.m_max = *mmax;
    } else {
      const double mean_m = var.photon_density * v;
      cfg.m_max = static_cast<int>(std::ceil(
          mean_m + 6.0 * std::sqrt(mean_m + 1.0) + 46.0 / (p.beta * p.omega)));
    }
    const FiniteVolumeResult res = finite_volume_trace(cfg);
    if (!(res.cut_weight_ratio < 1e-12)) {
      throw TruncationError(
          "oracle: truncation not certified at V=" + format_human(v) +
          " (cut ratio " + format_human(res.cut_weight_ratio) +
          "); raise --nmax/--mmax");
    }
    std::cout << format_human(v) << ' ' << cfg.n_max << ' ' << cfg.m_max << ' '
              << format_human(res.pressure) << ' '
              << format_human(p_var - res.pressure) << ' '
              << format_human(res.cut_weight_ratio) << '\n';
    csv << format_full(v) << ',' << cfg.n_max << ',' << cfg.m_max << ','
        << format_full(res.pressure) << ',' << format_full(p_var) << ','
        << format_full(p_var - res.pressure) << ','
        << format_full(res.cut_weight_ratio) << '\n';
  }
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Equilibrium thermodynamics of a stabilized Dicke-type model: two "
      "internal boson species coupled to a single photon mode on top of a "
      "mean-field Bose gas"};
  app.require_subcommand(1);

  std::string cfg_solve, cfg_sweep, cfg_critical, cfg_oracle;
  ParamOverrides ov_solve, ov_sweep, ov_critical, ov_oracle;

  auto* solve = app.add_subcommand("solve", "equilibrium state at one mu");
  add_param_flags(solve, cfg_solve, ov_solve);
  double solve_mu = 0.0;
  std::string solve_out;
  solve->add_option("--mu", solve_mu, "chemical potential")->required();
  solve->add_option("--out", solve_out, "optional JSON output file");

  auto* sweep = app.add_subcommand("sweep", "equilibrium over a mu grid");
  add_param_flags(sweep, cfg_sweep, ov_sweep);
  double mu_min = 0.0, mu_max = 0.0;
  int steps = 0;
  std::string sweep_out = "sweep.csv";
  sweep->add_option("--mu-min", mu_min, "grid start")->required();
  sweep->add_option("--mu-max", mu_max, "grid end")->required();
  sweep->add_option("--steps", steps, "number of grid points (>= 2)")
      ->required();
  sweep->add_option("--out", sweep_out, "CSV output file");

  auto* critical =
      app.add_subcommand("critical", "critical chemical potentials vs epsilon");
  add_param_flags(critical, cfg_critical, ov_critical);
  std::vector<double> eps_list;
  std::string critical_out;
  critical
      ->add_option("--epsilon-list", eps_list,
                   "comma-separated level splittings")
      ->required()
      ->delimiter(',');
  critical->add_option("--out", critical_out, "optional JSON output file");

  auto* oracle = app.add_subcommand(
      "oracle", "finite-volume Fock-space trace vs zero-mode variational "
                "pressure");
  add_param_flags(oracle, cfg_oracle, ov_oracle);
  double oracle_mu = 0.0;
  std::vector<double> volumes{4, 8, 16, 32, 64};
  std::optional<int> nmax, mmax;
  std::string oracle_out;
  oracle->add_option("--mu", oracle_mu, "chemical potential")->required();
  oracle->add_option("--volumes", volumes, "comma-separated volumes")
      ->delimiter(',');
  oracle->add_option("--nmax", nmax, "boson truncation (default: auto per V)");
  oracle->add_option("--mmax", mmax, "photon truncation (default: auto per V)");
  oracle->add_option("--out", oracle_out, "optional CSV output file");

  try {
    app.parse(argc, argv);
    if (*solve) {
      return run_solve(load_params(cfg_solve, ov_solve), solve_mu, solve_out);
    }
    if (*sweep) {
      return run_sweep(load_params(cfg_sweep, ov_sweep), mu_min, mu_max, steps,
                       sweep_out);
    }
    if (*critical) {
      return run_critical(load_params(cfg_critical, ov_critical), eps_list,
                          critical_out);
    }
    if (*oracle) {
      return run_oracle(load_params(cfg_oracle, ov_oracle), oracle_mu, volumes,
                        nmax, mmax, oracle_out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const dickebec::StabilityViolation& e) {
    std::cerr << "stability violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
