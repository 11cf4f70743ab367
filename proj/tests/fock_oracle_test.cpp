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

#include "dickebec/fock_oracle.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <Eigen/Dense>

#include "dickebec/equilibrium.hpp"
#include "gtest/gtest.h"

using namespace dickebec;

namespace {

OracleConfig base_config() {
  RawParams raw;
  raw.beta = raw.mass = raw.lambda = raw.omega = raw.g = 1.0;
  raw.epsilon = 0.2;
  raw.nu = 3;
  OracleConfig cfg;
  cfg.volume = 8.0;
  cfg.n_max = 40;
  cfg.m_max = 40;
  cfg.beta = 1.0;
  cfg.mu = 2.0;
  cfg.params = validate_params(raw);
  return cfg;
}

TEST(FockSector, VacuumAndSingleParticle) {
  const OracleConfig cfg = base_config();
  const FockSector vac = make_sector(0, 0, cfg.m_max);
  ASSERT_EQ(vac.dimension(), 1);
  const Eigen::MatrixXd h0 = build_sector_hamiltonian(vac, cfg);
  EXPECT_EQ(h0(0, 0), 0.0);

  // N=1, K=0: only (0, 1, 0); energy -eps + lambda/(2V) - mu
  const FockSector s10 = make_sector(1, 0, cfg.m_max);
  ASSERT_EQ(s10.dimension(), 1);
  EXPECT_EQ(s10.basis[0], (std::array<int, 3>{0, 1, 0}));
  const Eigen::MatrixXd h1 = build_sector_hamiltonian(s10, cfg);
  const ModelParams& p = cfg.params;
  EXPECT_DOUBLE_EQ(h1(0, 0),
                   -p.epsilon + 0.5 * p.lambda / cfg.volume - cfg.mu);
}

TEST(FockSector, TwoByTwoClosedForm) {
  const OracleConfig cfg = base_config();
  const ModelParams& p = cfg.params;
  const FockSector s = make_sector(1, 1, cfg.m_max);
  ASSERT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.basis[0], (std::array<int, 3>{0, 1, 1}));
  EXPECT_EQ(s.basis[1], (std::array<int, 3>{1, 0, 0}));
  const Eigen::MatrixXd h = build_sector_hamiltonian(s, cfg);
  const double off = 0.5 * p.g / std::sqrt(cfg.volume);
  EXPECT_DOUBLE_EQ(h(0, 1), off);
  const double a = h(0, 0), d = h(1, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
  const double mean = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  EXPECT_NEAR(eig.eigenvalues()[0], mean - disc, 1e-14);
  EXPECT_NEAR(eig.eigenvalues()[1], mean + disc, 1e-14);
}

TEST(FockSector, InteractionPreservesCharges) {
  // The hopping connects only adjacent basis entries inside a sector, i.e.
  // (n+, n-, m) -> (n+ + 1, n- - 1, m - 1); both N and K are unchanged.
  const OracleConfig cfg = base_config();
  const FockSector s = make_sector(6, 4, cfg.m_max);
  const Eigen::MatrixXd h = build_sector_hamiltonian(s, cfg);
  EXPECT_TRUE(h.isApprox(h.transpose(), 0.0));  // exactly symmetric
  for (int i = 0; i < s.dimension(); ++i) {
    const auto [np, nm, m] = s.basis[i];
    EXPECT_EQ(np + nm, 6);
    EXPECT_EQ(np + m, 4);
    for (int j = 0; j < s.dimension(); ++j) {
      if (std::abs(i - j) > 1) EXPECT_EQ(h(i, j), 0.0);
    }
  }
}

// The blocked trace must equal the trace over the unblocked truncated space,
// built here directly as one dense matrix over all (n+, n-, m).
TEST(FockOracle, SectorDecompositionIsExact) {
  OracleConfig cfg = base_config();
  cfg.n_max = 4;
  cfg.m_max = 4;
  cfg.volume = 2.0;
  cfg.mu = 0.3;

  std::map<std::tuple<int, int, int>, int> index;
  std::vector<std::tuple<int, int, int>> states;
  for (int np = 0; np <= cfg.n_max; ++np) {
    for (int nm = 0; np + nm <= cfg.n_max; ++nm) {
      for (int m = 0; m <= cfg.m_max; ++m) {
        index[{np, nm, m}] = static_cast<int>(states.size());
        states.emplace_back(np, nm, m);
      }
    }
  }
  const int dim = static_cast<int>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const ModelParams& p = cfg.params;
  for (int i = 0; i < dim; ++i) {
    const auto [np, nm, m] = states[i];
    const double n_tot = np + nm;
    h(i, i) = p.epsilon * (np - nm) + p.omega * m +
              0.5 * p.lambda / cfg.volume * n_tot * n_tot - cfg.mu * n_tot;
    if (nm >= 1 && m >= 1 && np + 1 + nm - 1 <= cfg.n_max) {
      const auto it = index.find({np + 1, nm - 1, m - 1});
      ASSERT_NE(it, index.end());
      const double amp = 0.5 * p.g / std::sqrt(cfg.volume) *
                         std::sqrt(double(np + 1) * double(nm) * double(m));
      h(i, it->second) += amp;
      h(it->second, i) += amp;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h,
                                                     Eigen::EigenvaluesOnly);
  double z_full = 0.0;
  for (int i = 0; i < dim; ++i) {
    z_full += std::exp(-cfg.beta * eig.eigenvalues()[i]);
  }

  const FiniteVolumeResult res = finite_volume_trace(cfg);
  EXPECT_EQ(res.states, dim);
  EXPECT_NEAR(std::exp(res.log_partition) / z_full, 1.0, 1e-12);
}

TEST(FockOracle, DecoupledModesMatchGeometricSums) {
  // g = 0 and lambda -> 0+: three independent oscillators; mu < -eps keeps
  // all of them confined.
  RawParams raw;
  raw.beta = 1.0;
  raw.lambda = 1e-12;
  raw.omega = 1.0;
  raw.g = 0.0;
  raw.epsilon = 0.2;
  OracleConfig cfg;
  cfg.volume = 4.0;
  cfg.n_max = 90;
  cfg.m_max = 90;
  cfg.beta = raw.beta;
  cfg.mu = -1.0;
  cfg.params = validate_params(raw);

  const FiniteVolumeResult res = finite_volume_trace(cfg);
  auto log_geom = [&](double energy) {
    return -std::log(1.0 - std::exp(-cfg.beta * energy));
  };
  const double expected =
      (log_geom(raw.epsilon - cfg.mu) + log_geom(-raw.epsilon - cfg.mu) +
       log_geom(raw.omega)) /
      (cfg.beta * cfg.volume);
  EXPECT_NEAR(res.pressure / expected, 1.0, 1e-9);
}

TEST(FockOracle, TruncationCertificate) {
  OracleConfig cfg = base_config();
  cfg.n_max = 12;  // far too small at mu = 2, V = 8
  cfg.m_max = 12;
  EXPECT_THROW(finite_volume_pressure(cfg), TruncationError);
  const FiniteVolumeResult res = finite_volume_trace(cfg);
  EXPECT_GE(res.cut_weight_ratio, 1e-12);
}

TEST(FockOracle, UnstableCouplingGrowsWithTruncation) {
  // lambda below g^2/(8 omega): the partition sum has no thermodynamic
  // limit; p_V keeps climbing as n_max grows.
  RawParams raw;
  raw.beta = raw.mass = raw.omega = raw.g = 1.0;
  raw.lambda = 0.115;  // bound is 0.125
  raw.epsilon = 0.0;
  OracleConfig cfg;
  cfg.volume = 4.0;
  cfg.m_max = 60;
  cfg.beta = 1.0;
  cfg.mu = 0.5;
  cfg.params = unchecked_params(raw);
  double prev = -std::numeric_limits<double>::infinity();
  for (int n_max : {10, 20, 30, 40}) {
    cfg.n_max = n_max;
    cfg.m_max = n_max + 20;
    const FiniteVolumeResult res = finite_volume_trace(cfg);
    EXPECT_GT(res.pressure, prev + 0.05) << "n_max=" << n_max;
    prev = res.pressure;
  }
}

TEST(FockOracle, ConvergesTowardZeroModeVariationalPressure) {
  const OracleConfig base = base_config();
  EquilibriumSolver zero_mode(base.params, ThermalMode::ZeroModeOnly);
  const double p_var = zero_mode.pressure(base.mu);
  EXPECT_NEAR(p_var, 2.4457142857142857, 1e-12);  // (eta+1)(mu^2/eta+eps^2)/2

  double prev_gap = std::numeric_limits<double>::infinity();
  for (double v : {4.0, 8.0, 16.0}) {
    OracleConfig cfg = base;
    cfg.volume = v;
    const double mean_n = zero_mode.solve(base.mu).solution.rho * v;
    cfg.n_max = static_cast<int>(std::ceil(mean_n + std::sqrt(88.0 * v) + 8));
    cfg.m_max = 60;
    const double p_v = finite_volume_pressure(cfg);
    const double gap = std::abs(p_var - p_v);
    EXPECT_LT(gap, prev_gap) << "V=" << v;
    prev_gap = gap;
  }
}

}  // namespace
