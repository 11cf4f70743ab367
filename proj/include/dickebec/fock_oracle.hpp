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

#ifndef DICKEBEC_FOCK_ORACLE_HPP
#define DICKEBEC_FOCK_ORACLE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dickebec/model.hpp"

namespace dickebec {

/// Basis block of the zero-mode model (two condensate modes a+, a- and one
/// photon mode b) labelled by the two conserved quantities
///   N = n+ + n-   (total boson number)
///   K = n+ + m    (boson-photon exchange charge)
/// The interaction a+* a- b moves (n+, n-, m) -> (n+ + 1, n- - 1, m - 1),
/// preserving both.
struct FockSector {
  int n_total;
  int k_total;
  std::vector<std::array<int, 3>> basis;  ///< (n+, n-, m), n+ ascending
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Enumerates the (N, K) sector intersected with the photon cutoff m <= m_max.
inline FockSector make_sector(int n_total, int k_total, int m_max) {
  FockSector s{n_total, k_total, {}};
  const int lo = std::max(0, k_total - m_max);
  const int hi = std::min(n_total, k_total);
  for (int np = lo; np <= hi; ++np) {
    s.basis.push_back({np, n_total - np, k_total - np});
  }
  return s;
}

/// Finite-volume setup for the exact grand-canonical trace. The params may
/// deliberately violate the stability bound (via unchecked_params) to probe
/// the unstable regime at finite truncation.
struct OracleConfig {
  double volume;
  int n_max;  ///< boson truncation: N <= n_max
  int m_max;  ///< photon truncation: m <= m_max
  double beta;
  double mu;
  ModelParams params;
};

/// Dense symmetric matrix of H - mu N restricted to one sector:
/// diagonal   eps (n+ - n-) + omega m + lambda N^2 / (2V) - mu N
/// off-diag   g / (2 sqrt V) * sqrt((n+ + 1) n- m) between (n+, n-, m) and
///            (n+ + 1, n- - 1, m - 1), i.e. adjacent basis entries.
inline Eigen::MatrixXd build_sector_hamiltonian(const FockSector& sector,
                                                const OracleConfig& cfg) {
  const int d = sector.dimension();
  const ModelParams& p = cfg.params;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  const double n_tot = sector.n_total;
  const double mean_field =
      0.5 * p.lambda / cfg.volume * n_tot * n_tot - cfg.mu * n_tot;
  for (int i = 0; i < d; ++i) {
    const auto [np, nm, m] = sector.basis[i];
    h(i, i) = p.epsilon * (np - nm) + p.omega * m + mean_field;
    if (i + 1 < d) {
      // basis[i+1] is (np+1, nm-1, m-1) by construction
      const double amp = 0.5 * p.g / std::sqrt(cfg.volume) *
                         std::sqrt(double(np + 1) * double(nm) * double(m));
      h(i, i + 1) = amp;
      h(i + 1, i) = amp;
    }
  }
  return h;
}

/// Outcome of a finite-volume trace. `cut_weight_ratio` is the largest
/// diagonal Boltzmann weight among the truncation-boundary states
/// (N = n_max or m = m_max) relative to the partition sum; the truncation
/// is certified when it is below 1e-12.
struct FiniteVolumeResult {
  double pressure;           ///< p_V = ln(Z) / (beta V)
  double log_partition;      ///< ln Z
  double cut_weight_ratio;   ///< max boundary weight / Z
  std::int64_t states;       ///< total states traced
};

/// Exact grand-canonical trace over all sectors via dense symmetric
/// eigendecomposition per sector, accumulated in log space.
inline FiniteVolumeResult finite_volume_trace(const OracleConfig& cfg) {
  if (!(cfg.volume > 0.0) || cfg.n_max < 0 || cfg.m_max < 0) {
    throw std::domain_error("finite_volume_trace: bad volume or cutoffs");
  }
  const double beta = cfg.beta;
  double shift = -std::numeric_limits<double>::infinity();  // max of -beta E
  double sum = 0.0;                                         // sum e^{-bE-shift}
  double boundary_max = -std::numeric_limits<double>::infinity();
  std::int64_t states = 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  auto accumulate = [&](double log_w) {
    if (log_w > shift) {
      sum = sum * std::exp(shift - log_w) + 1.0;
      shift = log_w;
    } else {
      sum += std::exp(log_w - shift);
    }
  };
  for (int n = 0; n <= cfg.n_max; ++n) {
    for (int k = 0; k <= n + cfg.m_max; ++k) {
      const FockSector sector = make_sector(n, k, cfg.m_max);
      if (sector.dimension() == 0) continue;
      const Eigen::MatrixXd h = build_sector_hamiltonian(sector, cfg);
      if (sector.dimension() == 1) {
        accumulate(-beta * h(0, 0));
      } else {
        eig.compute(h, Eigen::EigenvaluesOnly);
        for (int i = 0; i < sector.dimension(); ++i) {
          accumulate(-beta * eig.eigenvalues()[i]);
        }
      }
      states += sector.dimension();
      for (int i = 0; i < sector.dimension(); ++i) {
        const auto [np, nm, m] = sector.basis[i];
        if (n == cfg.n_max || m == cfg.m_max) {
          boundary_max = std::max(boundary_max, -beta * h(i, i));
        }
      }
    }
  }
  const double log_z = shift + std::log(sum);
  FiniteVolumeResult res;
  res.log_partition = log_z;
  res.pressure = log_z / (beta * cfg.volume);
  res.cut_weight_ratio = std::exp(boundary_max - log_z);
  res.states = states;
  return res;
}

/// Finite-volume pressure with the weight-cut certificate enforced.
inline double finite_volume_pressure(const OracleConfig& cfg,
                                     double cut_tolerance = 1e-12) {
  const FiniteVolumeResult res = finite_volume_trace(cfg);
  if (!(res.cut_weight_ratio < cut_tolerance)) {
    throw TruncationError(
        "finite_volume_pressure: boundary Boltzmann weight " +
        std::to_string(res.cut_weight_ratio) +
        " of the partition sum; raise n_max/m_max");
  }
  return res.pressure;
}

}  // namespace dickebec

#endif  // DICKEBEC_FOCK_ORACLE_HPP
