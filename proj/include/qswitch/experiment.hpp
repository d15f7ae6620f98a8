// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The measurement side of the simulator. A completely depolarizing qubit
// channel is realized experimentally as a uniform random draw from the four
// Pauli insertions, so an N-channel switch run decomposes into 4^N
// deterministic "configurations". This module enumerates those
// configurations, simulates Poisson photon counting against a six-state
// tomography basis, reconstructs the conditional state by linear inversion,
// and attaches Monte Carlo error bars to the output fidelity.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/qmath.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/switch.hpp"

namespace qsw {

// One Pauli insertion per channel slot.
using PauliConfig = std::vector<PauliIndex>;

// All 4^n Pauli configurations in lexicographic order; the leftmost slot is
// the most significant digit, so n=2 runs II, IX, IY, IZ, XI, ...
inline std::vector<PauliConfig> enumerate_configs(int n) {
  if (n < 1 || n > 8) throw validation_error("enumerate_configs: n must be in 1..8");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  std::vector<PauliConfig> configs;
  configs.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    PauliConfig config(n);
    std::size_t rest = code;
    for (int slot = n - 1; slot >= 0; --slot) {
      config[slot] = pauli_index(static_cast<int>(rest % 4));
      rest /= 4;
    }
    configs.push_back(std::move(config));
  }
  return configs;
}

inline std::string config_label(const PauliConfig& config) {
  std::string out;
  for (PauliIndex p : config) out += pauli_label(p);
  return out;
}

// Re<s|m|s>: expectation value of an operator in a pure state.
inline double state_expectation(const StateVector& s, const ComplexMatrix& m) {
  if (m.rows() != s.dim() || m.cols() != s.dim()) {
    throw dimension_error("state_expectation: dimension mismatch");
  }
  cplx acc{};
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) acc += std::conj(s[i]) * m(i, j) * s[j];
  return acc.real();
}

// Qubit tomography basis: six pure states whose consecutive pairs (2k, 2k+1)
// must each resolve the identity, i.e. form a complete orthonormal basis.
struct ProjectorState {
  std::string label;
  StateVector state;
};

inline constexpr int kProjectorCount = 6;

struct MeasurementBasis {
  explicit MeasurementBasis(std::array<ProjectorState, kProjectorCount> projectors)
      : projectors_(std::move(projectors)) {
    for (int pair = 0; pair < kProjectorCount / 2; ++pair) {
      const ComplexMatrix sum = projectors_[2 * pair].state.projector() +
                                projectors_[2 * pair + 1].state.projector();
      const int d = projectors_[2 * pair].state.dim();
      if (!approx_equal(sum, ComplexMatrix::identity(d), tol::validation)) {
        throw validation_error("MeasurementBasis: projector pair does not resolve identity");
      }
    }
  }

  const ProjectorState& projector(int j) const { return projectors_[j]; }

 private:
  std::array<ProjectorState, kProjectorCount> projectors_;
};

// The standard six-state basis in the order 0, 1, D, A, R, L: eigenstates of
// Z, X and Y. All count tables below index their columns in this order.
inline const MeasurementBasis& six_state_basis() {
  static const MeasurementBasis basis{{{{"0", StateVector::basis(2, 0)},
                                        {"1", StateVector::basis(2, 1)},
                                        {"D", ket_diag()},
                                        {"A", ket_antidiag()},
                                        {"R", ket_right()},
                                        {"L", ket_left()}}}};
  return basis;
}

// Runs one deterministic Pauli configuration through the switch: channel slot
// i carries the unitary insertion config[i], and the same control state is
// used for preparation and post-selection.
inline ConditionalOutcome config_outcome(const PauliConfig& config, const OrderSet& orders,
                                         const DensityMatrix& rho, const StateVector& control) {
  if (static_cast<int>(config.size()) != orders.n) {
    throw dimension_error("config_outcome: configuration length differs from order length");
  }
  if (rho.dim() != 2) throw dimension_error("config_outcome: Pauli insertions need a qubit");
  std::vector<KrausChannel> channels;
  channels.reserve(config.size());
  for (PauliIndex p : config) {
    channels.push_back(unitary_channel(pauli(p), std::string(1, pauli_label(p))));
  }
  return run_switch(SwitchSpec(std::move(channels), orders, control, control), rho);
}

inline std::vector<ConditionalOutcome> all_config_outcomes(const std::vector<PauliConfig>& configs,
                                                           const OrderSet& orders,
                                                           const DensityMatrix& rho,
                                                           const StateVector& control) {
  if (configs.empty()) throw validation_error("all_config_outcomes: empty configuration list");
  std::vector<ConditionalOutcome> outcomes;
  outcomes.reserve(configs.size());
  for (const PauliConfig& config : configs) {
    outcomes.push_back(config_outcome(config, orders, rho, control));
  }
  return outcomes;
}

// Uniform-weight average of conditional outcomes. Feeding it all 4^n Pauli
// configurations reproduces the depolarizing-channel switch output exactly:
// the missing 1/d^2 Kraus weights reappear as the 1/4^n mixture weight.
inline ConditionalOutcome average_outcomes(const std::vector<ConditionalOutcome>& outcomes) {
  if (outcomes.empty()) throw validation_error("average_outcomes: nothing to average");
  const int d = outcomes.front().unnormalized.rows();
  ConditionalOutcome avg;
  avg.unnormalized = ComplexMatrix(d, d);
  double p = 0.0;
  for (const ConditionalOutcome& o : outcomes) {
    avg.unnormalized += o.unnormalized;
    p += o.probability;
  }
  avg.unnormalized = avg.unnormalized / double(outcomes.size());
  p /= double(outcomes.size());
  avg.probability = std::min(std::max(p, 0.0), 1.0);
  if (avg.probability > tol::zero_probability) {
    avg.normalized = DensityMatrix(avg.unnormalized / avg.probability);
  }
  return avg;
}

inline ConditionalOutcome accumulate_configs(const std::vector<PauliConfig>& configs,
                                             const OrderSet& orders, const DensityMatrix& rho,
                                             const StateVector& control) {
  if (configs.empty()) throw validation_error("accumulate_configs: empty configuration list");
  return average_outcomes(all_config_outcomes(configs, orders, rho, control));
}

// Simulated photon counting: one Poisson count per (configuration, projector)
// cell, each config measured for the same wall-clock slot as on the chip.
// The expected count folds the post-selection probability in via the
// unnormalized state: rate * seconds * <P|rho_un|P> equals
// rate * seconds * p_config * <P|rho_normalized|P>.
struct TomographyDataset {
  int n = 0;                         // channel count; counts has 4^n rows
  double shots_per_projector = 0.0;  // rate * seconds, the expected-count scale
  std::uint64_t seed = 0;
  // Row c is the configuration at index c of enumerate_configs(n); column j
  // is projector j of the six-state basis.
  std::vector<std::array<std::uint64_t, kProjectorCount>> counts;
};

inline TomographyDataset simulate_counts(const std::vector<ConditionalOutcome>& outcomes,
                                         const MeasurementBasis& basis, double rate_hz,
                                         double seconds, std::uint64_t seed) {
  if (!(rate_hz > 0.0) || !std::isfinite(rate_hz)) {
    throw validation_error("simulate_counts: rate must be positive");
  }
  if (!(seconds > 0.0) || !std::isfinite(seconds)) {
    throw validation_error("simulate_counts: integration time must be positive");
  }
  int n = 0;
  std::size_t full = 1;
  while (full < outcomes.size() && n < 8) {
    full *= 4;
    ++n;
  }
  if (n < 1 || full != outcomes.size()) {
    throw validation_error("simulate_counts: need all 4^n configuration outcomes");
  }

  TomographyDataset data;
  data.n = n;
  data.shots_per_projector = rate_hz * seconds;
  data.seed = seed;
  data.counts.resize(outcomes.size());
  for (std::size_t c = 0; c < outcomes.size(); ++c) {
    for (int j = 0; j < kProjectorCount; ++j) {
      const double born = state_expectation(basis.projector(j).state, outcomes[c].unnormalized);
      const double mean = data.shots_per_projector * std::max(born, 0.0);
      SplitMix64 rng(substream_key(seed, {static_cast<std::uint64_t>(c),
                                          static_cast<std::uint64_t>(j)}));
      data.counts[c][j] = poisson_sample(mean, rng);
    }
  }
  return data;
}

// Linear-inversion qubit tomography over the pooled counts, followed by a
// projection back onto the physical state space (clip negative eigenvalues,
// renormalize the trace). Needs at least one count in each of the three
// measurement bases.
inline DensityMatrix tomography_reconstruct(const TomographyDataset& data) {
  if (data.counts.empty()) throw insufficient_data_error("tomography: dataset is empty");
  std::array<double, kProjectorCount> totals{};
  for (const auto& row : data.counts) {
    for (int j = 0; j < kProjectorCount; ++j) totals[j] += double(row[j]);
  }
  const double nz = totals[0] + totals[1];  // 0/1
  const double nx = totals[2] + totals[3];  // D/A
  const double ny = totals[4] + totals[5];  // R/L
  if (nz <= 0.0 || nx <= 0.0 || ny <= 0.0) {
    throw insufficient_data_error("tomography: a measurement basis has zero total counts");
  }
  const double bx = (totals[2] - totals[3]) / nx;
  const double by = (totals[4] - totals[5]) / ny;
  const double bz = (totals[0] - totals[1]) / nz;

  const ComplexMatrix linear =
      0.5 * (ComplexMatrix::identity(2) + bx * pauli(PauliIndex::X) +
             by * pauli(PauliIndex::Y) + bz * pauli(PauliIndex::Z));

  // Outside the Bloch ball the linear estimate is unphysical; clip its
  // spectrum and renormalize. The trace stays positive because at least one
  // eigenvalue of a unit-trace Hermitian 2x2 matrix is >= 1/2.
  const EigenSystem es = eig_herm(linear);
  std::array<double, 2> lam{};
  double norm = 0.0;
  for (int k = 0; k < 2; ++k) {
    lam[k] = std::max(es.eigenvalues[k], 0.0);
    norm += lam[k];
  }
  ComplexMatrix rho(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cplx acc{};
      for (int k = 0; k < 2; ++k) {
        acc += es.eigenvectors(i, k) * (lam[k] / norm) * std::conj(es.eigenvectors(j, k));
      }
      rho(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(rho));
}

// Uhlmann fidelity F(a, b) = (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0,1]
// against rounding. For pure a = |psi><psi| this reduces to <psi|b|psi>.
inline double uhlmann_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw dimension_error("uhlmann_fidelity: dimension mismatch");
  const ComplexMatrix sa = herm_sqrt(a.matrix());
  const EigenSystem es = eig_herm(sa * b.matrix() * sa);
  double sum = 0.0;
  for (double lam : es.eigenvalues) sum += std::sqrt(std::max(lam, 0.0));
  return std::min(std::max(sum * sum, 0.0), 1.0);
}

struct FidelityEstimate {
  double mean = 0.0;    // mean fidelity over the Monte Carlo resamples
  double stddev = 0.0;  // sample standard deviation over the same resamples
  int trials = 0;
};

// Parametric bootstrap: each trial resamples every counting cell from a
// Poisson law whose mean is the observed count, re-runs the reconstruction,
// and re-scores the fidelity against the target. Cells draw from substreams
// keyed by (trial, config, projector), so the estimate is seed-deterministic
// and independent of evaluation order.
inline FidelityEstimate monte_carlo_fidelity(const TomographyDataset& data,
                                             const DensityMatrix& target, int trials,
                                             std::uint64_t seed) {
  if (trials < 2) throw validation_error("monte_carlo_fidelity: need at least 2 trials");
  FidelityEstimate est;
  est.trials = trials;

  double mean = 0.0;
  double m2 = 0.0;
  TomographyDataset resampled = data;
  for (int t = 0; t < trials; ++t) {
    for (std::size_t c = 0; c < data.counts.size(); ++c) {
      for (int j = 0; j < kProjectorCount; ++j) {
        SplitMix64 rng(substream_key(seed, {static_cast<std::uint64_t>(t),
                                            static_cast<std::uint64_t>(c),
                                            static_cast<std::uint64_t>(j)}));
        resampled.counts[c][j] = poisson_sample(double(data.counts[c][j]), rng);
      }
    }
    const double f = uhlmann_fidelity(tomography_reconstruct(resampled), target);
    const double delta = f - mean;
    mean += delta / double(t + 1);
    m2 += delta * (f - mean);
  }
  est.mean = mean;
  est.stddev = std::sqrt(std::max(m2, 0.0) / double(trials - 1));
  return est;
}

}  // namespace qsw
