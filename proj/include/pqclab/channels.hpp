/* Copyright 2026 The pqclab Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqclab/ansatz.hpp"
#include "pqclab/linalg.hpp"

namespace pqclab {

enum class NoiseKind {
  kNone,
  kDephasing,
  kDepolarizing,
  kAmplitudeDamping,       // standard Kraus pair with damping probability gamma
  kAmplitudeDampingPaper,  // Pauli-basis table variant (see local_noise)
};

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

struct NoiseModel {
  NoiseKind kind = NoiseKind::kNone;
  double gamma = 0.0;
  bool active() const { return kind != NoiseKind::kNone && gamma > 0.0; }
};

/// Single-qubit Kraus channel. Trace preserving within 1e-12 and completely
/// positive within -1e-10 Choi eigenvalue tolerance, checked on construction.
struct KrausChannel {
  std::vector<Eigen::Matrix2cd> operators;
  void validate() const;
};

/// Single-qubit linear map as a transfer matrix on density-matrix entries:
/// out(ar, ac) = sum_{br, bc} t(ar + 2 ac, br + 2 bc) in(br, bc). General
/// enough for the non-trivial error components, which are trace preserving
/// but not necessarily completely positive.
struct LocalMap {
  Eigen::Matrix4cd transfer = Eigen::Matrix4cd::Identity();
};

KrausChannel local_noise(NoiseKind kind, double gamma);

LocalMap kraus_transfer(const KrausChannel& channel);
/// Adjoint (Heisenberg-picture) map O -> sum_a K_a^dagger O K_a.
LocalMap kraus_adjoint_transfer(const KrausChannel& channel);
LocalMap adjoint_map(const LocalMap& map);

/// Error component of the convex split N = (1-gamma) I + gamma K, solved as
/// K = N/gamma - (1-gamma)/gamma I. gamma = 0 is rejected (undefined).
LocalMap nontrivial_component(const KrausChannel& channel, double gamma);

/// Applies a local map on `site` of an n-qubit density matrix in place.
void apply_local_map(DensityMatrix& rho, int n, int site, const LocalMap& map);

/// Depth-M composition of layer unitaries interlaced with local noise after
/// every layer; K = n*m possible error sites.
struct LayeredChannel {
  NmrModel model;
  GeneratorSet generators;
  NoiseModel noise;
  ParameterTrajectory trajectory;

  int error_sites() const { return model.n * model.m; }
  bool noiseless() const { return !noise.active(); }
};

LayeredChannel make_channel(const NmrModel& model, const NoiseModel& noise,
                            const ParameterTrajectory& trajectory);

/// Evolves sigma through all layers (unitary conjugation then local noise on
/// every qubit). Output stays trace-1 PSD to roundoff.
DensityMatrix evolve(const LayeredChannel& channel, const DensityMatrix& sigma);

/// Product of the layer unitaries with noise ignored.
ComplexMatrix evolve_unitary(const LayeredChannel& channel);

/// One bit per (step, qubit) site, site index s = step * n + qubit.
struct ErrorPattern {
  std::vector<std::uint8_t> bits;
  int weight() const;
};

/// Evolution with the non-trivial error component pinned at the set sites
/// and the identity (not the full noise channel) elsewhere.
DensityMatrix pinned_channel(const LayeredChannel& channel, const ErrorPattern& pattern,
                             const DensityMatrix& sigma);

struct ErrorCountDistribution {
  int sites = 0;    // K
  double gamma = 0.0;
  double mean() const { return sites * gamma; }
  double variance() const { return sites * gamma * (1.0 - gamma); }
};

double error_count_pmf(const ErrorCountDistribution& dist, int k);       // exact binomial
double error_count_gaussian(const ErrorCountDistribution& dist, int k);  // large-K limit
double error_count_poisson(const ErrorCountDistribution& dist, int k);   // rare-error limit

}  // namespace pqclab
