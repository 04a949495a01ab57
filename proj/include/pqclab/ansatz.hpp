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

#include <string>
#include <vector>

#include "pqclab/linalg.hpp"

namespace pqclab {

/// Individual parameter-constraint components. The conventional modes are
/// presets: unconstrained = none, constrained = all three.
struct ConstraintSpec {
  bool shared_fields = false;   // one x and one y value across qubits per step
  bool amplitude_bound = false; // |theta| <= theta_bar via tanh reparameterization
  bool boundary_zero = false;   // first/last step transverse fields forced to zero

  static ConstraintSpec unconstrained() { return {false, false, false}; }
  static ConstraintSpec constrained() { return {true, true, true}; }
  bool any() const { return shared_fields || amplitude_bound || boundary_zero; }
};

/// Control model: N qubits driven by variable transverse x/y fields with
/// fixed longitudinal z fields and zz couplings, evolved for M steps of
/// duration tau with spatial splitting order q in {1, 2}.
struct NmrModel {
  int n = 1;
  int m = 1;
  double tau = 1.0;
  int q = 2;
  ConstraintSpec constraints;
  Eigen::MatrixXd j;       // n x n, upper triangle (i < j) used, rad/s
  Eigen::VectorXd h;       // length n, rad/s
  double theta_bar = 1.0;  // rad/s

  Eigen::Index dim() const { return Eigen::Index(1) << n; }
  int channels() const { return 2 * n; }  // x_0..x_{n-1}, y_0..y_{n-1}
  /// Free (pre-constraint) parameter count: 2M shared, 2NM otherwise.
  int free_parameters() const { return constraints.shared_fields ? 2 * m : 2 * n * m; }
  void validate() const;
};

/// Field values per (time step, control channel) together with the raw
/// optimization variables they were produced from.
struct ParameterTrajectory {
  Eigen::MatrixXd fields;  // m x 2n, rad/s, post-constraint
  Eigen::VectorXd raw;     // free parameters, length model.free_parameters()
  ConstraintSpec constraints;
  int n = 0;
  int m = 0;
  double theta_bar = 0.0;
};

/// One Hamiltonian term: Hermitian operator embedded in the full space with
/// its coefficient source (a trajectory channel for variable terms, a fixed
/// value for z/zz terms).
struct Generator {
  std::string label;
  ComplexMatrix op;
  bool variable = false;
  int channel = -1;          // fields column for variable terms
  double fixed_value = 0.0;  // rad/s for fixed terms
};

/// Ordered generator list; the order is frozen (all x, all y, all z, all zz
/// by ascending site index) because it defines the splitting product order.
struct GeneratorSet {
  std::vector<Generator> items;
  int n = 0;
  Eigen::Index dim = 0;
};

/// One exponential factor of a layer: generator index and the 1/q scaling.
struct LayerFactor {
  int generator = 0;
  double scale = 1.0;
};

GeneratorSet build_generators(const NmrModel& model);

/// Factor sequence of a single layer in application order (first entry acts
/// on the state first). q=2 appends the reversed sequence at half scale.
std::vector<LayerFactor> layer_factors(const NmrModel& model, const GeneratorSet& gens);

/// Coefficient of a factor's generator for the given per-step fields.
double factor_coefficient(const Generator& gen, const Eigen::RowVectorXd& step_fields);

/// Unitary of one layer for the given per-step fields (length 2n).
ComplexMatrix layer_unitary(const NmrModel& model, const GeneratorSet& gens,
                            const Eigen::RowVectorXd& step_fields);

/// Summed layer Hamiltonian (used by exactness oracles).
ComplexMatrix layer_hamiltonian(const NmrModel& model, const GeneratorSet& gens,
                                const Eigen::RowVectorXd& step_fields);

/// Expands raw optimization variables into per-step fields, applying the
/// sharing, tanh bounding and boundary-zero components that are enabled.
ParameterTrajectory apply_constraints(const Eigen::VectorXd& raw, const NmrModel& model);

/// Uniform random knot values on a coarse grid (ceil(m/8) knots), cubic
/// interpolated across the m steps, then constraint-mapped.
ParameterTrajectory init_parameters(const NmrModel& model, RngStream& rng);

/// Pulls per-step channel values back out of a trajectory in raw layout
/// (inverse of the sharing expansion; bounding is not inverted).
Eigen::VectorXd extract_raw_layout(const ParameterTrajectory& traj);

/// Chain rule from field-space partials (m x 2n) to raw-parameter partials:
/// shared fields sum per-qubit terms, the tanh bound multiplies by its
/// derivative, boundary steps contribute zero.
Eigen::VectorXd chain_rule_to_raw(const ParameterTrajectory& traj, const Eigen::MatrixXd& field_grad);

}  // namespace pqclab
