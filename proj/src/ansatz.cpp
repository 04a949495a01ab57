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

#include "pqclab/ansatz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pqclab {

namespace {

using Eigen::Index;

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd p;
  p << 0, 1, 1, 0;
  return p;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd p;
  p << std::complex<double>(0, 0), std::complex<double>(0, -1), std::complex<double>(0, 1),
      std::complex<double>(0, 0);
  return p;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd p;
  p << 1, 0, 0, -1;
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Embeds single-site (or two-site) operators into the full space; site 0 is
// the leftmost factor (most significant bit of the basis index).
ComplexMatrix embed(const std::vector<std::pair<int, Eigen::Matrix2cd>>& ops, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int site = 0; site < n; ++site) {
    ComplexMatrix factor = ComplexMatrix::Identity(2, 2);
    for (const auto& [s, op] : ops) {
      if (s == site) factor = op;
    }
    out = kron(out, factor);
  }
  return out;
}

// Pauli strings square to the identity, so the exponential has the exact
// two-term form cos(a) I - i sin(a) G.
ComplexMatrix involutory_rotation(const ComplexMatrix& g, double angle) {
  const Index d = g.rows();
  return std::cos(angle) * ComplexMatrix::Identity(d, d) -
         std::complex<double>(0, std::sin(angle)) * g;
}

// Natural cubic spline second derivatives (tridiagonal solve).
std::vector<double> spline_second_derivatives(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> y2(n, 0.0), u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
    const double p = sig * y2[i - 1] + 2.0;
    y2[i] = (sig - 1.0) / p;
    u[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) - (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
    u[i] = (6.0 * u[i] / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
  }
  for (std::size_t k = n - 1; k-- > 1;) {
    y2[k] = y2[k] * y2[k + 1] + u[k];
  }
  return y2;
}

double spline_eval(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& y2, double t) {
  std::size_t lo = 0, hi = x.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (hi + lo) / 2;
    if (x[mid] > t) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double h = x[hi] - x[lo];
  const double a = (x[hi] - t) / h;
  const double b = (t - x[lo]) / h;
  return a * y[lo] + b * y[hi] +
         ((a * a * a - a) * y2[lo] + (b * b * b - b) * y2[hi]) * (h * h) / 6.0;
}

}  // namespace

void NmrModel::validate() const {
  if (n < 1) throw std::invalid_argument("NmrModel: n must be >= 1");
  if (m < 1) throw std::invalid_argument("NmrModel: m must be >= 1");
  if (!(tau > 0.0)) throw std::invalid_argument("NmrModel: tau must be > 0");
  if (q != 1 && q != 2) throw std::invalid_argument("NmrModel: q must be 1 or 2");
  if (h.size() < n) throw std::invalid_argument("NmrModel: h must have at least n entries");
  if (j.rows() < n || j.cols() < n) {
    throw std::invalid_argument("NmrModel: j must be at least n x n");
  }
  if (!h.head(n).allFinite() || !j.topLeftCorner(n, n).allFinite()) {
    throw std::invalid_argument("NmrModel: h and j must be finite");
  }
  if (constraints.amplitude_bound && !(theta_bar > 0.0)) {
    throw std::invalid_argument("NmrModel: theta_bar must be > 0 when the amplitude bound is on");
  }
}

GeneratorSet build_generators(const NmrModel& model) {
  model.validate();
  GeneratorSet gens;
  gens.n = model.n;
  gens.dim = model.dim();

  const auto x = pauli_x();
  const auto y = pauli_y();
  const auto z = pauli_z();

  for (int i = 0; i < model.n; ++i) {
    gens.items.push_back({"X" + std::to_string(i), embed({{i, x}}, model.n), true, i, 0.0});
  }
  for (int i = 0; i < model.n; ++i) {
    gens.items.push_back({"Y" + std::to_string(i), embed({{i, y}}, model.n), true, model.n + i, 0.0});
  }
  for (int i = 0; i < model.n; ++i) {
    gens.items.push_back({"Z" + std::to_string(i), embed({{i, z}}, model.n), false, -1, model.h(i)});
  }
  for (int i = 0; i < model.n; ++i) {
    for (int jdx = i + 1; jdx < model.n; ++jdx) {
      gens.items.push_back({"Z" + std::to_string(i) + "Z" + std::to_string(jdx),
                            embed({{i, z}, {jdx, z}}, model.n), false, -1, model.j(i, jdx)});
    }
  }
  return gens;
}

std::vector<LayerFactor> layer_factors(const NmrModel& model, const GeneratorSet& gens) {
  if (model.q != 1 && model.q != 2) {
    throw std::invalid_argument("layer_factors: unsupported splitting order");
  }
  std::vector<LayerFactor> seq;
  const int count = static_cast<int>(gens.items.size());
  if (model.q == 1) {
    seq.reserve(count);
    for (int i = 0; i < count; ++i) seq.push_back({i, 1.0});
  } else {
    seq.reserve(2 * count);
    for (int i = 0; i < count; ++i) seq.push_back({i, 0.5});
    for (int i = count - 1; i >= 0; --i) seq.push_back({i, 0.5});
  }
  return seq;
}

double factor_coefficient(const Generator& gen, const Eigen::RowVectorXd& step_fields) {
  return gen.variable ? step_fields(gen.channel) : gen.fixed_value;
}

ComplexMatrix layer_unitary(const NmrModel& model, const GeneratorSet& gens,
                            const Eigen::RowVectorXd& step_fields) {
  const auto seq = layer_factors(model, gens);
  ComplexMatrix u = ComplexMatrix::Identity(gens.dim, gens.dim);
  for (const LayerFactor& f : seq) {
    const Generator& g = gens.items[f.generator];
    const double angle = model.tau * f.scale * factor_coefficient(g, step_fields);
    u = involutory_rotation(g.op, angle) * u;
  }
  return u;
}

ComplexMatrix layer_hamiltonian(const NmrModel& model, const GeneratorSet& gens,
                                const Eigen::RowVectorXd& step_fields) {
  ComplexMatrix ham = ComplexMatrix::Zero(gens.dim, gens.dim);
  for (const Generator& g : gens.items) {
    ham += factor_coefficient(g, step_fields) * g.op;
  }
  return ham;
}

ParameterTrajectory apply_constraints(const Eigen::VectorXd& raw, const NmrModel& model) {
  model.validate();
  const int expected = model.free_parameters();
  if (raw.size() != expected) {
    std::ostringstream msg;
    msg << "apply_constraints: raw length " << raw.size() << " != expected " << expected;
    throw std::invalid_argument(msg.str());
  }

  ParameterTrajectory traj;
  traj.raw = raw;
  traj.constraints = model.constraints;
  traj.n = model.n;
  traj.m = model.m;
  traj.theta_bar = model.theta_bar;
  traj.fields.resize(model.m, model.channels());

  const auto bounded = [&](double v) {
    return model.constraints.amplitude_bound ? model.theta_bar * std::tanh(v / model.theta_bar) : v;
  };

  for (int step = 0; step < model.m; ++step) {
    const bool zero_step =
        model.constraints.boundary_zero && (step == 0 || step == model.m - 1);
    for (int i = 0; i < model.n; ++i) {
      double vx, vy;
      if (model.constraints.shared_fields) {
        vx = raw(2 * step + 0);
        vy = raw(2 * step + 1);
      } else {
        vx = raw(step * model.channels() + i);
        vy = raw(step * model.channels() + model.n + i);
      }
      traj.fields(step, i) = zero_step ? 0.0 : bounded(vx);
      traj.fields(step, model.n + i) = zero_step ? 0.0 : bounded(vy);
    }
  }
  return traj;
}

ParameterTrajectory init_parameters(const NmrModel& model, RngStream& rng) {
  model.validate();
  const int knots = std::max(1, (model.m + 7) / 8);
  const int channels = model.constraints.shared_fields ? 2 : model.channels();

  Eigen::VectorXd raw(model.free_parameters());
  for (int ch = 0; ch < channels; ++ch) {
    if (knots == 1 || model.m == 1) {
      const double v = rng.uniform(-model.theta_bar, model.theta_bar);
      for (int step = 0; step < model.m; ++step) {
        const int idx = model.constraints.shared_fields ? 2 * step + ch : step * channels + ch;
        raw(idx) = v;
      }
      continue;
    }
    std::vector<double> xs(knots), ys(knots);
    for (int k = 0; k < knots; ++k) {
      xs[k] = static_cast<double>(k) * (model.m - 1) / (knots - 1);
      ys[k] = rng.uniform(-model.theta_bar, model.theta_bar);
    }
    const auto y2 = spline_second_derivatives(xs, ys);
    for (int step = 0; step < model.m; ++step) {
      const double v = spline_eval(xs, ys, y2, static_cast<double>(step));
      const int idx = model.constraints.shared_fields ? 2 * step + ch : step * channels + ch;
      raw(idx) = v;
    }
  }
  return apply_constraints(raw, model);
}

Eigen::VectorXd extract_raw_layout(const ParameterTrajectory& traj) {
  const int channels = traj.constraints.shared_fields ? 2 : 2 * traj.n;
  Eigen::VectorXd raw(traj.m * channels);
  for (int step = 0; step < traj.m; ++step) {
    if (traj.constraints.shared_fields) {
      raw(2 * step + 0) = traj.fields(step, 0);
      raw(2 * step + 1) = traj.fields(step, traj.n);
    } else {
      for (int c = 0; c < channels; ++c) {
        raw(step * channels + c) = traj.fields(step, c);
      }
    }
  }
  return raw;
}

Eigen::VectorXd chain_rule_to_raw(const ParameterTrajectory& traj, const Eigen::MatrixXd& field_grad) {
  if (field_grad.rows() != traj.m || field_grad.cols() != 2 * traj.n) {
    throw std::invalid_argument("chain_rule_to_raw: field gradient shape mismatch");
  }
  const int channels = traj.constraints.shared_fields ? 2 : 2 * traj.n;
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(traj.m * channels);

  for (int step = 0; step < traj.m; ++step) {
    if (traj.constraints.boundary_zero && (step == 0 || step == traj.m - 1)) {
      continue;
    }
    for (int i = 0; i < traj.n; ++i) {
      for (int axis = 0; axis < 2; ++axis) {
        const int col = axis == 0 ? i : traj.n + i;
        double g = field_grad(step, col);
        if (traj.constraints.amplitude_bound) {
          const double t = traj.fields(step, col) / traj.theta_bar;
          g *= 1.0 - t * t;  // d/draw of theta_bar * tanh(raw / theta_bar)
        }
        const int idx = traj.constraints.shared_fields ? 2 * step + axis
                                                       : step * channels + col;
        grad(idx) += g;
      }
    }
  }
  return grad;
}

}  // namespace pqclab
