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

#include "pqclab/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pqclab {

double require_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("require_hermitian: matrix is not square");
  }
  const double asym = (h - h.adjoint()).norm();
  const double scale = std::max(1.0, h.norm());
  if (asym > tol * scale) {
    std::ostringstream msg;
    msg << "require_hermitian: asymmetry norm " << asym << " exceeds tolerance " << tol * scale;
    throw std::invalid_argument(msg.str());
  }
  return asym;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) * 0.5);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix hermitian_expm(const ComplexMatrix& h, std::complex<double> scale) {
  const HermitianEigen eig = hermitian_eigen(h);
  const Eigen::Index d = h.rows();
  Eigen::VectorXcd phases(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    phases(i) = std::exp(scale * eig.eigenvalues(i));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix matrix_log(const ComplexMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(rho);
  const Eigen::Index d = rho.rows();
  if (eig.eigenvalues.minCoeff() < -1e-10) {
    std::ostringstream msg;
    msg << "matrix_log: input not PSD, smallest eigenvalue " << eig.eigenvalues.minCoeff();
    throw std::invalid_argument(msg.str());
  }
  Eigen::VectorXcd logs(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    logs(i) = std::log(std::max(eig.eigenvalues(i), kEigenvalueFloor));
  }
  return eig.eigenvectors * logs.asDiagonal() * eig.eigenvectors.adjoint();
}

double schatten_norm(const ComplexMatrix& a, double p) {
  if (p < 1.0) {
    throw std::invalid_argument("schatten_norm: p must be >= 1");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const Eigen::VectorXd s = svd.singularValues();
  if (std::isinf(p)) {
    return s.size() > 0 ? s.maxCoeff() : 0.0;
  }
  if (p == 2.0) {
    return s.norm();
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    acc += std::pow(s(i), p);
  }
  return std::pow(acc, 1.0 / p);
}

ComplexMatrix haar_unitary(Eigen::Index d, RngStream& rng) {
  if (d < 1) {
    throw std::invalid_argument("haar_unitary: dimension must be >= 1");
  }
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is Haar rather than QR-convention biased.
  for (Eigen::Index j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    const std::complex<double> phase = mag > 0.0 ? rjj / mag : std::complex<double>(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

DensityMatrix haar_pure_state(Eigen::Index d, RngStream& rng) {
  const ComplexMatrix u = haar_unitary(d, rng);
  const Eigen::VectorXcd v = u.col(0);
  return v * v.adjoint();
}

}  // namespace pqclab
