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

#include <Eigen/Dense>
#include <complex>

#include "pqclab/rng.hpp"

namespace pqclab {

using ComplexMatrix = Eigen::MatrixXcd;
using DensityMatrix = Eigen::MatrixXcd;

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvector columns unitary. V diag(w) V^dagger reconstructs the input.
struct HermitianEigen {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Eigenvalues below this floor are clamped before taking logarithms, which
/// realizes the 0 log 0 = 0 convention for entropies of pure states.
inline constexpr double kEigenvalueFloor = 1e-300;

/// Checks Hermiticity within `tol` relative Frobenius error and returns the
/// asymmetry norm. Throws std::invalid_argument with the norm otherwise.
double require_hermitian(const ComplexMatrix& h, double tol = 1e-10);

HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// exp(scale * H) for Hermitian H via eigendecomposition. Unitary to
/// roundoff when scale is purely imaginary.
ComplexMatrix hermitian_expm(const ComplexMatrix& h, std::complex<double> scale);

/// Principal logarithm of a Hermitian PSD matrix; eigenvalues are clamped to
/// kEigenvalueFloor. Eigenvalues below -1e-10 are rejected (not PSD).
ComplexMatrix matrix_log(const ComplexMatrix& rho);

/// Schatten p-norm of the singular values; p = infinity returns the largest
/// singular value. Requires p >= 1.
double schatten_norm(const ComplexMatrix& a, double p);

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian
/// matrix with the R diagonal phases corrected.
ComplexMatrix haar_unitary(Eigen::Index d, RngStream& rng);

/// Rank-1 projector onto the first column of a Haar unitary.
DensityMatrix haar_pure_state(Eigen::Index d, RngStream& rng);

}  // namespace pqclab
