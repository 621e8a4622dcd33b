// Copyright 2026 The groverlab Authors
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

#include <Eigen/Dense>
#include <complex>

namespace qsim {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Largest absolute deviation of U†U from the identity.
inline double unitarity_defect(const Matrix &u) {
  Matrix g = u.adjoint() * u;
  g -= Matrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Matrix &u, double tol = 1e-10) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

/// Frobenius distance min over global phase: || e^{i phi} a - b ||_F.
inline double phase_distance(const Matrix &a, const Matrix &b) {
  Complex overlap = (a.adjoint() * b).trace();
  Complex phase = std::abs(overlap) > 1e-14 ? overlap / std::abs(overlap)
                                            : Complex(1.0, 0.0);
  return (a * phase - b).norm();
}

} // namespace qsim
