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

#include <string>
#include <vector>

#include "qsim/linalg.hpp"

namespace qsim {

enum class ChannelFamily {
  bit_flip,
  phase_flip,
  bitphase_flip,
  depolarizing,
  amplitude_damping,
  phase_damping,
  thermal_relaxation,
  reset,
  custom,
};

std::string to_string(ChannelFamily family);

/// Completely positive trace-preserving map given by Kraus operators
/// {E_i} with sum E_i† E_i = I.
///
/// `params` carries the family-specific scalars the density backend uses for
/// its fused single-pass updates:
///   bit/phase/bitphase flip: {p}
///   depolarizing:            {p}
///   amplitude/phase damping: {p}
///   thermal_relaxation:      {gamma, p_phi}
/// The operator list stays the single source of truth; the fused paths are
/// algebraically identical rewrites of sum E_i rho E_i†.
struct KrausChannel {
  int arity = 1; // qubits acted on, 1 or 2
  ChannelFamily family = ChannelFamily::custom;
  std::vector<Matrix> ops;
  std::vector<double> params;

  /// Largest absolute deviation of sum E_i† E_i from the identity.
  double completeness_defect() const;

  /// Throws ValidationError when the defect exceeds 1e-12 or the operator
  /// shapes do not match the arity.
  void validate() const;
};

} // namespace qsim
