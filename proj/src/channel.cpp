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

#include "qsim/channel.hpp"

#include "qsim/error.hpp"

namespace qsim {

std::string to_string(ChannelFamily family) {
  switch (family) {
  case ChannelFamily::bit_flip:
    return "bf";
  case ChannelFamily::phase_flip:
    return "pf";
  case ChannelFamily::bitphase_flip:
    return "bpf";
  case ChannelFamily::depolarizing:
    return "dep";
  case ChannelFamily::amplitude_damping:
    return "ad";
  case ChannelFamily::phase_damping:
    return "pd";
  case ChannelFamily::thermal_relaxation:
    return "thermal";
  case ChannelFamily::reset:
    return "reset";
  case ChannelFamily::custom:
    return "custom";
  }
  return "?";
}

double KrausChannel::completeness_defect() const {
  if (ops.empty())
    return 1.0;
  const Eigen::Index dim = ops.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix &e : ops)
    sum += e.adjoint() * e;
  sum -= Matrix::Identity(dim, dim);
  return sum.cwiseAbs().maxCoeff();
}

void KrausChannel::validate() const {
  if (arity != 1 && arity != 2)
    throw ValidationError("channel arity must be 1 or 2");
  const Eigen::Index dim = Eigen::Index(1) << arity;
  if (ops.empty())
    throw ValidationError("channel has no Kraus operators");
  for (const Matrix &e : ops)
    if (e.rows() != dim || e.cols() != dim)
      throw ValidationError("Kraus operator shape does not match channel arity");
  const double defect = completeness_defect();
  if (defect > 1e-12)
    throw ValidationError("Kraus completeness violated, defect " +
                          std::to_string(defect));
}

} // namespace qsim
