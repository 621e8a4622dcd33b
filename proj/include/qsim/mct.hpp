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

#include "qsim/circuit.hpp"

namespace qsim {

/// Multi-controlled X over n_controls+1 qubits (controls 0..n_controls-1,
/// target n_controls) without ancillas, via the gray-code phase ladder. Gate
/// count grows as 2^n_controls.
Circuit decompose_mct_noancilla(int n_controls);

/// Multi-controlled X over n_controls+2 qubits (controls 0..n_controls-1,
/// target n_controls, ancilla n_controls+1). Requires the ancilla in |0> and
/// returns it to |0>; splits into two half-size blocks realized with
/// borrowed-qubit Toffoli ladders, so the gate count is linear in
/// n_controls. Needs n_controls >= 3.
Circuit decompose_mct_one_ancilla(int n_controls);

/// Appends a multi-controlled U1(lambda) between `controls` and `target`
/// using the gray-code ladder (emits CX and U1 only).
void append_mcu1(Circuit &c, double lambda, const std::vector<int> &controls,
                 int target);

/// Appends the standard 6-CX Toffoli network.
void append_toffoli(Circuit &c, int a, int b, int target);

/// Appends an n-controlled X that may borrow `dirty` workspace qubits (their
/// state is restored). Needs controls.size() - 2 borrowed qubits when there
/// are three or more controls.
void append_mcx_borrowed(Circuit &c, const std::vector<int> &controls,
                         const std::vector<int> &dirty, int target);

} // namespace qsim
