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

#include "qsim/mct.hpp"

#include <cmath>

#include "qsim/error.hpp"

namespace qsim {

namespace {

void append_cu1(Circuit &c, double lambda, int control, int target) {
  c.u1(lambda / 2.0, control);
  c.cx(control, target);
  c.u1(-lambda / 2.0, target);
  c.cx(control, target);
  c.u1(lambda / 2.0, target);
}

int high_bit(unsigned v) {
  int b = -1;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

} // namespace

void append_mcu1(Circuit &c, double lambda, const std::vector<int> &controls,
                 int target) {
  const int m = int(controls.size());
  if (m == 0) {
    c.u1(lambda, target);
    return;
  }
  if (m == 1) {
    append_cu1(c, lambda, controls[0], target);
    return;
  }
  // Walk the gray code over the control set. The wire for the highest set
  // bit of the current code holds the parity of the coded subset; signs
  // alternate with subset parity so the phases telescope to lambda exactly
  // on the all-ones subspace.
  const double angle = lambda / double(1u << (m - 1));
  unsigned prev = 0;
  for (unsigned i = 1; i < (1u << m); ++i) {
    const unsigned gray = i ^ (i >> 1);
    const int lead = high_bit(gray);
    if (prev != 0) {
      const unsigned changed = gray ^ prev;
      const int changed_bit = high_bit(changed);
      if (changed_bit == lead)
        c.cx(controls[high_bit(prev)], controls[lead]);
      else
        c.cx(controls[changed_bit], controls[lead]);
    }
    const bool odd = __builtin_popcount(gray) % 2 == 1;
    append_cu1(c, odd ? angle : -angle, controls[lead], target);
    prev = gray;
  }
}

void append_toffoli(Circuit &c, int a, int b, int target) {
  const double t = M_PI / 4.0;
  c.h(target);
  c.cx(b, target);
  c.u1(-t, target);
  c.cx(a, target);
  c.u1(t, target);
  c.cx(b, target);
  c.u1(-t, target);
  c.cx(a, target);
  c.u1(t, b);
  c.u1(t, target);
  c.h(target);
  c.cx(a, b);
  c.u1(t, a);
  c.u1(-t, b);
  c.cx(a, b);
}

void append_mcx_borrowed(Circuit &c, const std::vector<int> &controls,
                         const std::vector<int> &dirty, int target) {
  const int m = int(controls.size());
  if (m == 0)
    throw ValidationError("mcx needs at least one control");
  if (m == 1) {
    c.cx(controls[0], target);
    return;
  }
  if (m == 2) {
    append_toffoli(c, controls[0], controls[1], target);
    return;
  }
  if (int(dirty.size()) < m - 2)
    throw ValidationError("mcx with " + std::to_string(m) +
                          " controls needs " + std::to_string(m - 2) +
                          " borrowed qubits");
  // V-ladder with borrowed workspace: the first sweep drives the target, the
  // second restores the workspace (4(m-2) Toffolis total).
  auto ladder = [&](bool with_top) {
    if (with_top)
      append_toffoli(c, controls[m - 1], dirty[m - 3], target);
    for (int j = m - 2; j >= 2; --j)
      append_toffoli(c, controls[j], dirty[j - 2], dirty[j - 1]);
    append_toffoli(c, controls[0], controls[1], dirty[0]);
    for (int j = 2; j <= m - 2; ++j)
      append_toffoli(c, controls[j], dirty[j - 2], dirty[j - 1]);
    if (with_top)
      append_toffoli(c, controls[m - 1], dirty[m - 3], target);
  };
  ladder(true);
  ladder(false);
}

Circuit decompose_mct_noancilla(int n_controls) {
  if (n_controls < 1)
    throw ValidationError("mct needs at least one control");
  if (n_controls > 13)
    throw ValidationError("mct supports at most 13 controls");
  Circuit c(n_controls + 1);
  const int target = n_controls;
  if (n_controls == 1) {
    c.cx(0, target);
    return c;
  }
  if (n_controls == 2) {
    append_toffoli(c, 0, 1, target);
    return c;
  }
  std::vector<int> controls(n_controls);
  for (int i = 0; i < n_controls; ++i)
    controls[i] = i;
  c.h(target);
  append_mcu1(c, M_PI, controls, target);
  c.h(target);
  return c;
}

Circuit decompose_mct_one_ancilla(int n_controls) {
  if (n_controls < 3)
    throw ValidationError("one-ancilla mct needs at least 3 controls "
                          "(no savings below that)");
  if (n_controls > 13)
    throw ValidationError("mct supports at most 13 controls");
  Circuit c(n_controls + 2);
  const int target = n_controls;
  const int ancilla = n_controls + 1;

  // Split the controls; each half is an X onto (ancilla|target) borrowing
  // idle wires from the other half. With the ancilla starting in |0> the
  // first half-gate only needs to run twice, bracketing the second.
  const int k = (n_controls + 1) / 2;
  std::vector<int> first(k), rest;
  for (int i = 0; i < k; ++i)
    first[i] = i;
  for (int i = k; i < n_controls; ++i)
    rest.push_back(i);
  rest.push_back(ancilla);

  std::vector<int> dirty_first; // borrowed by the first half
  for (int i = k; i < n_controls; ++i)
    dirty_first.push_back(i);
  dirty_first.push_back(target);
  std::vector<int> dirty_rest(first); // borrowed by the second half

  append_mcx_borrowed(c, first, dirty_first, ancilla);
  append_mcx_borrowed(c, rest, dirty_rest, target);
  append_mcx_borrowed(c, first, dirty_first, ancilla);
  return c;
}

} // namespace qsim
