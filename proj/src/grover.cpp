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

#include "qsim/grover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "qsim/error.hpp"
#include "qsim/mct.hpp"
#include "qsim/state.hpp"
#include "qsim/transpile.hpp"

namespace qsim::grover {

namespace {

void check_target(int n, const std::string &target) {
  if (target.empty())
    throw ValidationError("empty search target");
  if (int(target.size()) != n)
    throw ValidationError("target length " + std::to_string(target.size()) +
                          " does not match qubit count " + std::to_string(n));
  for (char ch : target)
    if (ch != '0' && ch != '1')
      throw ValidationError("target must be a bitstring");
}

// Bit of the target addressed by qubit q (leftmost character is the highest
// qubit, matching printed measurement outcomes).
bool target_bit(const std::string &target, int q) {
  return target[target.size() - 1 - std::size_t(q)] == '1';
}

bool needs_ancilla(MctMode mode, int mcz_arity) {
  // An MCZ over a qubits uses a-1 controls; the ancilla split pays off from
  // three controls up.
  return mode == MctMode::one_ancilla && mcz_arity - 1 >= 3;
}

// Multi-controlled Z over `scope` wires. `ancilla` is the shared ancilla wire
// index, used only when the mode calls for it.
void append_mcz(Circuit &c, const std::vector<int> &scope, MctMode mode,
                int ancilla) {
  const int m = int(scope.size());
  if (m == 1) {
    c.z(scope[0]);
    return;
  }
  const int tgt = scope.back();
  std::vector<int> controls(scope.begin(), scope.end() - 1);
  c.h(tgt);
  if (needs_ancilla(mode, m)) {
    std::vector<int> wires = controls;
    wires.push_back(tgt);
    wires.push_back(ancilla);
    c.append(decompose_mct_one_ancilla(m - 1), wires);
  } else {
    c.mct(controls, tgt);
  }
  c.h(tgt);
}

void append_oracle(Circuit &c, const std::vector<int> &scope,
                   const std::string &target, MctMode mode, int ancilla) {
  for (int q : scope)
    if (!target_bit(target, q))
      c.x(q);
  append_mcz(c, scope, mode, ancilla);
  for (int q : scope)
    if (!target_bit(target, q))
      c.x(q);
}

void append_diffusion(Circuit &c, const std::vector<int> &scope, MctMode mode,
                      int ancilla) {
  for (int q : scope)
    c.h(q);
  for (int q : scope)
    c.x(q);
  append_mcz(c, scope, mode, ancilla);
  for (int q : scope)
    c.x(q);
  for (int q : scope)
    c.h(q);
}

void check_schedule(int n, const StageSchedule &schedule) {
  if (schedule.stages.empty())
    throw ValidationError("schedule has no stages");
  std::vector<int> seen(n, 0);
  for (const Stage &stage : schedule.stages) {
    if (stage.block.empty())
      throw ValidationError("schedule stage owns no qubits");
    for (int q : stage.block) {
      if (q < 0 || q >= n)
        throw ValidationError("schedule block qubit out of range");
      if (seen[q]++)
        throw ValidationError("schedule blocks overlap on qubit " +
                              std::to_string(q));
    }
  }
  for (int q = 0; q < n; ++q)
    if (!seen[q])
      throw ValidationError("schedule blocks do not cover qubit " +
                            std::to_string(q));
  // After a measured stage, full-register scopes would touch frozen qubits.
  bool measured = false;
  for (const Stage &stage : schedule.stages) {
    if (measured)
      for (const StageIteration &it : stage.iterations)
        if (it.oracle == OracleScope::full ||
            it.diffusion == DiffusionScope::global)
          throw ValidationError("full-register scope after a measured stage");
    measured = measured || stage.measure_after;
  }
}

int max_mcz_arity(const GroverConfig &config) {
  if (config.variant == Variant::standard)
    return config.n_qubits;
  int arity = 1;
  for (const Stage &stage : config.schedule.stages)
    for (const StageIteration &it : stage.iterations) {
      arity = std::max<int>(arity, it.oracle == OracleScope::full
                                       ? config.n_qubits
                                       : int(stage.block.size()));
      arity = std::max<int>(arity, it.diffusion == DiffusionScope::global
                                       ? config.n_qubits
                                       : int(stage.block.size()));
    }
  return arity;
}

std::vector<int> all_qubits(int n) {
  std::vector<int> qs(n);
  for (int i = 0; i < n; ++i)
    qs[i] = i;
  return qs;
}

std::string default_target(int n) { return std::string(std::size_t(n), '1'); }

} // namespace

std::string to_string(Algo algo) {
  switch (algo) {
  case Algo::sga:
    return "sga";
  case Algo::sgaa:
    return "sgaa";
  case Algo::m1ga:
    return "m1ga";
  case Algo::m1gaa:
    return "m1gaa";
  case Algo::m2ga:
    return "m2ga";
  case Algo::m2gaa:
    return "m2gaa";
  }
  return "?";
}

Algo algo_from_string(const std::string &name) {
  if (name == "sga")
    return Algo::sga;
  if (name == "sgaa")
    return Algo::sgaa;
  if (name == "m1ga")
    return Algo::m1ga;
  if (name == "m1gaa")
    return Algo::m1gaa;
  if (name == "m2ga")
    return Algo::m2ga;
  if (name == "m2gaa")
    return Algo::m2gaa;
  throw ValidationError("unknown algorithm '" + name + "'");
}

int optimal_iterations(int n) {
  if (n < 1)
    throw ValidationError("qubit count must be positive");
  const double theta = std::asin(std::pow(2.0, -0.5 * n));
  const int k = int(std::floor(M_PI / (4.0 * theta)));
  return std::max(1, k);
}

int circuit_wires(const GroverConfig &config) {
  return config.n_qubits +
         (needs_ancilla(config.mct_mode, max_mcz_arity(config)) ? 1 : 0);
}

Circuit build_oracle(int n, const std::string &target, MctMode mode) {
  check_target(n, target);
  const int wires = n + (needs_ancilla(mode, n) ? 1 : 0);
  Circuit c(wires);
  append_oracle(c, all_qubits(n), target, mode, n);
  return c;
}

Circuit build_diffusion(int n, const std::vector<int> &scope_qubits,
                        MctMode mode) {
  if (scope_qubits.empty())
    throw ValidationError("diffusion scope is empty");
  std::vector<int> sorted = scope_qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("diffusion scope repeats a qubit");
  if (sorted.front() < 0 || sorted.back() >= n)
    throw ValidationError("diffusion scope out of range");
  const int wires = n + (needs_ancilla(mode, int(scope_qubits.size())) ? 1 : 0);
  Circuit c(wires);
  append_diffusion(c, scope_qubits, mode, n);
  return c;
}

Circuit build_standard_grover(const GroverConfig &config) {
  if (config.variant != Variant::standard)
    throw ValidationError("config is not the standard variant");
  const int n = config.n_qubits;
  const std::string target =
      config.target.empty() ? default_target(n) : config.target;
  check_target(n, target);

  Circuit c(circuit_wires(config), n);
  for (int q = 0; q < n; ++q)
    c.h(q);
  const int k = optimal_iterations(n);
  for (int it = 0; it < k; ++it) {
    append_oracle(c, all_qubits(n), target, config.mct_mode, n);
    append_diffusion(c, all_qubits(n), config.mct_mode, n);
  }
  for (int q = 0; q < n; ++q)
    c.measure(q, q);
  return c;
}

Circuit build_modified_grover(const GroverConfig &config) {
  if (config.variant != Variant::modified)
    throw ValidationError("config is not the modified variant");
  const int n = config.n_qubits;
  const std::string target =
      config.target.empty() ? default_target(n) : config.target;
  check_target(n, target);
  check_schedule(n, config.schedule);

  Circuit c(circuit_wires(config), n);
  for (int q = 0; q < n; ++q)
    c.h(q);

  std::vector<bool> measured(std::size_t(n), false);
  const auto &stages = config.schedule.stages;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const Stage &stage = stages[s];
    for (const StageIteration &it : stage.iterations) {
      if (it.oracle == OracleScope::full)
        append_oracle(c, all_qubits(n), target, config.mct_mode, n);
      else
        append_oracle(c, stage.block, target, config.mct_mode, n);
      if (it.diffusion == DiffusionScope::global)
        append_diffusion(c, all_qubits(n), config.mct_mode, n);
      else
        append_diffusion(c, stage.block, config.mct_mode, n);
    }
    if (stage.measure_after) {
      for (int q : stage.block) {
        c.measure(q, q);
        measured[std::size_t(q)] = true;
      }
      std::vector<int> remaining;
      for (std::size_t later = s + 1; later < stages.size(); ++later)
        for (int q : stages[later].block)
          remaining.push_back(q);
      std::sort(remaining.begin(), remaining.end());
      for (int q : remaining)
        c.reset(q);
      for (int q : remaining)
        c.h(q);
    }
  }
  for (int q = 0; q < n; ++q)
    if (!measured[std::size_t(q)])
      c.measure(q, q);
  return c;
}

Circuit build_grover(const GroverConfig &config) {
  return config.variant == Variant::standard ? build_standard_grover(config)
                                             : build_modified_grover(config);
}

double ideal_success_probability(const GroverConfig &config) {
  const int n = config.n_qubits;
  const std::string target =
      config.target.empty() ? default_target(n) : config.target;
  check_target(n, target);

  if (config.variant == Variant::standard) {
    const double theta = std::asin(std::pow(2.0, -0.5 * n));
    const double s = std::sin((2.0 * optimal_iterations(n) + 1.0) * theta);
    return s * s;
  }

  check_schedule(n, config.schedule);
  const int wires = circuit_wires(config);
  const auto &stages = config.schedule.stages;

  // Segment-wise evaluation: a measured stage ends a segment, its block is
  // scored, and (because the rest is reset and re-initialized) the next
  // segment evolves from a fresh register. The factors multiply exactly.
  double success = 1.0;
  std::vector<bool> measured(std::size_t(n), false);
  std::size_t seg_begin = 0;
  while (seg_begin < stages.size()) {
    std::size_t seg_end = seg_begin;
    while (seg_end < stages.size() && !stages[seg_end].measure_after)
      ++seg_end;
    const bool ends_with_measure = seg_end < stages.size();
    if (ends_with_measure)
      ++seg_end;

    QuantumState state(wires, Backend::vector);
    const Matrix h_mat = gate_matrix(Kind::H);
    for (int q = 0; q < n; ++q)
      if (!measured[std::size_t(q)])
        state.apply_gate1(h_mat, q);

    Circuit seg(wires, 0);
    for (std::size_t s = seg_begin; s < seg_end; ++s) {
      const Stage &stage = stages[s];
      for (const StageIteration &it : stage.iterations) {
        if (it.oracle == OracleScope::full)
          append_oracle(seg, all_qubits(n), target, config.mct_mode, n);
        else
          append_oracle(seg, stage.block, target, config.mct_mode, n);
        if (it.diffusion == DiffusionScope::global)
          append_diffusion(seg, all_qubits(n), config.mct_mode, n);
        else
          append_diffusion(seg, stage.block, config.mct_mode, n);
      }
    }
    apply_unitary_circuit(seg, state);

    std::vector<int> check;
    if (ends_with_measure) {
      check = stages[seg_end - 1].block;
      for (int q : check)
        measured[std::size_t(q)] = true;
    } else {
      for (int q = 0; q < n; ++q)
        if (!measured[std::size_t(q)])
          check.push_back(q);
    }
    std::size_t want = 0, mask = 0;
    for (int q : check) {
      mask |= std::size_t(1) << q;
      if (target_bit(target, q))
        want |= std::size_t(1) << q;
    }
    double p = 0.0;
    const std::vector<double> probs = state.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i)
      if ((i & mask) == want)
        p += probs[i];
    success *= p;
    seg_begin = seg_end;
  }
  return success;
}

StageSchedule default_m2ga_schedule(int n) {
  if (n < 2)
    throw ValidationError("two-stage schedule needs at least 2 qubits");
  const int first = (n + 1) / 2;
  Stage s1, s2;
  for (int q = 0; q < first; ++q)
    s1.block.push_back(q);
  for (int q = first; q < n; ++q)
    s2.block.push_back(q);
  s1.iterations.assign(std::size_t(optimal_iterations(first)),
                       {OracleScope::block, DiffusionScope::local});
  s1.measure_after = true;
  s2.iterations.assign(std::size_t(optimal_iterations(n - first)),
                       {OracleScope::block, DiffusionScope::local});
  StageSchedule schedule;
  schedule.stages = {s1, s2};
  return schedule;
}

StageSchedule default_m1ga_schedule(int n) {
  if (n < 2)
    throw ValidationError("one-stage depth-reduced schedule needs at least 2 "
                          "qubits");
  static std::mutex cache_mutex;
  static std::map<int, StageSchedule> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }

  const int first = (n + 1) / 2;
  const std::string target = default_target(n);
  std::vector<int> block;
  for (int q = 0; q < first; ++q)
    block.push_back(q);

  // One local-diffusion iteration and one global iteration as reusable
  // fragments (noancilla keeps the wire count at n; the schedule itself is
  // mode-independent).
  Circuit local_iter(n, 0), global_iter(n, 0);
  append_oracle(local_iter, all_qubits(n), target, MctMode::noancilla, n);
  append_diffusion(local_iter, block, MctMode::noancilla, n);
  append_oracle(global_iter, all_qubits(n), target, MctMode::noancilla, n);
  append_diffusion(global_iter, all_qubits(n), MctMode::noancilla, n);

  const int limit = 2 * optimal_iterations(n);
  const std::size_t target_index = [&] {
    std::size_t idx = 0;
    for (int q = 0; q < n; ++q)
      if (target_bit(target, q))
        idx |= std::size_t(1) << q;
    return idx;
  }();

  int best_j1 = 0, best_j2 = 1;
  double best_p = -1.0;
  QuantumState local_state(n, Backend::vector);
  const Matrix h_mat = gate_matrix(Kind::H);
  for (int q = 0; q < n; ++q)
    local_state.apply_gate1(h_mat, q);
  for (int j1 = 0; j1 <= limit; ++j1) {
    QuantumState walker = local_state;
    for (int j2 = 0; j2 <= limit; ++j2) {
      if (j1 + j2 >= 1) {
        const double p = std::norm(walker.amplitude(target_index));
        const bool better =
            p > best_p + 1e-12 ||
            (p > best_p - 1e-12 &&
             (j1 + j2 < best_j1 + best_j2 ||
              (j1 + j2 == best_j1 + best_j2 && j1 > best_j1)));
        if (better) {
          best_p = p;
          best_j1 = j1;
          best_j2 = j2;
        }
      }
      if (j2 < limit)
        apply_unitary_circuit(global_iter, walker);
    }
    if (j1 < limit)
      apply_unitary_circuit(local_iter, local_state);
  }

  Stage s1, s2;
  s1.block = block;
  s1.iterations.assign(std::size_t(best_j1),
                       {OracleScope::full, DiffusionScope::local});
  for (int q = first; q < n; ++q)
    s2.block.push_back(q);
  s2.iterations.assign(std::size_t(best_j2),
                       {OracleScope::full, DiffusionScope::global});
  StageSchedule schedule;
  schedule.stages = {s1, s2};

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(n, schedule);
  return schedule;
}

GroverConfig make_config(Algo algo, int n_qubits) {
  GroverConfig config;
  config.n_qubits = n_qubits;
  config.target = default_target(n_qubits);
  switch (algo) {
  case Algo::sga:
    break;
  case Algo::sgaa:
    config.mct_mode = MctMode::one_ancilla;
    break;
  case Algo::m1ga:
    config.variant = Variant::modified;
    config.schedule = default_m1ga_schedule(n_qubits);
    break;
  case Algo::m1gaa:
    config.variant = Variant::modified;
    config.schedule = default_m1ga_schedule(n_qubits);
    config.mct_mode = MctMode::one_ancilla;
    break;
  case Algo::m2ga:
    config.variant = Variant::modified;
    config.schedule = default_m2ga_schedule(n_qubits);
    break;
  case Algo::m2gaa:
    config.variant = Variant::modified;
    config.schedule = default_m2ga_schedule(n_qubits);
    config.mct_mode = MctMode::one_ancilla;
    break;
  }
  return config;
}

} // namespace qsim::grover
