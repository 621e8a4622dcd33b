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

#include <optional>
#include <string>
#include <vector>

#include "qsim/circuit.hpp"

namespace qsim::grover {

enum class MctMode { noancilla, one_ancilla };
enum class Variant { standard, modified };
enum class OracleScope { full, block };
enum class DiffusionScope { global, local };

struct StageIteration {
  OracleScope oracle = OracleScope::full;
  DiffusionScope diffusion = DiffusionScope::global;
};

/// One schedule stage: the block of qubits it owns, its iteration list, and
/// whether the block is measured (with the rest reset and re-initialized)
/// before the next stage runs.
struct Stage {
  std::vector<int> block;
  std::vector<StageIteration> iterations;
  bool measure_after = false;
};

/// Stage blocks must partition the n qubits.
struct StageSchedule {
  std::vector<Stage> stages;
};

enum class Algo { sga, sgaa, m1ga, m1gaa, m2ga, m2gaa };

std::string to_string(Algo algo);
Algo algo_from_string(const std::string &name);

struct GroverConfig {
  int n_qubits = 0;
  std::string target;       // length n, bit i addresses qubit n-1-i; default all ones
  MctMode mct_mode = MctMode::noancilla;
  Variant variant = Variant::standard;
  StageSchedule schedule;   // modified variant only
};

/// floor(pi / (4 asin(2^{-n/2}))), at least 1.
int optimal_iterations(int n);

/// Phase oracle: flips the sign of |target> only. Uses one multi-controlled
/// Toffoli (H-conjugated on the last scope qubit) with X conjugation on the
/// target's zero bits. With one_ancilla mode and >= 3 controls the circuit
/// gains an ancilla wire at index n.
Circuit build_oracle(int n, const std::string &target,
                     MctMode mode = MctMode::noancilla);

/// Reflection 2|s><s| - I about the uniform state of the scoped qubits
/// (identity elsewhere, global phase -1).
Circuit build_diffusion(int n, const std::vector<int> &scope_qubits,
                        MctMode mode = MctMode::noancilla);

Circuit build_standard_grover(const GroverConfig &config);
Circuit build_modified_grover(const GroverConfig &config);
Circuit build_grover(const GroverConfig &config);

/// Noiseless probability of measuring the target: closed form
/// sin^2((2k+1) asin(2^{-n/2})) for the standard variant, stage-wise vector
/// evaluation for modified schedules.
double ideal_success_probability(const GroverConfig &config);

/// Depth-reduced one-stage schedule: local-diffusion iterations on the first
/// ceil(n/2) qubits followed by global iterations, with the pair of counts
/// picked by exhaustive search (<= 2x the standard count each) maximizing the
/// ideal success probability.
StageSchedule default_m1ga_schedule(int n);

/// Two-stage schedule: independent standard searches on blocks of size
/// ceil(n/2) and floor(n/2); the first block is measured, the rest reset and
/// re-initialized.
StageSchedule default_m2ga_schedule(int n);

/// Config for one of the six studied algorithms with the all-ones target.
GroverConfig make_config(Algo algo, int n_qubits);

/// Total wires of the built circuit (n plus the shared ancilla when the mode
/// and size require one).
int circuit_wires(const GroverConfig &config);

} // namespace qsim::grover
