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

#include "qsim/circuit.hpp"

namespace qsim {

/// OpenQASM-2.0-subset text form, one instruction per line, angles printed
/// with six decimals. Multi-controlled Toffolis are emitted as ccx (two
/// controls) or an `mct` extension line.
std::string to_qasm(const Circuit &circuit);

/// Parses the subset emitted by to_qasm (header lines and // comments are
/// tolerated). Throws ValidationError on malformed input.
Circuit from_qasm(const std::string &text);

} // namespace qsim
