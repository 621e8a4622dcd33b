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

#include "qsim/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "qsim/error.hpp"

namespace qsim {

namespace {

std::string fmt_angle(double a) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", a);
  return buf;
}

std::string qubit_list(const std::vector<int> &qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i)
      out += ",";
    out += "q[" + std::to_string(qs[i]) + "]";
  }
  return out;
}

struct Parser {
  explicit Parser(const std::string &text) : in(text) {}

  std::istringstream in;
  int n_qubits = 0;
  int n_cbits = 0;

  static void fail(const std::string &line, const std::string &why) {
    throw ValidationError("qasm: " + why + " in line: " + line);
  }

  static std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  }

  static std::string strip(const std::string &s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
      ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
      --b;
    return s.substr(a, b - a);
  }

  static int parse_index(const std::string &token, char reg,
                         const std::string &line) {
    const std::string t = strip(token);
    if (t.size() < 4 || t[0] != reg || t[1] != '[' || t.back() != ']')
      fail(line, std::string("expected ") + reg + "[i]");
    try {
      return std::stoi(t.substr(2, t.size() - 3));
    } catch (const std::exception &) {
      fail(line, "bad index");
    }
    return -1;
  }
};

} // namespace

std::string to_qasm(const Circuit &circuit) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.n_qubits()) + "];\n";
  if (circuit.classical_bits() > 0)
    out += "creg c[" + std::to_string(circuit.classical_bits()) + "];\n";
  for (const Instruction &instr : circuit.instructions()) {
    switch (instr.kind) {
    case Kind::U1:
      out += "u1(" + fmt_angle(instr.params[0]) + ") " +
             qubit_list(instr.qubits) + ";\n";
      break;
    case Kind::U2:
      out += "u2(" + fmt_angle(instr.params[0]) + "," +
             fmt_angle(instr.params[1]) + ") " + qubit_list(instr.qubits) +
             ";\n";
      break;
    case Kind::U3:
      out += "u3(" + fmt_angle(instr.params[0]) + "," +
             fmt_angle(instr.params[1]) + "," + fmt_angle(instr.params[2]) +
             ") " + qubit_list(instr.qubits) + ";\n";
      break;
    case Kind::CX:
      out += "cx " + qubit_list(instr.qubits) + ";\n";
      break;
    case Kind::H:
    case Kind::X:
    case Kind::Z:
      out += to_string(instr.kind) + " " + qubit_list(instr.qubits) + ";\n";
      break;
    case Kind::MCT:
      if (instr.qubits.size() == 3)
        out += "ccx " + qubit_list(instr.qubits) + ";\n";
      else
        out += "mct " + qubit_list(instr.qubits) + ";\n";
      break;
    case Kind::Measure:
      out += "measure q[" + std::to_string(instr.qubits[0]) + "] -> c[" +
             std::to_string(instr.cbit) + "];\n";
      break;
    case Kind::Reset:
      out += "reset q[" + std::to_string(instr.qubits[0]) + "];\n";
      break;
    }
  }
  return out;
}

Circuit from_qasm(const std::string &text) {
  Parser p(text);
  Circuit circuit;
  bool have_qreg = false;
  std::string raw;
  while (std::getline(p.in, raw)) {
    std::string line = raw;
    if (const auto pos = line.find("//"); pos != std::string::npos)
      line = line.substr(0, pos);
    line = Parser::strip(line);
    if (line.empty())
      continue;
    if (line.back() != ';')
      Parser::fail(raw, "missing ';'");
    line.pop_back();
    line = Parser::strip(line);

    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0)
      continue;
    if (line.rfind("qreg", 0) == 0) {
      p.n_qubits = Parser::parse_index(line.substr(4), 'q', raw);
      have_qreg = true;
      continue;
    }
    if (line.rfind("creg", 0) == 0) {
      p.n_cbits = Parser::parse_index(line.substr(4), 'c', raw);
      continue;
    }
    if (!have_qreg)
      Parser::fail(raw, "instruction before qreg");
    if (circuit.n_qubits() == 0)
      circuit = Circuit(p.n_qubits, p.n_cbits);

    // name[(params)] operands
    std::string name, params_str, operands;
    if (const auto open = line.find('('); open != std::string::npos) {
      const auto close = line.find(')', open);
      if (close == std::string::npos)
        Parser::fail(raw, "unbalanced parentheses");
      name = Parser::strip(line.substr(0, open));
      params_str = line.substr(open + 1, close - open - 1);
      operands = Parser::strip(line.substr(close + 1));
    } else {
      const auto sp = line.find(' ');
      if (sp == std::string::npos)
        Parser::fail(raw, "missing operands");
      name = line.substr(0, sp);
      operands = Parser::strip(line.substr(sp + 1));
    }

    std::vector<double> params;
    if (!params_str.empty())
      for (const std::string &tok : Parser::split(params_str, ','))
        try {
          params.push_back(std::stod(Parser::strip(tok)));
        } catch (const std::exception &) {
          Parser::fail(raw, "bad angle");
        }

    if (name == "measure") {
      const auto arrow = operands.find("->");
      if (arrow == std::string::npos)
        Parser::fail(raw, "measure needs '->'");
      const int q = Parser::parse_index(operands.substr(0, arrow), 'q', raw);
      const int c = Parser::parse_index(operands.substr(arrow + 2), 'c', raw);
      circuit.measure(q, c);
      continue;
    }

    std::vector<int> qs;
    for (const std::string &tok : Parser::split(operands, ','))
      qs.push_back(Parser::parse_index(tok, 'q', raw));

    if (name == "u1" && params.size() == 1 && qs.size() == 1)
      circuit.u1(params[0], qs[0]);
    else if (name == "u2" && params.size() == 2 && qs.size() == 1)
      circuit.u2(params[0], params[1], qs[0]);
    else if (name == "u3" && params.size() == 3 && qs.size() == 1)
      circuit.u3(params[0], params[1], params[2], qs[0]);
    else if (name == "h" && qs.size() == 1)
      circuit.h(qs[0]);
    else if (name == "x" && qs.size() == 1)
      circuit.x(qs[0]);
    else if (name == "z" && qs.size() == 1)
      circuit.z(qs[0]);
    else if (name == "cx" && qs.size() == 2)
      circuit.cx(qs[0], qs[1]);
    else if ((name == "ccx" || name == "mct") && qs.size() >= 2)
      circuit.mct(std::vector<int>(qs.begin(), qs.end() - 1), qs.back());
    else if (name == "reset" && qs.size() == 1)
      circuit.reset(qs[0]);
    else
      Parser::fail(raw, "unsupported instruction '" + name + "'");
  }
  if (!have_qreg)
    throw ValidationError("qasm: no qreg declaration");
  if (circuit.n_qubits() == 0)
    circuit = Circuit(p.n_qubits, p.n_cbits);
  return circuit;
}

} // namespace qsim
