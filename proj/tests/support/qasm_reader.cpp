#include "support/qasm_reader.hpp"

#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace testing_qasm {

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"((-?\d+)?(\*)?(-?)pi(/(\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double v = std::numbers::pi;
    if (m[1].matched) v *= std::stod(m[1]);
    if (m[3].length()) v = -v;
    if (m[5].matched) v /= std::stod(m[5]);
    return v;
  }
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::runtime_error("bad angle " + text);
  return v;
}

Program read(const std::string& text) {
  static const std::regex qreg(R"(qreg q\[(\d+)\];)");
  static const std::regex creg(R"(creg c\[(\d+)\];)");
  static const std::regex measure(R"(measure q\[(\d+)\] -> c\[(\d+)\];)");
  static const std::regex gate(R"((\w+)(\(([^)]*)\))? (q\[\d+\](,q\[\d+\])*);)");
  static const std::regex operand(R"(q\[(\d+)\])");

  Program p;
  std::istringstream in(text);
  std::string line;
  bool body = false;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!body) {
      if (std::regex_match(line, m, qreg)) {
        p.num_qubits = std::stoi(m[1]);
        p.circuit = qwalk::Circuit(p.num_qubits);
        body = true;
      } else {
        p.header.push_back(line);
      }
      continue;
    }
    if (line.empty()) continue;
    if (std::regex_match(line, m, creg)) {
      p.has_creg = true;
    } else if (std::regex_match(line, m, measure)) {
      ++p.measures;
    } else if (std::regex_match(line, m, gate)) {
      const std::string name = m[1];
      std::vector<int> q;
      const std::string args = m[4];
      for (auto it = std::sregex_iterator(args.begin(), args.end(), operand);
           it != std::sregex_iterator(); ++it) {
        q.push_back(std::stoi((*it)[1]));
      }
      const double angle = m[3].matched ? parse_angle(m[3]) : 0.0;
      auto need = [&](std::size_t n) {
        if (q.size() != n) throw std::runtime_error("wrong arity: " + line);
      };
      if (name == "h") need(1), p.circuit.h(q[0]);
      else if (name == "x") need(1), p.circuit.x(q[0]);
      else if (name == "rz") need(1), p.circuit.phase(q[0], angle);
      else if (name == "cx") need(2), p.circuit.cx(q[0], q[1]);
      else if (name == "cu1") need(2), p.circuit.cp(q[0], q[1], angle);
      else if (name == "swap") need(2), p.circuit.swap(q[0], q[1]);
      else if (name == "ccx") need(3), p.circuit.ccx(q[0], q[1], q[2]);
      else throw std::runtime_error("unknown gate: " + line);
      p.ops.push_back(name);
    } else {
      throw std::runtime_error("unparsed line: " + line);
    }
  }
  if (!body) throw std::runtime_error("no qreg declaration");
  return p;
}

}  // namespace testing_qasm
