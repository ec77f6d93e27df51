#pragma once

#include "ddmf/unitary.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddmf {

enum class GateKind { X, V, VDag, R };

/// One control literal: positive fires on 1, negative on 0.
struct Control {
  int qubit;
  bool positive;
  bool operator==(const Control&) const = default;
};

/// One gate: base unitary, controls (sorted by qubit), target qubit.
/// Qubits are 1-based. R gates carry a dyadic angle, the others none.
struct Gate {
  GateKind kind;
  std::optional<DyadicAngle> angle;
  std::vector<Control> controls;
  int target;
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<std::string> labels; // always num_qubits entries
  std::vector<Gate> gates;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

/// Parses the circuit text format:
///
///   .qubits 3
///   .labels a b c      (optional; defaults to x1..xn)
///   V -a +c -> b       # gate lines: KIND controls... -> target
///   R(1/2) +a -> c
///
/// Gate kinds: X, V, V+ (adjoint of V), R(p/q) with q a power of two,
/// meaning the phase rotation by (p/q)*pi. '#' starts a comment. Errors
/// carry 1-based line and column positions.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse(serialize(c)) reproduces c. Emits .labels
/// only when labels differ from the x1..xn defaults.
std::string serialize_circuit(const Circuit& c);

/// Structural diagnostics for circuits assembled in memory, one message
/// per violation; empty for well-formed circuits. The parser enforces the
/// same rules, so parsed circuits always validate cleanly.
std::vector<std::string> validate_circuit(const Circuit& c);

/// Smallest cyclotomic ring order that represents every gate in the
/// circuit exactly. At least 8; grows with finer rotation angles.
unsigned required_ring_order(const Circuit& c);

/// The base 2x2 unitary of a gate (controls not included).
Unitary2 gate_matrix(unsigned ring_order, const Gate& g);

/// Display name: "X", "V", "V+", or "R(p/q)".
std::string gate_name(const Gate& g);

} // namespace ddmf
