#pragma once

#include "ddmf/circuit.hpp"
#include "ddmf/ddmf.hpp"

#include <optional>
#include <vector>

namespace ddmf {

/// Per-qubit functionality of a circuit prefix: qubit_functions[i] is the
/// DDMF of qubit i+1's state as a function of the inputs x1..xn. Starts at
/// variable(i+1) for every qubit; gates_applied counts the folded prefix.
struct CircuitState {
  DdmfManager* manager = nullptr;
  std::vector<Ddmf> qubit_functions;
  int gates_applied = 0;
};

/// First gate whose control function is not Boolean, with a concrete input
/// assignment under which that control qubit holds a non-classical matrix.
struct ScqcViolation {
  int gate_index;   // 1-based
  int control_qubit; // 1-based
  Assignment witness;
};

struct BuildStats {
  std::size_t total_nodes = 0;     // nonterminal nodes interned, cumulative
  std::size_t peak_live_nodes = 0; // max reachable from all qubit roots
  double millis = 0.0;
};

struct BuildOutcome {
  CircuitState state;
  std::optional<ScqcViolation> violation;
  BuildStats stats;

  bool ok() const { return !violation.has_value(); }
};

struct VerificationReport {
  enum class Verdict { Equivalent, Inequivalent, NotScqc };

  Verdict verdict;
  std::vector<bool> qubit_equal; // empty unless built both circuits
  // Inequivalent only:
  int first_differing_qubit = 0;
  std::optional<Assignment> counterexample;
  int counterexample_qubit = 0;
  // NotScqc only:
  int violating_circuit = 0; // 1 or 2
  std::optional<ScqcViolation> violation;
  BuildStats stats;
};

CircuitState init_state(DdmfManager& mgr, int n);

/// AND of the positive controls' functions and the complements of the
/// negative ones; uncontrolled gates yield constant-true. A non-Boolean
/// control function means the circuit leaves the semi-classical fragment:
/// nullopt is returned and the violation is reported by the caller.
std::optional<Ddmf> control_function(const CircuitState& state, const Gate& g,
                                     int* bad_control = nullptr);

/// Folds one gate: target becomes compose(select(g, constant(U)), target),
/// so the gate matrix lands on the left of the accumulated function.
/// Other qubits are untouched.
std::optional<ScqcViolation> apply_gate(CircuitState& state, const Gate& g);

/// Builds all per-qubit DDMFs, stopping at the first violating gate.
BuildOutcome build_functions(const Circuit& c, DdmfManager& mgr);

/// Full pipeline: one shared manager sized for both circuits, both built,
/// qubits compared by handle identity. Throws std::invalid_argument on a
/// qubit-count mismatch.
VerificationReport check_equivalence(const Circuit& a, const Circuit& b,
                                     bool want_counterexample = true,
                                     std::size_t node_limit = 0);

/// Assignment on which two DDMFs evaluate differently, found by descending
/// into a cofactor pair that stays unequal; nullopt iff the handles are
/// equal. Canonicity makes the descent total: unequal parents always have
/// an unequal cofactor pair.
std::optional<Assignment> find_counterexample(DdmfManager& mgr, Ddmf a, Ddmf b);

/// Assignment under which the DDMF takes a non-classical value; nullopt
/// iff it is Boolean.
std::optional<Assignment> find_nonboolean_witness(DdmfManager& mgr, Ddmf f);

} // namespace ddmf
