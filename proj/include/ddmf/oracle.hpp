#pragma once

#include "ddmf/circuit.hpp"
#include "ddmf/unitary.hpp"

#include <vector>

namespace ddmf {

/// Per-assignment trace: for a fixed classical input, each qubit's state is
/// per_qubit_matrix[i] |a_{i+1}>. Controls stay classical under the
/// semi-classical restriction, so each gate either left-multiplies U onto
/// its target's matrix or does nothing. A non-classical control matrix
/// stops the trace with scqc_ok = false.
struct AssignmentTrace {
  Assignment assignment;
  std::vector<Unitary2> per_qubit_matrix;
  bool scqc_ok = true;
  int violation_gate = 0;  // 1-based, 0 when ok
  int violation_qubit = 0; // 1-based, 0 when ok
};

struct StateVector {
  int num_qubits = 0;
  std::vector<CycNumber> amps; // 2^n amplitudes, qubit 1 is the high bit

  CycNumber norm_squared() const;
  bool operator==(const StateVector&) const = default;
};

/// Brute-force per-qubit reference. Matrices start at X^{a_i} so that
/// per_qubit_matrix[i] applied to |0> is the qubit's state; the initial
/// bit is folded in, so a classical control reads 0 from I and 1 from X.
/// Control checks run in control order; the first non-classical one wins.
AssignmentTrace simulate_assignment(const Circuit& c, unsigned ring_order,
                                    const Assignment& a);

/// Exact 2^n state-vector reference, no semi-classical assumption.
/// Throws std::invalid_argument above max_qubits.
StateVector statevector_simulate(const Circuit& c, unsigned ring_order,
                                 const Assignment& a, int max_qubits = 12);

/// Tensor product of the trace's per-qubit states (qubit 1 high bit).
StateVector product_state(const AssignmentTrace& t);

/// True iff for every basis input whose trace stays semi-classical, the
/// tensor product of per-qubit states equals the state vector exactly.
/// Inputs that violate the restriction are skipped.
bool crosscheck(const Circuit& c, unsigned ring_order, int max_qubits = 12);

} // namespace ddmf
