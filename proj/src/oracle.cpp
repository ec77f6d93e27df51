#include "ddmf/oracle.hpp"

#include <stdexcept>

namespace ddmf {

namespace {

void check_assignment(const Circuit& c, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(c.num_qubits))
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, circuit has " +
                                std::to_string(c.num_qubits) + " qubits");
}

} // namespace

CycNumber StateVector::norm_squared() const {
  CycNumber total = CycNumber::zero(amps.empty() ? 8 : amps[0].order());
  for (const CycNumber& amp : amps) total += amp.abs_squared();
  return total;
}

AssignmentTrace simulate_assignment(const Circuit& c, unsigned ring_order,
                                    const Assignment& a) {
  check_assignment(c, a);
  AssignmentTrace t;
  t.assignment = a;
  const Unitary2 id = Unitary2::identity(ring_order);
  const Unitary2 x = Unitary2::pauli_x(ring_order);
  t.per_qubit_matrix.reserve(c.num_qubits);
  for (int i = 0; i < c.num_qubits; ++i)
    t.per_qubit_matrix.push_back(a[i] ? x : id);

  for (std::size_t j = 0; j < c.gates.size(); ++j) {
    const Gate& g = c.gates[j];
    bool triggered = true;
    for (const Control& ctrl : g.controls) {
      const Unitary2& m = t.per_qubit_matrix[ctrl.qubit - 1];
      if (!m.is_classical()) {
        t.scqc_ok = false;
        t.violation_gate = static_cast<int>(j) + 1;
        t.violation_qubit = ctrl.qubit;
        return t;
      }
      bool value = m.is_pauli_x();
      if (value != ctrl.positive) triggered = false;
    }
    if (triggered) {
      Unitary2& target = t.per_qubit_matrix[g.target - 1];
      target = gate_matrix(ring_order, g) * target;
    }
  }
  return t;
}

StateVector statevector_simulate(const Circuit& c, unsigned ring_order,
                                 const Assignment& a, int max_qubits) {
  check_assignment(c, a);
  if (c.num_qubits > max_qubits)
    throw std::invalid_argument("state-vector cap is " +
                                std::to_string(max_qubits) + " qubits, circuit has " +
                                std::to_string(c.num_qubits));
  const int n = c.num_qubits;
  const std::size_t dim = std::size_t(1) << n;

  StateVector sv;
  sv.num_qubits = n;
  sv.amps.assign(dim, CycNumber::zero(ring_order));
  std::size_t start = 0;
  for (int i = 0; i < n; ++i)
    if (a[i]) start |= std::size_t(1) << (n - 1 - i);
  sv.amps[start] = CycNumber::one(ring_order);

  for (const Gate& g : c.gates) {
    const Unitary2 u = gate_matrix(ring_order, g);
    const std::size_t target_bit = std::size_t(1) << (n - g.target);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (idx & target_bit) continue;
      bool fire = true;
      for (const Control& ctrl : g.controls) {
        bool bit = (idx >> (n - ctrl.qubit)) & 1;
        if (bit != ctrl.positive) {
          fire = false;
          break;
        }
      }
      if (!fire) continue;
      std::size_t partner = idx | target_bit;
      CycNumber a0 = sv.amps[idx];
      CycNumber a1 = sv.amps[partner];
      sv.amps[idx] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
      sv.amps[partner] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
  }
  return sv;
}

StateVector product_state(const AssignmentTrace& t) {
  const int n = static_cast<int>(t.per_qubit_matrix.size());
  const unsigned order = t.per_qubit_matrix[0].order();
  std::vector<QubitState> states;
  states.reserve(n);
  for (const Unitary2& m : t.per_qubit_matrix)
    states.push_back(apply_to_ket0(m));

  StateVector sv;
  sv.num_qubits = n;
  const std::size_t dim = std::size_t(1) << n;
  sv.amps.reserve(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    CycNumber amp = CycNumber::one(order);
    for (int i = 0; i < n; ++i) {
      bool bit = (idx >> (n - 1 - i)) & 1;
      amp *= bit ? states[i].amp1 : states[i].amp0;
      if (amp.is_zero()) break;
    }
    sv.amps.push_back(amp);
  }
  return sv;
}

bool crosscheck(const Circuit& c, unsigned ring_order, int max_qubits) {
  if (c.num_qubits > max_qubits)
    throw std::invalid_argument("state-vector cap is " +
                                std::to_string(max_qubits) + " qubits, circuit has " +
                                std::to_string(c.num_qubits));
  const std::size_t dim = std::size_t(1) << c.num_qubits;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Assignment a(c.num_qubits);
    for (int i = 0; i < c.num_qubits; ++i)
      a[i] = (idx >> (c.num_qubits - 1 - i)) & 1;
    AssignmentTrace t = simulate_assignment(c, ring_order, a);
    if (!t.scqc_ok) continue;
    if (!(product_state(t) == statevector_simulate(c, ring_order, a, max_qubits)))
      return false;
  }
  return true;
}

} // namespace ddmf
