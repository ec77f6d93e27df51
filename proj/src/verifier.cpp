#include "ddmf/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace ddmf {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

} // namespace

CircuitState init_state(DdmfManager& mgr, int n) {
  if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  if (n > mgr.num_vars())
    throw std::invalid_argument("manager has " +
                                std::to_string(mgr.num_vars()) +
                                " variables, circuit needs " + std::to_string(n));
  CircuitState state;
  state.manager = &mgr;
  state.qubit_functions.reserve(n);
  for (int i = 1; i <= n; ++i) state.qubit_functions.push_back(mgr.variable(i));
  return state;
}

std::optional<Ddmf> control_function(const CircuitState& state, const Gate& g,
                                     int* bad_control) {
  DdmfManager& mgr = *state.manager;
  Ddmf acc = mgr.constant(Unitary2::pauli_x(mgr.ring_order())); // constant-true
  for (const Control& ctrl : g.controls) {
    Ddmf f = state.qubit_functions[ctrl.qubit - 1];
    if (!mgr.is_boolean(f)) {
      if (bad_control) *bad_control = ctrl.qubit;
      return std::nullopt;
    }
    acc = mgr.bool_and(acc, ctrl.positive ? f : mgr.bool_not(f));
  }
  return acc;
}

std::optional<ScqcViolation> apply_gate(CircuitState& state, const Gate& g) {
  DdmfManager& mgr = *state.manager;
  int bad_control = 0;
  std::optional<Ddmf> guard = control_function(state, g, &bad_control);
  if (!guard) {
    ScqcViolation v;
    v.gate_index = state.gates_applied + 1;
    v.control_qubit = bad_control;
    v.witness =
        *find_nonboolean_witness(mgr, state.qubit_functions[bad_control - 1]);
    return v;
  }
  Ddmf gate_fn = mgr.select(*guard, mgr.constant(gate_matrix(mgr.ring_order(), g)));
  Ddmf& target = state.qubit_functions[g.target - 1];
  target = mgr.compose(gate_fn, target);
  ++state.gates_applied;
  return std::nullopt;
}

BuildOutcome build_functions(const Circuit& c, DdmfManager& mgr) {
  auto start = std::chrono::steady_clock::now();
  BuildOutcome out;
  out.state = init_state(mgr, c.num_qubits);
  out.stats.peak_live_nodes = mgr.live_nodes(out.state.qubit_functions);
  for (const Gate& g : c.gates) {
    out.violation = apply_gate(out.state, g);
    if (out.violation) break;
    out.stats.peak_live_nodes = std::max(
        out.stats.peak_live_nodes, mgr.live_nodes(out.state.qubit_functions));
  }
  out.stats.total_nodes = mgr.allocated_nodes();
  out.stats.millis = elapsed_ms(start);
  return out;
}

VerificationReport check_equivalence(const Circuit& a, const Circuit& b,
                                     bool want_counterexample,
                                     std::size_t node_limit) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("qubit-count mismatch: " +
                                std::to_string(a.num_qubits) + " vs " +
                                std::to_string(b.num_qubits));
  auto start = std::chrono::steady_clock::now();
  unsigned order = std::max(required_ring_order(a), required_ring_order(b));
  DdmfManager mgr(order, a.num_qubits, node_limit);

  VerificationReport report;
  BuildOutcome ba = build_functions(a, mgr);
  if (!ba.ok()) {
    report.verdict = VerificationReport::Verdict::NotScqc;
    report.violating_circuit = 1;
    report.violation = ba.violation;
    report.stats = ba.stats;
    report.stats.millis = elapsed_ms(start);
    return report;
  }
  BuildOutcome bb = build_functions(b, mgr);
  report.stats.total_nodes = mgr.allocated_nodes();
  report.stats.peak_live_nodes =
      std::max(ba.stats.peak_live_nodes, bb.stats.peak_live_nodes);
  if (!bb.ok()) {
    report.verdict = VerificationReport::Verdict::NotScqc;
    report.violating_circuit = 2;
    report.violation = bb.violation;
    report.stats.millis = elapsed_ms(start);
    return report;
  }

  report.qubit_equal.resize(a.num_qubits);
  report.verdict = VerificationReport::Verdict::Equivalent;
  for (int i = 0; i < a.num_qubits; ++i) {
    bool eq = mgr.equal(ba.state.qubit_functions[i], bb.state.qubit_functions[i]);
    report.qubit_equal[i] = eq;
    if (!eq && report.first_differing_qubit == 0) {
      report.verdict = VerificationReport::Verdict::Inequivalent;
      report.first_differing_qubit = i + 1;
    }
  }
  if (report.verdict == VerificationReport::Verdict::Inequivalent &&
      want_counterexample) {
    int q = report.first_differing_qubit;
    report.counterexample = find_counterexample(
        mgr, ba.state.qubit_functions[q - 1], bb.state.qubit_functions[q - 1]);
    report.counterexample_qubit = q;
  }
  report.stats.millis = elapsed_ms(start);
  return report;
}

std::optional<Assignment> find_counterexample(DdmfManager& mgr, Ddmf a, Ddmf b) {
  if (mgr.equal(a, b)) return std::nullopt;
  Assignment bits(mgr.num_vars(), 0);
  for (int i = 1; i <= mgr.num_vars(); ++i) {
    Ddmf a0 = mgr.cofactor(a, i, 0);
    Ddmf b0 = mgr.cofactor(b, i, 0);
    if (!mgr.equal(a0, b0)) {
      bits[i - 1] = 0;
      a = a0;
      b = b0;
    } else {
      bits[i - 1] = 1;
      a = mgr.cofactor(a, i, 1);
      b = mgr.cofactor(b, i, 1);
    }
  }
  return bits;
}

std::optional<Assignment> find_nonboolean_witness(DdmfManager& mgr, Ddmf f) {
  if (mgr.is_boolean(f)) return std::nullopt;
  Assignment bits(mgr.num_vars(), 0);
  for (int i = 1; i <= mgr.num_vars(); ++i) {
    Ddmf f0 = mgr.cofactor(f, i, 0);
    if (!mgr.is_boolean(f0)) {
      bits[i - 1] = 0;
      f = f0;
    } else {
      bits[i - 1] = 1;
      f = mgr.cofactor(f, i, 1);
    }
  }
  return bits;
}

} // namespace ddmf
