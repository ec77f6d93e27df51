#include "ddmf/ddmf.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <map>

using namespace ddmf;
using namespace test_helpers;

namespace {

Unitary2 rot(unsigned order, long p, unsigned m) {
  return Unitary2::rotation(order, DyadicAngle::of(p, m));
}

} // namespace

TEST_CASE("terminal is the constant identity function") {
  DdmfManager mgr(8, 3);
  Ddmf t = mgr.terminal();
  for (const auto& a : all_assignments(3))
    CHECK(mgr.evaluate(t, a).is_identity());
  CHECK(mgr.is_boolean(t));
  CHECK(mgr.node_count(t) == 0);

  Ddmf d = mgr.variable(2);
  CHECK(mgr.equal(mgr.compose(t, d), d));
  CHECK(mgr.equal(mgr.compose(d, t), d));
}

TEST_CASE("constants evaluate to their matrix everywhere") {
  DdmfManager mgr(8, 2);
  Unitary2 r = rot(8, 1, 1);
  Ddmf c = mgr.constant(r);
  for (const auto& a : all_assignments(2)) CHECK(mgr.evaluate(c, a) == r);
  CHECK_FALSE(mgr.is_boolean(c));

  CHECK(mgr.equal(mgr.constant(Unitary2::identity(8)), mgr.terminal()));

  Ddmf v = mgr.constant(Unitary2::v_gate(8));
  CHECK(mgr.equal(mgr.compose(v, v), mgr.constant(Unitary2::pauli_x(8))));
}

TEST_CASE("variables are single-node Boolean indicators") {
  DdmfManager mgr(8, 3);
  Ddmf x2 = mgr.variable(2);
  CHECK(mgr.evaluate(x2, {0, 1, 0}).is_pauli_x());
  CHECK(mgr.evaluate(x2, {1, 0, 1}).is_identity());
  CHECK(mgr.is_boolean(x2));
  CHECK(mgr.node_count(x2) == 1);
  CHECK(mgr.equal(mgr.variable(2), x2)); // interned
  CHECK_THROWS_AS(mgr.variable(0), std::invalid_argument);
  CHECK_THROWS_AS(mgr.variable(4), std::invalid_argument);
}

TEST_CASE("compose is the pointwise matrix product") {
  DdmfManager mgr(16, 3);
  std::mt19937_64 rng(11);
  auto random_fn = [&](const Assignment&) {
    switch (rng() % 4) {
    case 0: return Unitary2::identity(16);
    case 1: return Unitary2::v_gate(16);
    case 2: return rot(16, long(rng() % 8), 2);
    default: return Unitary2::pauli_x(16);
    }
  };
  for (int round = 0; round < 6; ++round) {
    Ddmf a = from_truth_table(mgr, 3, random_fn);
    Ddmf b = from_truth_table(mgr, 3, random_fn);
    Ddmf ab = mgr.compose(a, b);
    for (const auto& bits : all_assignments(3))
      CHECK(mgr.evaluate(ab, bits) ==
            mgr.evaluate(a, bits) * mgr.evaluate(b, bits));
  }
}

TEST_CASE("compose is associative with terminal as two-sided identity") {
  DdmfManager mgr(8, 2);
  Ddmf a = mgr.select(mgr.variable(1), mgr.constant(Unitary2::v_gate(8)));
  Ddmf b = mgr.select(mgr.variable(2), mgr.constant(rot(8, 1, 1)));
  Ddmf c = mgr.compose(mgr.variable(1), mgr.variable(2));
  CHECK(mgr.equal(mgr.compose(mgr.compose(a, b), c),
                  mgr.compose(a, mgr.compose(b, c))));
  CHECK(mgr.equal(mgr.compose(a, mgr.terminal()), a));
  CHECK(mgr.equal(mgr.compose(mgr.terminal(), a), a));
}

TEST_CASE("compose order matters for non-commuting values") {
  DdmfManager mgr(8, 1);
  Ddmf rx = mgr.select(mgr.variable(1), mgr.constant(Unitary2::pauli_x(8)));
  Ddmf r = mgr.constant(rot(8, 1, 1));
  Ddmf ab = mgr.compose(r, rx);
  Ddmf ba = mgr.compose(rx, r);
  CHECK_FALSE(mgr.equal(ab, ba));
  CHECK(mgr.evaluate(ab, {1}) == rot(8, 1, 1) * Unitary2::pauli_x(8));
  CHECK(mgr.evaluate(ba, {1}) == Unitary2::pauli_x(8) * rot(8, 1, 1));
}

TEST_CASE("compose acts as exclusive-or on Boolean functions") {
  DdmfManager mgr(8, 2);
  CHECK(mgr.equal(mgr.compose(mgr.variable(1), mgr.variable(1)), mgr.terminal()));
  Ddmf parity = mgr.compose(mgr.variable(1), mgr.variable(2));
  CHECK(mgr.is_boolean(parity));
  for (const auto& a : all_assignments(2))
    CHECK(mgr.evaluate(parity, a).is_pauli_x() == ((a[0] ^ a[1]) != 0));
}

TEST_CASE("select guards a function by a Boolean condition") {
  DdmfManager mgr(16, 3);
  std::mt19937_64 rng(23);
  auto random_fn = [&](const Assignment&) {
    return rng() % 2 ? Unitary2::v_gate(16) : rot(16, 1, 2);
  };
  Ddmf f = mgr.compose(mgr.variable(1), mgr.variable(3)); // Boolean guard
  Ddmf g = from_truth_table(mgr, 3, random_fn);
  Ddmf sel = mgr.select(f, g);
  for (const auto& bits : all_assignments(3)) {
    Unitary2 expect = mgr.evaluate(f, bits).is_pauli_x()
                          ? mgr.evaluate(g, bits)
                          : Unitary2::identity(16);
    CHECK(mgr.evaluate(sel, bits) == expect);
  }
  CHECK(mgr.equal(mgr.select(f, mgr.terminal()), mgr.terminal()));
}

TEST_CASE("select rejects non-Boolean guards") {
  DdmfManager mgr(8, 2);
  Ddmf v = mgr.constant(Unitary2::v_gate(8));
  CHECK_THROWS_AS(mgr.select(v, mgr.variable(1)), BooleanRequiredError);
  CHECK_THROWS_AS(mgr.bool_not(v), BooleanRequiredError);
  CHECK_THROWS_AS(mgr.bool_and(v, mgr.variable(1)), BooleanRequiredError);
  CHECK_THROWS_AS(mgr.bool_and(mgr.variable(1), v), BooleanRequiredError);
}

TEST_CASE("select acts as conjunction on Boolean functions") {
  DdmfManager mgr(8, 4);
  for (const auto& a : all_assignments(2)) {
    Ddmf f = a[0] ? mgr.constant(Unitary2::pauli_x(8)) : mgr.terminal();
    Ddmf g = a[1] ? mgr.constant(Unitary2::pauli_x(8)) : mgr.terminal();
    Ddmf conj = mgr.select(f, g);
    CHECK(mgr.evaluate(conj, {0, 0, 0, 0}).is_pauli_x() == (a[0] && a[1]));
  }
  // And over full assignments of two variables.
  Ddmf both = mgr.bool_and(mgr.variable(1), mgr.variable(2));
  for (const auto& a : all_assignments(4))
    CHECK(mgr.evaluate(both, a).is_pauli_x() == (a[0] && a[1]));
}

TEST_CASE("negated-literal conjunction matches its truth table") {
  // x1' and x3: the control function of a gate with a negative control
  // on qubit 1 and a positive control on qubit 3.
  DdmfManager mgr(8, 3);
  Ddmf g = mgr.bool_and(mgr.bool_not(mgr.variable(1)), mgr.variable(3));
  CHECK(mgr.is_boolean(g));
  for (const auto& a : all_assignments(3))
    CHECK(mgr.evaluate(g, a).is_pauli_x() == (!a[0] && a[2]));

  Ddmf f = mgr.variable(2);
  CHECK(mgr.equal(mgr.bool_not(mgr.bool_not(f)), f));
  CHECK(mgr.equal(mgr.bool_and(f, mgr.terminal()), mgr.terminal()));
}

TEST_CASE("guarded-V function has the minimal two-node diagram") {
  DdmfManager mgr(8, 3);
  Ddmf g = mgr.bool_and(mgr.bool_not(mgr.variable(1)), mgr.variable(3));
  Ddmf d = mgr.select(g, mgr.constant(Unitary2::v_gate(8)));
  for (const auto& a : all_assignments(3)) {
    Unitary2 expect =
        (!a[0] && a[2]) ? Unitary2::v_gate(8) : Unitary2::identity(8);
    CHECK(mgr.evaluate(d, a) == expect);
  }
  CHECK(mgr.node_count(d) == 2); // one node for x1, one for x3
  CHECK_FALSE(mgr.is_boolean(d));
}

TEST_CASE("cofactor restricts one variable") {
  DdmfManager mgr(8, 3);
  Ddmf x2 = mgr.variable(2);
  CHECK(mgr.equal(mgr.cofactor(x2, 2, 1), mgr.constant(Unitary2::pauli_x(8))));
  CHECK(mgr.equal(mgr.cofactor(x2, 2, 0), mgr.terminal()));
  CHECK(mgr.equal(mgr.cofactor(x2, 1, 1), x2)); // unused variable

  Ddmf g = mgr.bool_and(mgr.bool_not(mgr.variable(1)), mgr.variable(3));
  Ddmf d = mgr.select(g, mgr.constant(Unitary2::v_gate(8)));
  CHECK(mgr.equal(mgr.cofactor(d, 1, 1), mgr.terminal())); // guard off

  CHECK_THROWS_AS(mgr.cofactor(d, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(mgr.cofactor(d, 1, 2), std::invalid_argument);
}

TEST_CASE("cofactor agrees with evaluation under restriction") {
  DdmfManager mgr(16, 3);
  DdmfManager& m = mgr;
  RandomDdmfPool pool(m, 77);
  for (int round = 0; round < 40; ++round) {
    Ddmf d = pool.next();
    for (int var = 1; var <= 3; ++var) {
      for (int bit = 0; bit < 2; ++bit) {
        Ddmf c = m.cofactor(d, var, bit);
        for (auto a : all_assignments(3)) {
          Assignment restricted = a;
          restricted[var - 1] = static_cast<std::uint8_t>(bit);
          CHECK(m.evaluate_id(c, a) == m.evaluate_id(d, restricted));
        }
      }
    }
  }
}

TEST_CASE("handle equality is pointwise equality over random diagrams") {
  DdmfManager mgr(16, 4);
  RandomDdmfPool pool(mgr, 12345);
  std::map<std::vector<MatrixId>, Ddmf> seen;
  for (int round = 0; round < 300; ++round) {
    Ddmf d = pool.next();
    auto sig = signature(mgr, d, 4);
    auto [it, inserted] = seen.try_emplace(sig, d);
    if (!inserted) CHECK(mgr.equal(it->second, d));
  }
  // Distinct signatures must give distinct handles.
  int checked = 0;
  for (auto i = seen.begin(); i != seen.end() && checked < 50; ++i, ++checked) {
    auto j = std::next(i);
    if (j != seen.end()) CHECK_FALSE(mgr.equal(i->second, j->second));
  }
}

TEST_CASE("one function built different ways lands on one handle") {
  DdmfManager mgr(16, 3);
  std::mt19937_64 rng(5);
  std::vector<Unitary2> values;
  for (int i = 0; i < 8; ++i)
    values.push_back(rng() % 2 ? Unitary2::v_gate(16) : rot(16, 1, 2));
  auto fn = [&](const Assignment& a) {
    return values[std::size_t(a[0]) * 4 + a[1] * 2 + a[2]];
  };
  Ddmf forward = from_truth_table(mgr, 3, fn, false);
  Ddmf backward = from_truth_table(mgr, 3, fn, true);
  CHECK(mgr.equal(forward, backward));

  // Parity built by composition vs truth table.
  Ddmf composed = mgr.compose(mgr.variable(1),
                              mgr.compose(mgr.variable(2), mgr.variable(3)));
  Ddmf tabulated = from_truth_table(mgr, 3, [](const Assignment& a) {
    return (a[0] ^ a[1] ^ a[2]) ? Unitary2::pauli_x(16) : Unitary2::identity(16);
  });
  CHECK(mgr.equal(composed, tabulated));
}

TEST_CASE("zero-branch weights migrate into the incoming edge") {
  DdmfManager mgr(8, 1);
  // Value V when x1=0 and I when x1=1, built from the table; canonically
  // the V sits on the root edge with the node holding V adjoint.
  Ddmf tabulated = from_truth_table(mgr, 1, [](const Assignment& a) {
    return a[0] ? Unitary2::identity(8) : Unitary2::v_gate(8);
  });
  Ddmf rebuilt = mgr.compose(
      mgr.constant(Unitary2::v_gate(8)),
      mgr.select(mgr.variable(1), mgr.constant(Unitary2::v_dag(8))));
  CHECK(mgr.equal(tabulated, rebuilt));
  CHECK(mgr.evaluate(tabulated, {0}) == Unitary2::v_gate(8));
  CHECK(mgr.evaluate(tabulated, {1}).is_identity());
  CHECK(mgr.node_count(tabulated) == 1);
}

TEST_CASE("structural Boolean test matches the pointwise definition") {
  DdmfManager mgr(16, 4);
  RandomDdmfPool pool(mgr, 99);
  int booleans = 0;
  for (int round = 0; round < 200; ++round) {
    Ddmf d = pool.next();
    bool structural = mgr.is_boolean(d);
    CHECK(structural == pointwise_boolean(mgr, d, 4));
    booleans += structural;
  }
  CHECK(booleans > 0); // the pool must exercise both outcomes
  CHECK(booleans < 200);
}

TEST_CASE("handles from different managers do not mix") {
  DdmfManager m1(8, 2);
  DdmfManager m2(8, 2);
  Ddmf a = m1.variable(1);
  Ddmf b = m2.variable(1);
  CHECK_THROWS_AS(m1.compose(a, b), ManagerMismatchError);
  CHECK_THROWS_AS(m1.select(b, a), ManagerMismatchError);
  CHECK_THROWS_AS(m1.equal(a, b), ManagerMismatchError);
  CHECK_THROWS_AS(m2.evaluate(a, {0, 0}), ManagerMismatchError);
}

TEST_CASE("evaluate validates the assignment width") {
  DdmfManager mgr(8, 3);
  CHECK_THROWS_AS(mgr.evaluate(mgr.variable(1), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mgr.evaluate(mgr.variable(1), {0, 1, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("node limit aborts construction") {
  DdmfManager limited(8, 4, 2);
  Ddmf x1 = limited.variable(1);
  Ddmf x2 = limited.variable(2);
  (void)x1;
  (void)x2;
  CHECK_THROWS_AS(limited.variable(3), NodeLimitError);

  DdmfManager unlimited(8, 4, 0);
  for (int i = 1; i <= 4; ++i) (void)unlimited.variable(i);
  CHECK(unlimited.allocated_nodes() == 4);
}

TEST_CASE("ring order of constants must match the manager") {
  DdmfManager mgr(8, 1);
  CHECK_THROWS_AS(mgr.constant(Unitary2::identity(16)), RingError);
}

TEST_CASE("dot export describes the graph") {
  DdmfManager mgr(8, 3);
  Ddmf g = mgr.bool_and(mgr.bool_not(mgr.variable(1)), mgr.variable(3));
  Ddmf d = mgr.select(g, mgr.constant(Unitary2::v_gate(8)));
  std::string dot = mgr.dot_export(d);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"x1\"") != std::string::npos);
  CHECK(dot.find("label=\"x3\"") != std::string::npos);
  CHECK(dot.find("label=\"I\"") != std::string::npos); // terminal box

  // Custom labeler flows into edge labels.
  std::string named = mgr.dot_export(d, [](const Unitary2&) {
    return std::string("W");
  });
  CHECK(named.find("label=\"W\"") != std::string::npos);
}

TEST_CASE("live node counting tracks only reachable structure") {
  DdmfManager mgr(8, 3);
  Ddmf a = mgr.bool_and(mgr.variable(1), mgr.variable(2));
  Ddmf b = mgr.bool_and(mgr.variable(2), mgr.variable(3));
  std::vector<Ddmf> roots{a, b};
  std::size_t live = mgr.live_nodes(roots);
  CHECK(live >= 4);
  CHECK(live <= mgr.allocated_nodes());
  std::vector<Ddmf> one{a};
  CHECK(mgr.live_nodes(one) == mgr.node_count(a));
}
