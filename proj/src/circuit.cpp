#include "ddmf/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ddmf {

namespace {

struct Token {
  std::string text;
  int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)),
                        static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool parse_long(std::string_view s, long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

/// Accepts "p" or "p/q"; q must be a positive power of two.
DyadicAngle parse_angle(const std::string& body, int line, int column) {
  auto slash = body.find('/');
  long p = 0, q = 1;
  bool ok = slash == std::string::npos
                ? parse_long(body, p)
                : parse_long(body.substr(0, slash), p) &&
                      parse_long(body.substr(slash + 1), q);
  if (!ok) throw ParseError(line, column, "malformed rotation angle '" + body + "'");
  auto angle = DyadicAngle::from_fraction(p, q);
  if (!angle)
    throw ParseError(line, column,
                     "rotation angle denominator must be a power of two, got '" +
                         body + "'");
  return *angle;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

} // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::map<std::string, int> label_index;
  bool have_qubits = false;
  bool have_labels = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0].text == ".qubits") {
      if (have_qubits)
        throw ParseError(line_no, toks[0].column, "duplicate .qubits directive");
      long n = 0;
      if (toks.size() != 2 || !parse_long(toks[1].text, n) || n < 1)
        throw ParseError(line_no, toks[0].column,
                         ".qubits expects one positive integer");
      c.num_qubits = static_cast<int>(n);
      c.labels = default_labels(c.num_qubits);
      for (int i = 0; i < c.num_qubits; ++i) label_index[c.labels[i]] = i + 1;
      have_qubits = true;
      continue;
    }

    if (toks[0].text == ".labels") {
      if (!have_qubits)
        throw ParseError(line_no, toks[0].column, ".labels before .qubits");
      if (have_labels)
        throw ParseError(line_no, toks[0].column, "duplicate .labels directive");
      if (!c.gates.empty())
        throw ParseError(line_no, toks[0].column, ".labels after gate lines");
      if (static_cast<int>(toks.size()) != c.num_qubits + 1)
        throw ParseError(line_no, toks[0].column,
                         ".labels expects exactly " +
                             std::to_string(c.num_qubits) + " names");
      label_index.clear();
      for (int i = 1; i <= c.num_qubits; ++i) {
        const Token& t = toks[i];
        if (!valid_label(t.text))
          throw ParseError(line_no, t.column, "invalid label '" + t.text + "'");
        if (!label_index.emplace(t.text, i).second)
          throw ParseError(line_no, t.column, "duplicate label '" + t.text + "'");
        c.labels[i - 1] = t.text;
      }
      have_labels = true;
      continue;
    }

    if (toks[0].text.starts_with('.'))
      throw ParseError(line_no, toks[0].column,
                       "unknown directive '" + toks[0].text + "'");

    // Gate line: KIND [±label ...] -> label
    if (!have_qubits)
      throw ParseError(line_no, toks[0].column, "gate before .qubits");

    Gate g;
    const std::string& kind = toks[0].text;
    if (kind == "X") {
      g.kind = GateKind::X;
    } else if (kind == "V") {
      g.kind = GateKind::V;
    } else if (kind == "V+") {
      g.kind = GateKind::VDag;
    } else if (kind.starts_with("R(") && kind.ends_with(')')) {
      g.kind = GateKind::R;
      g.angle = parse_angle(kind.substr(2, kind.size() - 3), line_no,
                            toks[0].column);
    } else {
      throw ParseError(line_no, toks[0].column, "unknown gate '" + kind + "'");
    }

    auto resolve = [&](const std::string& name, int column) {
      auto it = label_index.find(name);
      if (it == label_index.end())
        throw ParseError(line_no, column, "unknown qubit '" + name + "'");
      return it->second;
    };

    std::size_t i = 1;
    for (; i < toks.size() && toks[i].text != "->"; ++i) {
      const Token& t = toks[i];
      if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
        throw ParseError(line_no, t.column,
                         "expected control (+name or -name) or '->', got '" +
                             t.text + "'");
      Control ctrl{resolve(t.text.substr(1), t.column), t.text[0] == '+'};
      for (const Control& prev : g.controls)
        if (prev.qubit == ctrl.qubit)
          throw ParseError(line_no, t.column,
                           "qubit '" + t.text.substr(1) +
                               "' listed as control twice");
      g.controls.push_back(ctrl);
    }
    if (i + 2 != toks.size())
      throw ParseError(line_no, toks[0].column,
                       "gate line must end with '-> target'");
    g.target = resolve(toks[i + 1].text, toks[i + 1].column);
    for (const Control& ctrl : g.controls)
      if (ctrl.qubit == g.target)
        throw ParseError(line_no, toks[i + 1].column,
                         "target '" + toks[i + 1].text + "' is also a control");
    std::sort(g.controls.begin(), g.controls.end(),
              [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
    c.gates.push_back(std::move(g));
  }

  if (!have_qubits) throw ParseError(1, 1, "missing .qubits directive");
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << ".qubits " << c.num_qubits << "\n";
  if (c.labels != default_labels(c.num_qubits)) {
    out << ".labels";
    for (const std::string& l : c.labels) out << ' ' << l;
    out << "\n";
  }
  for (const Gate& g : c.gates) {
    out << gate_name(g);
    for (const Control& ctrl : g.controls)
      out << ' ' << (ctrl.positive ? '+' : '-') << c.labels[ctrl.qubit - 1];
    out << " -> " << c.labels[g.target - 1] << "\n";
  }
  return out.str();
}

std::vector<std::string> validate_circuit(const Circuit& c) {
  std::vector<std::string> out;
  if (c.num_qubits < 1) out.push_back("circuit needs at least one qubit");
  if (c.labels.size() != static_cast<std::size_t>(std::max(c.num_qubits, 0)))
    out.push_back("label count does not match qubit count");
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    const std::string where = "gate " + std::to_string(g + 1) + ": ";
    auto in_range = [&](int q) { return q >= 1 && q <= c.num_qubits; };
    if (!in_range(gate.target))
      out.push_back(where + "target qubit " + std::to_string(gate.target) +
                    " out of range");
    if (gate.kind == GateKind::R && !gate.angle)
      out.push_back(where + "rotation gate without an angle");
    if (gate.kind != GateKind::R && gate.angle)
      out.push_back(where + "angle on a non-rotation gate");
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
      const Control& ctrl = gate.controls[i];
      if (!in_range(ctrl.qubit)) {
        out.push_back(where + "control qubit " + std::to_string(ctrl.qubit) +
                      " out of range");
        continue;
      }
      if (ctrl.qubit == gate.target)
        out.push_back(where + "target qubit " + std::to_string(gate.target) +
                      " is also a control");
      for (std::size_t k = 0; k < i; ++k)
        if (gate.controls[k].qubit == ctrl.qubit)
          out.push_back(where + "qubit " + std::to_string(ctrl.qubit) +
                        " is listed as control twice");
    }
  }
  return out;
}

unsigned required_ring_order(const Circuit& c) {
  unsigned order = 8;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::R)
      order = std::max(order, g.angle->required_ring_order());
  return order;
}

Unitary2 gate_matrix(unsigned ring_order, const Gate& g) {
  switch (g.kind) {
  case GateKind::X: return Unitary2::pauli_x(ring_order);
  case GateKind::V: return Unitary2::v_gate(ring_order);
  case GateKind::VDag: return Unitary2::v_dag(ring_order);
  case GateKind::R: return Unitary2::rotation(ring_order, *g.angle);
  }
  throw std::logic_error("unreachable gate kind");
}

std::string gate_name(const Gate& g) {
  switch (g.kind) {
  case GateKind::X: return "X";
  case GateKind::V: return "V";
  case GateKind::VDag: return "V+";
  case GateKind::R: return "R(" + g.angle->to_string() + ")";
  }
  throw std::logic_error("unreachable gate kind");
}

} // namespace ddmf
