#include "ddmf/matrix_names.hpp"

#include <vector>

namespace ddmf {

namespace {

/// k with z = zeta_N^k, read off the coefficient vector: powers below N/2
/// are basis vectors, powers above fold to minus one through zeta^{N/2} = -1.
std::optional<long> root_exponent(const CycNumber& z) {
  long idx = -1;
  bool negated = false;
  const auto& cs = z.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    if (idx >= 0) return std::nullopt;
    if (cs[j] == 1) {
      idx = static_cast<long>(j);
    } else if (cs[j] == -1) {
      idx = static_cast<long>(j);
      negated = true;
    } else {
      return std::nullopt;
    }
  }
  if (idx < 0) return std::nullopt;
  return negated ? idx + z.order() / 2 : idx;
}

/// "R(p/q)" when m = diag(1, zeta^k), k != 0.
std::optional<std::string> rotation_name(const Unitary2& m) {
  if (!m.at(0, 1).is_zero() || !m.at(1, 0).is_zero() || !m.at(0, 0).is_one())
    return std::nullopt;
  auto k = root_exponent(m.at(1, 1));
  if (!k || *k == 0) return std::nullopt;
  // zeta_N^k = e^{i*pi*(2k/N)}.
  auto angle = DyadicAngle::from_fraction(2 * *k, m.order());
  return "R(" + angle->to_string() + ")";
}

struct Atom {
  const char* name;
  Unitary2 matrix;
};

std::vector<Atom> atoms(unsigned order) {
  return {Atom{"V", Unitary2::v_gate(order)},
          Atom{"V+", Unitary2::v_dag(order)},
          Atom{"N", Unitary2::pauli_x(order)}};
}

struct Word {
  std::string name;
  int length; // factor count, not characters
  Unitary2 matrix;
};

/// All products of up to max_len atoms, shortest first, atom order V, V+, N
/// within each length; starts with the empty word (identity).
std::vector<Word> words(const std::vector<Atom>& as, unsigned order,
                        int max_len) {
  std::vector<Word> out{Word{"", 0, Unitary2::identity(order)}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Atom& a : as)
        out.push_back(
            Word{out[i].name + a.name, len, out[i].matrix * a.matrix});
    level_begin = level_end;
  }
  return out;
}

} // namespace

std::optional<std::string> symbolic_name(const Unitary2& m) {
  if (m.is_identity()) return "I";
  if (m.is_pauli_x()) return "N";
  if (auto r = rotation_name(m)) return r;

  const unsigned order = m.order();
  const std::vector<Atom> as = atoms(order);
  for (const Word& w : words(as, order, 3))
    if (w.length > 0 && w.matrix == m) return w.name;

  // One rotation slot: m = P * R * Q with |P| + |Q| <= 2; peel the known
  // unitary factors off with adjoints and test what remains. Enumeration
  // order prefers fewer factors, then the R-first arrangement.
  const std::vector<Word> short_ws = words(as, order, 2);
  for (int total = 1; total <= 2; ++total) {
    for (const Word& p : short_ws) {
      if (p.length > total) continue;
      for (const Word& q : short_ws) {
        if (p.length + q.length != total) continue;
        Unitary2 d = p.matrix.adjoint() * m * q.matrix.adjoint();
        if (auto r = rotation_name(d)) return p.name + *r + q.name;
      }
    }
  }
  return std::nullopt;
}

std::string matrix_name(const Unitary2& m) {
  if (auto s = symbolic_name(m)) return *s;
  return m.to_string();
}

} // namespace ddmf
