#pragma once

#include "ddmf/cyclotomic.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ddmf {

/// Classical input assignment: bits[i] is the value of x_{i+1}.
using Assignment = std::vector<std::uint8_t>;

/// Rotation angle theta = p * pi / 2^m, kept canonical: m minimal
/// (p odd or m == 0) and p in [0, 2^{m+1}), i.e. reduced mod 2*pi.
struct DyadicAngle {
  long p = 0;
  unsigned m = 0;

  /// Canonicalize from numerator and denominator exponent.
  static DyadicAngle of(long numerator, unsigned denominator_log2);
  /// Nullopt unless denominator is a power of two.
  static std::optional<DyadicAngle> from_fraction(long numerator,
                                                 unsigned long denominator);

  /// Smallest valid ring order that can represent e^{i*theta}: max(8, 2^{m+2}).
  unsigned required_ring_order() const;

  bool operator==(const DyadicAngle&) const = default;

  /// "p/q" with q = 2^m, as written in circuit files.
  std::string to_string() const;
};

/// Exact 2x2 matrix over a cyclotomic ring; the codomain of matrix functions.
/// Arithmetic preserves unitarity, which is testable exactly via is_unitary().
class Unitary2 {
public:
  Unitary2(CycNumber e00, CycNumber e01, CycNumber e10, CycNumber e11);

  static Unitary2 identity(unsigned order);
  static Unitary2 pauli_x(unsigned order);
  /// Square root of NOT: (1/2) * [[1+i, 1-i], [1-i, 1+i]].
  static Unitary2 v_gate(unsigned order);
  static Unitary2 v_dag(unsigned order);
  /// diag(1, e^{i*theta}); throws RingError when order < 2^{m+2}.
  static Unitary2 rotation(unsigned order, DyadicAngle theta);

  unsigned order() const { return entries_[0].order(); }
  const CycNumber& at(int row, int col) const;

  Unitary2 operator*(const Unitary2& rhs) const;
  Unitary2 adjoint() const;
  bool operator==(const Unitary2& rhs) const;
  bool operator!=(const Unitary2& rhs) const { return !(*this == rhs); }

  bool is_unitary() const;
  bool is_identity() const;
  bool is_pauli_x() const;
  /// True iff the matrix is exactly I or NOT.
  bool is_classical() const;
  CycNumber det() const;

  /// Entry-wise rendering "[[.., ..], [.., ..]]".
  std::string to_string() const;

  std::size_t hash() const;

private:
  std::array<CycNumber, 4> entries_; // row major
};

/// Named gates of the exact-arith layer. R takes the dyadic angle argument.
enum class BuiltinGate { I, X, V, VDag, R };

Unitary2 builtin_gate(unsigned order, BuiltinGate gate,
                      std::optional<DyadicAngle> angle = std::nullopt);

/// Single-qubit state alpha|0> + beta|1> with exact unit norm.
struct QubitState {
  CycNumber amp0;
  CycNumber amp1;

  bool is_normalized() const;
  bool operator==(const QubitState& rhs) const;
  std::string to_string() const;
};

/// First column of A, i.e. the quantum-function value A|0>.
QubitState apply_to_ket0(const Unitary2& a);

} // namespace ddmf
