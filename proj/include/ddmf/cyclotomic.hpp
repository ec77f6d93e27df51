#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddmf {

/// Raised on ring-context violations: mixing elements of different orders,
/// an order too small for a requested rotation angle, or an invalid order.
class RingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// True iff n is a power of two and n >= 8.
bool valid_ring_order(unsigned n);

/// Exact element of the cyclotomic field Q(zeta_N), N a power of two >= 8,
/// with zeta_N = e^{2*pi*i/N}. Stored as rational coefficients over the
/// power basis 1, zeta, ..., zeta^{N/2-1}; higher powers reduce through
/// zeta^{N/2} = -1, so the representation is canonical and structural
/// equality is semantic equality.
class CycNumber {
public:
  static CycNumber zero(unsigned order);
  static CycNumber one(unsigned order);
  static CycNumber from_rational(unsigned order, const mpq_class& value);
  /// zeta_N^exponent, exponent taken mod N (negative exponents allowed).
  static CycNumber root_of_unity(unsigned order, long exponent);
  static CycNumber imaginary_unit(unsigned order);

  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  CycNumber operator+(const CycNumber& rhs) const;
  CycNumber operator-(const CycNumber& rhs) const;
  CycNumber operator-() const;
  CycNumber operator*(const CycNumber& rhs) const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);

  /// Complex conjugate: zeta^k -> zeta^{-k}, reduced.
  CycNumber conjugate() const;
  /// |z|^2 = z * conj(z).
  CycNumber abs_squared() const;

  bool operator==(const CycNumber& rhs) const;
  bool operator!=(const CycNumber& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  bool is_one() const;
  /// True iff only the zeta^0 coefficient is nonzero.
  bool is_rational() const;
  /// The zeta^0 coefficient (the whole value when is_rational()).
  const mpq_class& rational_part() const { return coeffs_[0]; }

  /// Debug rendering as a sum of (p/q)*zeta^k terms, e.g. "1/2 - 1/2*zeta^2".
  std::string to_string() const;

  std::size_t hash() const;

private:
  CycNumber(unsigned order, std::vector<mpq_class> coeffs);

  unsigned order_;
  std::vector<mpq_class> coeffs_;
};

} // namespace ddmf
