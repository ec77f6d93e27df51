#include "ddmf/unitary.hpp"

#include <sstream>
#include <utility>

namespace ddmf {

DyadicAngle DyadicAngle::of(long numerator, unsigned denominator_log2) {
  long p = numerator;
  unsigned m = denominator_log2;
  while (m > 0 && p % 2 == 0) {
    p /= 2;
    --m;
  }
  // Reduce mod 2*pi: period of p is 2^{m+1}.
  const long period = 2L << m;
  p %= period;
  if (p < 0) {
    p += period;
  }
  if (p == 0) {
    m = 0;
  }
  return DyadicAngle{p, m};
}

std::optional<DyadicAngle> DyadicAngle::from_fraction(long numerator,
                                                      unsigned long denominator) {
  if (denominator == 0 || (denominator & (denominator - 1)) != 0) {
    return std::nullopt;
  }
  unsigned m = 0;
  while ((1UL << m) != denominator) {
    ++m;
  }
  return of(numerator, m);
}

unsigned DyadicAngle::required_ring_order() const {
  const unsigned n = 1u << (m + 2);
  return n < 8 ? 8 : n;
}

std::string DyadicAngle::to_string() const {
  return std::to_string(p) + "/" + std::to_string(1L << m);
}

Unitary2::Unitary2(CycNumber e00, CycNumber e01, CycNumber e10, CycNumber e11)
    : entries_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {
  const unsigned n = entries_[0].order();
  for (const auto& e : entries_) {
    if (e.order() != n) {
      throw RingError("matrix entries from different rings");
    }
  }
}

Unitary2 Unitary2::identity(unsigned order) {
  return Unitary2(CycNumber::one(order), CycNumber::zero(order),
                  CycNumber::zero(order), CycNumber::one(order));
}

Unitary2 Unitary2::pauli_x(unsigned order) {
  return Unitary2(CycNumber::zero(order), CycNumber::one(order),
                  CycNumber::one(order), CycNumber::zero(order));
}

Unitary2 Unitary2::v_gate(unsigned order) {
  const CycNumber half = CycNumber::from_rational(order, mpq_class(1, 2));
  const CycNumber i = CycNumber::imaginary_unit(order);
  const CycNumber one = CycNumber::one(order);
  const CycNumber a = half * (one + i); // (1+i)/2
  const CycNumber b = half * (one - i); // (1-i)/2
  return Unitary2(a, b, b, a);
}

Unitary2 Unitary2::v_dag(unsigned order) {
  return v_gate(order).adjoint();
}

Unitary2 Unitary2::rotation(unsigned order, DyadicAngle theta) {
  if (order < theta.required_ring_order()) {
    throw RingError("ring order " + std::to_string(order) +
                    " too small for rotation angle " + theta.to_string() +
                    "*pi (need >= " +
                    std::to_string(theta.required_ring_order()) + ")");
  }
  // e^{i*pi*p/2^m} = zeta_N^{p*N/2^{m+1}}.
  const long exponent = theta.p * (static_cast<long>(order) >> (theta.m + 1));
  return Unitary2(CycNumber::one(order), CycNumber::zero(order),
                  CycNumber::zero(order),
                  CycNumber::root_of_unity(order, exponent));
}

const CycNumber& Unitary2::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row * 2 + col)];
}

Unitary2 Unitary2::operator*(const Unitary2& rhs) const {
  if (order() != rhs.order()) {
    throw RingError("matrix ring order mismatch");
  }
  return Unitary2(at(0, 0) * rhs.at(0, 0) + at(0, 1) * rhs.at(1, 0),
                  at(0, 0) * rhs.at(0, 1) + at(0, 1) * rhs.at(1, 1),
                  at(1, 0) * rhs.at(0, 0) + at(1, 1) * rhs.at(1, 0),
                  at(1, 0) * rhs.at(0, 1) + at(1, 1) * rhs.at(1, 1));
}

Unitary2 Unitary2::adjoint() const {
  return Unitary2(at(0, 0).conjugate(), at(1, 0).conjugate(),
                  at(0, 1).conjugate(), at(1, 1).conjugate());
}

bool Unitary2::operator==(const Unitary2& rhs) const {
  return entries_[0] == rhs.entries_[0] && entries_[1] == rhs.entries_[1] &&
         entries_[2] == rhs.entries_[2] && entries_[3] == rhs.entries_[3];
}

bool Unitary2::is_unitary() const {
  return (*this * adjoint()).is_identity();
}

bool Unitary2::is_identity() const {
  return at(0, 0).is_one() && at(0, 1).is_zero() && at(1, 0).is_zero() &&
         at(1, 1).is_one();
}

bool Unitary2::is_pauli_x() const {
  return at(0, 0).is_zero() && at(0, 1).is_one() && at(1, 0).is_one() &&
         at(1, 1).is_zero();
}

bool Unitary2::is_classical() const {
  return is_identity() || is_pauli_x();
}

CycNumber Unitary2::det() const {
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

std::string Unitary2::to_string() const {
  std::ostringstream out;
  out << "[[" << at(0, 0).to_string() << ", " << at(0, 1).to_string() << "], ["
      << at(1, 0).to_string() << ", " << at(1, 1).to_string() << "]]";
  return out.str();
}

std::size_t Unitary2::hash() const {
  std::size_t h = 0x2545f491u;
  for (const auto& e : entries_) {
    h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Unitary2 builtin_gate(unsigned order, BuiltinGate gate,
                      std::optional<DyadicAngle> angle) {
  switch (gate) {
  case BuiltinGate::I:
    return Unitary2::identity(order);
  case BuiltinGate::X:
    return Unitary2::pauli_x(order);
  case BuiltinGate::V:
    return Unitary2::v_gate(order);
  case BuiltinGate::VDag:
    return Unitary2::v_dag(order);
  case BuiltinGate::R:
    if (!angle) {
      throw RingError("rotation gate requires an angle");
    }
    return Unitary2::rotation(order, *angle);
  }
  throw RingError("unknown builtin gate");
}

bool QubitState::is_normalized() const {
  return (amp0.abs_squared() + amp1.abs_squared()).is_one();
}

bool QubitState::operator==(const QubitState& rhs) const {
  return amp0 == rhs.amp0 && amp1 == rhs.amp1;
}

std::string QubitState::to_string() const {
  if (amp0.is_one() && amp1.is_zero()) {
    return "|0>";
  }
  if (amp0.is_zero() && amp1.is_one()) {
    return "|1>";
  }
  return "(" + amp0.to_string() + ")|0> + (" + amp1.to_string() + ")|1>";
}

QubitState apply_to_ket0(const Unitary2& a) {
  return QubitState{a.at(0, 0), a.at(1, 0)};
}

} // namespace ddmf
