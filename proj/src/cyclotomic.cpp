#include "ddmf/cyclotomic.hpp"

#include <sstream>

namespace ddmf {

namespace {

void require_same_order(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order()) {
    throw RingError("ring order mismatch: " + std::to_string(a.order()) +
                    " vs " + std::to_string(b.order()));
  }
}

std::size_t hash_mpz(mpz_srcptr z, std::size_t seed) {
  std::size_t h = seed;
  const auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(mpz_sgn(z)) + 3u);
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    mix(static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return h;
}

} // namespace

bool valid_ring_order(unsigned n) {
  return n >= 8 && (n & (n - 1)) == 0;
}

CycNumber::CycNumber(unsigned order, std::vector<mpq_class> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::zero(unsigned order) {
  if (!valid_ring_order(order)) {
    throw RingError("invalid ring order " + std::to_string(order) +
                    " (need a power of two >= 8)");
  }
  return CycNumber(order, std::vector<mpq_class>(order / 2, mpq_class(0)));
}

CycNumber CycNumber::one(unsigned order) {
  return from_rational(order, mpq_class(1));
}

CycNumber CycNumber::from_rational(unsigned order, const mpq_class& value) {
  if (value.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  CycNumber r = zero(order);
  // mpq_class(p, q) does not canonicalize; equality and hashing need it.
  r.coeffs_[0] = value;
  r.coeffs_[0].canonicalize();
  return r;
}

CycNumber CycNumber::root_of_unity(unsigned order, long exponent) {
  CycNumber r = zero(order);
  const long n = static_cast<long>(order);
  long e = exponent % n;
  if (e < 0) {
    e += n;
  }
  // zeta^e with e >= N/2 folds to -zeta^{e - N/2}.
  if (e < n / 2) {
    r.coeffs_[static_cast<std::size_t>(e)] = 1;
  } else {
    r.coeffs_[static_cast<std::size_t>(e - n / 2)] = -1;
  }
  return r;
}

CycNumber CycNumber::imaginary_unit(unsigned order) {
  return root_of_unity(order, static_cast<long>(order) / 4);
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
  CycNumber r = *this;
  r += rhs;
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const {
  CycNumber r = *this;
  r -= rhs;
  return r;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
  require_same_order(*this, rhs);
  // Negacyclic convolution: zeta^{m} = -zeta^{m - N/2} for m >= N/2.
  const std::size_t m = coeffs_.size();
  std::vector<mpq_class> out(m, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (rhs.coeffs_[j] == 0) {
        continue;
      }
      const mpq_class prod = coeffs_[i] * rhs.coeffs_[j];
      const std::size_t k = i + j;
      if (k < m) {
        out[k] += prod;
      } else {
        out[k - m] -= prod;
      }
    }
  }
  return CycNumber(order_, std::move(out));
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

CycNumber CycNumber::conjugate() const {
  // zeta^0 stays; zeta^k (k > 0) maps to zeta^{N-k} = -zeta^{N/2-k}.
  const std::size_t m = coeffs_.size();
  std::vector<mpq_class> out(m, mpq_class(0));
  out[0] = coeffs_[0];
  for (std::size_t k = 1; k < m; ++k) {
    out[m - k] = -coeffs_[k];
  }
  return CycNumber(order_, std::move(out));
}

CycNumber CycNumber::abs_squared() const {
  return *this * conjugate();
}

bool CycNumber::operator==(const CycNumber& rhs) const {
  return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

bool CycNumber::is_one() const {
  return is_rational() && coeffs_[0] == 1;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      return false;
    }
  }
  return true;
}

std::string CycNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) {
        out << "-";
      }
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) {
        out << mag.get_str() << "*";
      }
      out << "zeta^" << k;
    }
  }
  if (first) {
    return "0";
  }
  return out.str();
}

std::size_t CycNumber::hash() const {
  std::size_t h = 0x5bd1e995u + order_;
  for (const auto& c : coeffs_) {
    h = hash_mpz(c.get_num_mpz_t(), h);
    h = hash_mpz(c.get_den_mpz_t(), h);
  }
  return h;
}

} // namespace ddmf
