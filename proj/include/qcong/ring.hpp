#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qcong {

// Coefficient domain for truncated q-series: exact integers, or residues
// mod m with m >= 2. m need not be prime (powers of two are used heavily),
// so invertibility is gcd-based.
class Ring {
 public:
  static Ring exact() { return Ring{0}; }

  static Ring modular(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    if (m > kMaxModulus)
      throw std::invalid_argument("modulus too large for word arithmetic");
    return Ring{m};
  }

  bool is_exact() const { return m_ == 0; }
  bool is_modular() const { return m_ != 0; }

  std::uint64_t modulus() const {
    if (is_exact()) throw std::logic_error("exact ring has no modulus");
    return m_;
  }

  friend bool operator==(const Ring&, const Ring&) = default;

  std::string to_string() const {
    return is_exact() ? "Z" : "Z/" + std::to_string(m_);
  }

  // residues stay below 2^62 so products fit in unsigned 128-bit
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

 private:
  explicit Ring(std::uint64_t m) : m_(m) {}

  std::uint64_t m_;
};

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t m);
std::uint64_t mod_reduce(long long v, std::uint64_t m);

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;  // no overflow: both < 2^62
  return s >= m ? s - m : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// inverse of a unit mod m; throws std::domain_error("not invertible") when
// gcd(a, m) != 1
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace qcong
