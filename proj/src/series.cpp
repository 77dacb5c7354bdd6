#include "qcong/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qcong {

namespace {

using ZVec = std::vector<mpz_class>;
using MVec = std::vector<std::uint64_t>;

// partial sums of up to n residue products must stay below 2^64
bool fits_u64_accumulation(std::uint64_t m, std::size_t n) {
  if (m - 1 >= (std::uint64_t{1} << 21)) return false;
  unsigned __int128 worst =
      static_cast<unsigned __int128>(m - 1) * (m - 1) * n + (m - 1);
  return worst <= std::numeric_limits<std::uint64_t>::max();
}

ZVec mul_exact(const ZVec& a, const ZVec& b, std::size_t n) {
  ZVec c(n);
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (sgn(a[i]) == 0) continue;
    std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

MVec mul_mod(const MVec& a, const MVec& b, std::size_t n, std::uint64_t m) {
  MVec c(n, 0);
  if (fits_u64_accumulation(m, n)) {
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
      if (a[i] == 0) continue;
      std::uint64_t ai = a[i];
      std::size_t jmax = std::min(b.size(), n - i);
      for (std::size_t j = 0; j < jmax; ++j) c[i + j] += ai * b[j];
    }
    for (auto& v : c) v %= m;
  } else {
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
      if (a[i] == 0) continue;
      std::size_t jmax = std::min(b.size(), n - i);
      for (std::size_t j = 0; j < jmax; ++j)
        c[i + j] = mod_add(c[i + j], mod_mul(a[i], b[j], m), m);
    }
  }
  return c;
}

ZVec inv_exact(const ZVec& a) {
  std::size_t n = a.size();
  if (a[0] != 1 && a[0] != -1) throw std::domain_error("not invertible");
  ZVec b(n);
  b[0] = a[0];
  mpz_class acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -a[0] * acc;
  }
  return b;
}

MVec inv_mod(const MVec& a, std::uint64_t m) {
  std::size_t n = a.size();
  std::uint64_t inv0 = mod_inverse(a[0], m);
  MVec b(n, 0);
  b[0] = inv0;
  bool fast = fits_u64_accumulation(m, n);
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    if (fast) {
      for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
      acc %= m;
    } else {
      for (std::size_t i = 1; i <= k; ++i)
        acc = mod_add(acc, mod_mul(a[i], b[k - i], m), m);
    }
    b[k] = mod_mul(mod_sub(0, acc, m), inv0, m);
  }
  return b;
}

void require_same_ring(const Series& a, const Series& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ring mismatch");
}

}  // namespace

Series Series::zero(const Ring& ring, std::size_t precision) {
  if (precision == 0) throw std::invalid_argument("zero precision");
  if (ring.is_exact()) return Series{ring, ZVec(precision)};
  return Series{ring, MVec(precision, 0)};
}

Series Series::one(const Ring& ring, std::size_t precision) {
  Series s = zero(ring, precision);
  if (ring.is_exact())
    std::get<ZVec>(s.coeffs_)[0] = 1;
  else
    std::get<MVec>(s.coeffs_)[0] = 1 % ring.modulus();
  return s;
}

Series Series::from_ints(const Ring& ring, std::span<const long long> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("zero precision");
  if (ring.is_exact()) {
    ZVec v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      v[i] = mpz_class{static_cast<long>(coeffs[i])};
    return Series{ring, std::move(v)};
  }
  MVec v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v[i] = mod_reduce(coeffs[i], ring.modulus());
  return Series{ring, std::move(v)};
}

Series Series::from_ints(const Ring& ring, std::initializer_list<long long> coeffs) {
  return from_ints(ring, std::span<const long long>(coeffs.begin(), coeffs.size()));
}

Series Series::from_mpz(const Ring& ring, std::vector<mpz_class> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("zero precision");
  if (ring.is_exact()) return Series{ring, std::move(coeffs)};
  MVec v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v[i] = mod_reduce(coeffs[i], ring.modulus());
  return Series{ring, std::move(v)};
}

std::size_t Series::precision() const {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

mpz_class Series::at(std::size_t i) const {
  if (i >= precision()) throw std::out_of_range("coefficient index beyond precision");
  if (ring_.is_exact()) return zc()[i];
  return mpz_class{static_cast<unsigned long>(mc()[i])};
}

bool Series::nonzero_at(std::size_t i) const {
  if (i >= precision()) throw std::out_of_range("coefficient index beyond precision");
  if (ring_.is_exact()) return sgn(zc()[i]) != 0;
  return mc()[i] != 0;
}

bool Series::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::size_t> Series::first_nonzero() const {
  for (std::size_t i = 0; i < precision(); ++i)
    if (nonzero_at(i)) return i;
  return std::nullopt;
}

Series operator+(const Series& a, const Series& b) {
  require_same_ring(a, b);
  std::size_t n = std::min(a.precision(), b.precision());
  if (a.ring().is_exact()) {
    ZVec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.zc()[i] + b.zc()[i];
    return Series{a.ring(), std::move(c)};
  }
  std::uint64_t m = a.ring().modulus();
  MVec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = mod_add(a.mc()[i], b.mc()[i], m);
  return Series{a.ring(), std::move(c)};
}

Series operator-(const Series& a, const Series& b) {
  require_same_ring(a, b);
  std::size_t n = std::min(a.precision(), b.precision());
  if (a.ring().is_exact()) {
    ZVec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.zc()[i] - b.zc()[i];
    return Series{a.ring(), std::move(c)};
  }
  std::uint64_t m = a.ring().modulus();
  MVec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = mod_sub(a.mc()[i], b.mc()[i], m);
  return Series{a.ring(), std::move(c)};
}

Series operator*(const Series& a, const Series& b) {
  require_same_ring(a, b);
  std::size_t n = std::min(a.precision(), b.precision());
  if (a.ring().is_exact())
    return Series{a.ring(), mul_exact(a.zc(), b.zc(), n)};
  return Series{a.ring(), mul_mod(a.mc(), b.mc(), n, a.ring().modulus())};
}

Series Series::operator-() const { return scaled(-1); }

Series Series::scaled(long long c) const {
  if (ring_.is_exact()) {
    ZVec v(zc());
    for (auto& x : v) x *= static_cast<long>(c);
    return Series{ring_, std::move(v)};
  }
  std::uint64_t m = ring_.modulus();
  std::uint64_t cr = mod_reduce(c, m);
  MVec v(mc());
  for (auto& x : v) x = mod_mul(x, cr, m);
  return Series{ring_, std::move(v)};
}

Series Series::inverse() const {
  if (ring_.is_exact()) return Series{ring_, inv_exact(zc())};
  return Series{ring_, inv_mod(mc(), ring_.modulus())};
}

Series Series::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Series result = one(ring_, precision());
  if (e == 0) return result;
  Series base = *this;
  unsigned long long u = static_cast<unsigned long long>(e);
  while (u > 1) {
    if (u & 1) result = result * base;
    base = base * base;
    u >>= 1;
  }
  return result * base;
}

Series Series::dilated(std::uint64_t t) const {
  if (t == 0) throw std::invalid_argument("dilation factor must be positive");
  std::size_t n = (precision() - 1) * t + 1;
  if (ring_.is_exact()) {
    ZVec v(n);
    for (std::size_t i = 0; i < precision(); ++i) v[i * t] = zc()[i];
    return Series{ring_, std::move(v)};
  }
  MVec v(n, 0);
  for (std::size_t i = 0; i < precision(); ++i) v[i * t] = mc()[i];
  return Series{ring_, std::move(v)};
}

Series Series::shifted(std::uint64_t t) const {
  std::size_t n = precision() + t;
  if (ring_.is_exact()) {
    ZVec v(n);
    for (std::size_t i = 0; i < precision(); ++i) v[i + t] = zc()[i];
    return Series{ring_, std::move(v)};
  }
  MVec v(n, 0);
  for (std::size_t i = 0; i < precision(); ++i) v[i + t] = mc()[i];
  return Series{ring_, std::move(v)};
}

Series Series::extract_progression(std::uint64_t step, std::uint64_t offset) const {
  if (step == 0) throw std::invalid_argument("progression step must be positive");
  if (offset >= precision()) throw std::invalid_argument("empty extraction");
  std::size_t n = (precision() - 1 - offset) / step + 1;
  if (ring_.is_exact()) {
    ZVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = zc()[offset + i * step];
    return Series{ring_, std::move(v)};
  }
  MVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = mc()[offset + i * step];
  return Series{ring_, std::move(v)};
}

Series Series::reduced_mod(std::uint64_t m) const {
  if (!ring_.is_exact())
    throw std::invalid_argument("reduce_mod requires an exact series");
  Ring target = Ring::modular(m);
  MVec v(precision());
  for (std::size_t i = 0; i < precision(); ++i) v[i] = mod_reduce(zc()[i], m);
  return Series{target, std::move(v)};
}

Series Series::truncated(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("zero precision");
  if (n >= precision()) return *this;
  if (ring_.is_exact()) return Series{ring_, ZVec(zc().begin(), zc().begin() + n)};
  return Series{ring_, MVec(mc().begin(), mc().begin() + n)};
}

std::optional<std::size_t> first_mismatch(const Series& a, const Series& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ring mismatch");
  std::size_t n = std::min(a.precision(), b.precision());
  for (std::size_t i = 0; i < n; ++i)
    if (a.at(i) != b.at(i)) return i;
  return std::nullopt;
}

SeriesBuilder::SeriesBuilder(const Ring& ring, std::size_t precision)
    : ring_(ring), n_(precision) {
  if (precision == 0) throw std::invalid_argument("zero precision");
  if (ring.is_exact())
    buf_ = std::vector<mpz_class>(precision);
  else
    buf_ = std::vector<std::uint64_t>(precision, 0);
}

void SeriesBuilder::add_term(std::size_t exponent, long long value) {
  if (exponent >= n_) return;
  if (ring_.is_exact()) {
    std::get<ZVec>(buf_)[exponent] += static_cast<long>(value);
  } else {
    std::uint64_t m = ring_.modulus();
    auto& v = std::get<MVec>(buf_);
    v[exponent] = mod_add(v[exponent], mod_reduce(value, m), m);
  }
}

void SeriesBuilder::mul_binomial(std::size_t c, int sign) {
  if (c == 0) throw std::invalid_argument("binomial exponent must be positive");
  if (c >= n_) return;
  if (ring_.is_exact()) {
    auto& v = std::get<ZVec>(buf_);
    if (sign >= 0)
      for (std::size_t j = n_; j-- > c;) v[j] += v[j - c];
    else
      for (std::size_t j = n_; j-- > c;) v[j] -= v[j - c];
  } else {
    std::uint64_t m = ring_.modulus();
    auto& v = std::get<MVec>(buf_);
    if (sign >= 0)
      for (std::size_t j = n_; j-- > c;) v[j] = mod_add(v[j], v[j - c], m);
    else
      for (std::size_t j = n_; j-- > c;) v[j] = mod_sub(v[j], v[j - c], m);
  }
}

void SeriesBuilder::div_one_minus(std::size_t c) {
  if (c == 0) throw std::invalid_argument("binomial exponent must be positive");
  if (c >= n_) return;
  if (ring_.is_exact()) {
    auto& v = std::get<ZVec>(buf_);
    for (std::size_t j = c; j < n_; ++j) v[j] += v[j - c];
  } else {
    std::uint64_t m = ring_.modulus();
    auto& v = std::get<MVec>(buf_);
    for (std::size_t j = c; j < n_; ++j) v[j] = mod_add(v[j], v[j - c], m);
  }
}

Series SeriesBuilder::build() && {
  if (ring_.is_exact())
    return Series{ring_, std::move(std::get<ZVec>(buf_))};
  return Series{ring_, std::move(std::get<MVec>(buf_))};
}

}  // namespace qcong
