#include "qcong/ring.hpp"

namespace qcong {

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t m) {
  // mpz_fdiv_ui floors, so the remainder is canonical even for negative v
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

std::uint64_t mod_reduce(long long v, std::uint64_t m) {
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit intermediates
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    __int128 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  if (t0 < 0) t0 += static_cast<__int128>(m);
  return static_cast<std::uint64_t>(t0);
}

}  // namespace qcong
