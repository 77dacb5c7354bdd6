#include "qcong/partitions.hpp"

#include <stdexcept>
#include <vector>

#include "qcong/eta.hpp"

namespace qcong {

PartitionTable p_table(std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("zero precision");
  std::vector<mpz_class> p(terms);
  p[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) {
    mpz_class acc = 0;
    for (std::size_t k = 1;; ++k) {
      std::size_t g1 = k * (3 * k - 1) / 2;
      std::size_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      if (k % 2 == 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = acc;
  }
  return {TableKind::ordinary, 0, Series::from_mpz(Ring::exact(), std::move(p))};
}

PartitionTable a_table_series(std::uint64_t k, const Ring& ring, std::size_t terms) {
  if (k == 0) throw std::invalid_argument("color count must be positive");
  EtaQuotientSpec spec{{{2, static_cast<long long>(k) - 1},
                        {1, -static_cast<long long>(k)}}};
  return {TableKind::colored_odd, k, eta_quotient(spec, ring, terms)};
}

PartitionTable distinct_colored_table(std::uint64_t j, const Ring& ring,
                                      std::size_t terms) {
  EtaQuotientSpec spec{{{2, static_cast<long long>(j)},
                        {1, -static_cast<long long>(j)}}};
  return {TableKind::distinct_colored, j, eta_quotient(spec, ring, terms)};
}

PartitionTable a_table_recurrence(std::uint64_t k, std::size_t terms) {
  if (k == 0) throw std::invalid_argument("color count must be positive");
  Ring exact = Ring::exact();
  PartitionTable p = p_table(terms);
  PartitionTable d = distinct_colored_table(k - 1, exact, terms);
  std::vector<mpz_class> a(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    mpz_class acc = p.value(n);
    for (std::size_t v = 1; v <= n; ++v) acc += d.value(v) * p.value(n - v);
    a[n] = acc;
  }
  return {TableKind::colored_odd, k, Series::from_mpz(exact, std::move(a))};
}

namespace {

// C(mult + k - 1, k - 1): multisets of `mult` colors drawn from k
mpz_class color_multisets(std::uint64_t k, std::uint64_t mult) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), mult + k - 1, k - 1);
  return r;
}

void enumerate(std::uint64_t k, std::uint64_t max_part, std::uint64_t rest,
               const mpz_class& weight, mpz_class& total) {
  if (rest == 0) {
    total += weight;
    return;
  }
  for (std::uint64_t part = std::min<std::uint64_t>(max_part, rest); part >= 1; --part) {
    for (std::uint64_t mult = 1; mult * part <= rest; ++mult) {
      if (part % 2 == 1)
        enumerate(k, part - 1, rest - mult * part, weight * color_multisets(k, mult), total);
      else
        enumerate(k, part - 1, rest - mult * part, weight, total);
    }
  }
}

}  // namespace

mpz_class a_bruteforce(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw std::invalid_argument("color count must be positive");
  if (n > kOracleBound) throw std::invalid_argument("oracle bound exceeded");
  mpz_class total = 0;
  enumerate(k, n, n, 1, total);
  return total;
}

}  // namespace qcong
