#pragma once

#include <cstdint>

#include "qcong/series.hpp"

namespace qcong {

enum class TableKind { ordinary, colored_odd, distinct_colored };

// Coefficient table of one of the three counting families, tagged with the
// parameter it was built for and the ring it lives in.
struct PartitionTable {
  TableKind kind = TableKind::ordinary;
  std::uint64_t param = 0;  // k for colored_odd, j for distinct_colored
  Series values = Series::one(Ring::exact(), 1);

  mpz_class value(std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.precision(); }
};

// p(0..terms-1), exact, by the pentagonal recurrence
// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
PartitionTable p_table(std::size_t terms);

// coefficients of f_2^{k-1}/f_1^k (partitions with monochromatic even parts
// and k-colored odd parts)
PartitionTable a_table_series(std::uint64_t k, const Ring& ring, std::size_t terms);

// coefficients of (f_2/f_1)^j (j-colored partitions into distinct parts);
// j = 0 is the constant 1
PartitionTable distinct_colored_table(std::uint64_t j, const Ring& ring,
                                      std::size_t terms);

// a_k(n) = p(n) + sum_{v=1..n} D_{k-1}(v) p(n-v) with D = distinct_colored;
// exact ring only
PartitionTable a_table_recurrence(std::uint64_t k, std::size_t terms);

inline constexpr std::uint64_t kOracleBound = 40;

// independent oracle: enumerates partitions part by part in decreasing order
// and counts color assignments per odd part value by stars and bars;
// n <= kOracleBound
mpz_class a_bruteforce(std::uint64_t k, std::uint64_t n);

}  // namespace qcong
