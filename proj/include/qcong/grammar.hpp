#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qcong/eta.hpp"

namespace qcong {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  // zero-based offset of the offending character
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

using SeriesSpec = std::variant<EtaQuotientSpec, PochhammerProductSpec>;

// "2^3 * 1^-4"; a bare scale means exponent 1; empty input is the constant 1
EtaQuotientSpec parse_eta_spec(std::string_view text);
// "[2,3;5]/[1,4;5]": bracketed offset groups, '/' flips to the denominator
PochhammerProductSpec parse_pochhammer_spec(std::string_view text);
// dispatches on a leading '[': pochhammer quotient, otherwise eta quotient
SeriesSpec parse_series_spec(std::string_view text);

Series build_series(const SeriesSpec& spec, const Ring& ring, std::size_t terms);
std::string spec_to_string(const SeriesSpec& spec);

}  // namespace qcong
