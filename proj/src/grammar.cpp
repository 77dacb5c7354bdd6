#include "qcong/grammar.hpp"

#include <cctype>

namespace qcong {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::uint64_t parse_uint(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }
  long long parse_int(const char* what) {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    return neg ? -static_cast<long long>(parse_uint(what))
               : static_cast<long long>(parse_uint(what));
  }
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, std::min(pos_, text_.size()));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PochhammerProductSpec parse_pochhammer(Cursor& cur) {
  PochhammerProductSpec spec;
  bool first = true;
  bool denominator = false;
  std::uint64_t modulus = 0;
  while (true) {
    cur.expect('[', "'['");
    std::vector<std::uint64_t> offsets;
    offsets.push_back(cur.parse_uint("offset"));
    while (cur.accept(',')) offsets.push_back(cur.parse_uint("offset"));
    cur.expect(';', "';'");
    std::uint64_t b = cur.parse_uint("modulus");
    if (b == 0) cur.fail("pochhammer modulus must be positive");
    cur.expect(']', "']'");
    if (first) {
      modulus = b;
      first = false;
    } else if (b != modulus) {
      cur.fail("all groups must share one modulus");
    }
    for (std::uint64_t a : offsets) {
      if (a == 0) cur.fail("offsets must be positive");
      spec.factors.push_back({a, denominator});
    }
    if (cur.accept('/')) {
      denominator = true;
    } else if (cur.accept('*')) {
      denominator = false;
    } else {
      break;
    }
  }
  spec.modulus = modulus;
  if (!cur.done()) cur.fail("unexpected trailing input");
  return spec;
}

EtaQuotientSpec parse_eta(Cursor& cur) {
  EtaQuotientSpec spec;
  if (cur.done()) return spec;  // empty product = constant 1
  while (true) {
    std::uint64_t scale = cur.parse_uint("scale");
    if (scale == 0) cur.fail("scale must be positive");
    long long exponent = 1;
    if (cur.accept('^')) exponent = cur.parse_int("exponent");
    spec.factors.push_back({scale, exponent});
    if (!cur.accept('*')) break;
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  return spec;
}

}  // namespace

EtaQuotientSpec parse_eta_spec(std::string_view text) {
  Cursor cur(text);
  return parse_eta(cur);
}

PochhammerProductSpec parse_pochhammer_spec(std::string_view text) {
  Cursor cur(text);
  return parse_pochhammer(cur);
}

SeriesSpec parse_series_spec(std::string_view text) {
  Cursor cur(text);
  if (cur.peek() == '[') return parse_pochhammer(cur);
  return parse_eta(cur);
}

Series build_series(const SeriesSpec& spec, const Ring& ring, std::size_t terms) {
  return std::visit(
      [&](const auto& s) -> Series {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EtaQuotientSpec>)
          return eta_quotient(s, ring, terms);
        else
          return pochhammer_product(s, ring, terms);
      },
      spec);
}

std::string spec_to_string(const SeriesSpec& spec) {
  return std::visit([](const auto& s) { return s.to_string(); }, spec);
}

}  // namespace qcong
