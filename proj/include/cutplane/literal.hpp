#pragma once

// Text form of complex values: "a+bi" with both parts in shortest
// round-trip scientific notation and zero signs spelled out, e.g.
// "7.853981633974483e-1+0e0i" or "-2e0-0e0i".

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "cutplane/complex.hpp"

namespace cutplane {

/// Shortest scientific representation that parses back to the same double,
/// with the exponent written without padding ("e-1", "e0", "e300").
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string_view raw(buf, static_cast<std::size_t>(res.ptr - buf));
  const auto e = raw.find('e');
  std::string out(raw.substr(0, e));
  std::string_view exp = raw.substr(e + 1);
  bool negative = false;
  if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
    negative = exp.front() == '-';
    exp.remove_prefix(1);
  }
  while (exp.size() > 1 && exp.front() == '0') exp.remove_prefix(1);
  out += 'e';
  if (negative) out += '-';
  out += exp;
  return out;
}

inline std::string format_complex(const Complex& z) {
  std::string out = format_double(z.x);
  if (std::isnan(z.y)) {
    out += "+nan";
  } else {
    out += std::signbit(z.y) ? '-' : '+';
    out += format_double(std::fabs(z.y));
  }
  out += 'i';
  return out;
}

namespace detail {

inline bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.front() == '+' || s.front() == '-') return false;
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return false;
  out = negative ? -v : v;
  return true;
}

// "+", "-", "" stand for a unit coefficient in front of i
inline bool parse_imag_coefficient(std::string_view s, double& out) {
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return parse_real(s, out);
}

}  // namespace detail

/// Parse "a+bi", "a-bi", "a", "bi" or "i". Zero signs are kept; a missing
/// part is +0. U+2212 is accepted as a minus sign. Throws errc::parse.
inline Complex parse_complex(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else if (c != ' ' && c != '\t') {
      s += static_cast<char>(c);
    }
  }
  const auto fail = [&]() -> Complex {
    throw error(errc::parse, "cannot parse complex literal '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();
  Complex z{0.0, 0.0};
  if (s.back() != 'i' && s.back() != 'j') {
    if (!detail::parse_real(s, z.x)) return fail();
    return z;
  }
  s.pop_back();
  // split at the last sign that is neither leading nor part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (!detail::parse_imag_coefficient(s, z.y)) return fail();
    return z;
  }
  if (!detail::parse_real(std::string_view(s).substr(0, split), z.x)) return fail();
  if (!detail::parse_imag_coefficient(std::string_view(s).substr(split), z.y)) return fail();
  return z;
}

}  // namespace cutplane
