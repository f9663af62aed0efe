#include "zreg/complexval.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace zreg {

void require_finite(ComplexValue v, const char* what) {
  if (!is_finite(v)) throw DomainError(std::string(what) + ": non-finite result");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(ComplexValue v) {
  if (v.imag() == 0.0) return fmt17(v.real());
  std::string s = fmt17(v.real());
  s += (v.imag() < 0 || std::signbit(v.imag())) ? "-" : "+";
  s += fmt17(std::abs(v.imag()));
  s += "i";
  return s;
}

namespace {

// Strips whitespace, returns the index just past a float literal starting at
// pos, or pos itself when none is present.
std::size_t scan_number(const std::string& s, std::size_t pos) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  std::strtod(begin, &end);
  return pos + static_cast<std::size_t>(end - begin);
}

}  // namespace

ComplexValue parse_complex(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty complex literal");

  // Pure imaginary: "bi", "-bi", "i", "-i".
  // General: "a", "a+bi", "a-bi".
  auto parse_part = [&](std::size_t pos, std::size_t* next) -> double {
    if (s[pos] == '+' && pos + 1 < s.size() && (s[pos + 1] == 'i' || s[pos + 1] == 'I')) {
      *next = pos + 1;
      return 1.0;
    }
    if (s[pos] == '-' && pos + 1 < s.size() && (s[pos + 1] == 'i' || s[pos + 1] == 'I')) {
      *next = pos + 1;
      return -1.0;
    }
    std::size_t end = scan_number(s, pos);
    if (end == pos) {
      if (s[pos] == 'i' || s[pos] == 'I') {
        *next = pos;
        return 1.0;
      }
      throw DomainError("cannot parse complex literal '" + text + "'");
    }
    *next = end;
    return std::strtod(s.c_str() + pos, nullptr);
  };

  std::size_t pos = 0;
  double first = parse_part(0, &pos);
  if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
    if (pos + 1 != s.size())
      throw DomainError("trailing characters in complex literal '" + text + "'");
    return {0.0, first};
  }
  if (pos == s.size()) return {first, 0.0};

  if (s[pos] != '+' && s[pos] != '-')
    throw DomainError("cannot parse complex literal '" + text + "'");
  std::size_t pos2 = 0;
  double second = parse_part(pos, &pos2);
  if (pos2 >= s.size() || (s[pos2] != 'i' && s[pos2] != 'I') || pos2 + 1 != s.size())
    throw DomainError("complex literal must end in 'i': '" + text + "'");
  return {first, second};
}

}  // namespace zreg
