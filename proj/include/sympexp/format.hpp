#ifndef SYMPEXP_FORMAT_HPP
#define SYMPEXP_FORMAT_HPP

#include <charconv>
#include <string>

namespace sympexp {

/// Decimal text with 17 significant digits (round-trips every double).
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace sympexp

#endif  // SYMPEXP_FORMAT_HPP
