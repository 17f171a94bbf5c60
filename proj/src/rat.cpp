#include "semitop/rat.hpp"

#include "semitop/error.hpp"

#include <sstream>

namespace semitop {

Rat parse_rat(std::string_view text) {
  auto bad = [&] { return input_error("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  const BigInt num = parse_int(text.substr(0, slash));
  if (slash == std::string_view::npos) return Rat(num);
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw bad();
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

}  // namespace semitop
