#include "polycount/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace polycount {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace polycount
