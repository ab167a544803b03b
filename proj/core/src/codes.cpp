#include "litemat/codes.hpp"

#include <algorithm>

namespace litemat {

std::string toDecimalString(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

u128 parseU128(std::string_view text) {
  if (text.empty()) throw FormatError("empty integer");
  u128 result = 0;
  constexpr u128 max = ~u128{0};
  for (char c : text) {
    if (c < '0' || c > '9') throw FormatError("bad digit in integer: " + std::string(text));
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (result > (max - digit) / 10) throw FormatError("integer overflow: " + std::string(text));
    result = result * 10 + digit;
  }
  return result;
}

std::uint32_t bitWidth(u128 v) {
  std::uint32_t width = 0;
  while (v != 0) {
    ++width;
    v >>= 1;
  }
  return width;
}

void ResidualPairs::add(CodeValue descendant, CodeValue ancestor) {
  if (pairs_.insert({descendant, ancestor}).second) {
    byAncestor_[ancestor].push_back(descendant);
    byDescendant_[descendant].push_back(ancestor);
  }
}

std::span<const CodeValue> ResidualPairs::descendantsOf(CodeValue ancestor) const {
  auto it = byAncestor_.find(ancestor);
  if (it == byAncestor_.end()) return {};
  return it->second;
}

std::span<const CodeValue> ResidualPairs::ancestorsOf(CodeValue descendant) const {
  auto it = byDescendant_.find(descendant);
  if (it == byDescendant_.end()) return {};
  return it->second;
}

}  // namespace litemat
