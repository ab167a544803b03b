#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litemat/errors.hpp"

namespace litemat {

// Entity identifiers are bit vectors interpreted as unsigned integers.
// Real-world hierarchies can need more than 64 bits (deep taxonomies have
// been observed above 100), so the canonical value type is 128 bits wide.
// Arithmetic on values that fit in 64 bits compiles down to plain word ops;
// bound64() below is the explicit narrow fast path for hot loops.
using u128 = unsigned __int128;
using CodeValue = u128;

inline constexpr std::uint32_t kMaxSupportedCodeWidth = 128;
inline constexpr std::uint32_t kDefaultMaxCodeWidth = 128;

std::string toDecimalString(u128 v);
u128 parseU128(std::string_view text);  // throws FormatError

std::uint32_t bitWidth(u128 v);

struct U128Hash {
  std::size_t operator()(u128 v) const {
    auto lo = static_cast<std::uint64_t>(v);
    auto hi = static_cast<std::uint64_t>(v >> 64);
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
    h ^= (hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h);
  }
};

/// A fixed-width identifier plus the placement of the entity's own segment
/// inside the bit vector. Bit offsets count from the most significant end;
/// everything right of start + localLength is zero padding.
struct EntityCode {
  CodeValue value = 0;
  std::uint32_t start = 0;
  std::uint32_t localLength = 1;
  std::uint32_t codeLength = 1;

  friend bool operator==(const EntityCode&, const EntityCode&) = default;
};

/// Exclusive upper end of the subsumption interval: every descendant's value
/// lies in [value, bound). Equals value + 2^(codeLength - start - localLength)
/// when the right padding is zero.
inline CodeValue bound(const EntityCode& code) {
  const std::uint32_t shift = code.codeLength - (code.start + code.localLength);
  return (((code.value >> shift) + 1) << shift);
}

/// Narrow fast path for tables whose codeLength fits a machine word.
inline std::uint64_t bound64(std::uint64_t value, std::uint32_t start,
                             std::uint32_t localLength, std::uint32_t codeLength) {
  const std::uint32_t shift = codeLength - (start + localLength);
  return ((value >> shift) + 1) << shift;
}

/// Subsumption pairs (descendant, ancestor) that the interval test cannot
/// see: closure pairs of a DAG hierarchy that are not spanning-tree edges.
/// Empty for tree-shaped hierarchies.
class ResidualPairs {
 public:
  void add(CodeValue descendant, CodeValue ancestor);

  bool contains(CodeValue descendant, CodeValue ancestor) const {
    return pairs_.count({descendant, ancestor}) != 0;
  }

  std::span<const CodeValue> descendantsOf(CodeValue ancestor) const;
  std::span<const CodeValue> ancestorsOf(CodeValue descendant) const;

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const std::set<std::pair<CodeValue, CodeValue>>& pairs() const { return pairs_; }

  friend bool operator==(const ResidualPairs& a, const ResidualPairs& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::set<std::pair<CodeValue, CodeValue>> pairs_;
  std::map<CodeValue, std::vector<CodeValue>> byAncestor_;
  std::map<CodeValue, std::vector<CodeValue>> byDescendant_;
};

/// True iff b's entity is c's entity or lies below it, combining the
/// interval test with the residual side table.
inline bool isDescendantOrSelf(CodeValue b, const EntityCode& c,
                               const ResidualPairs& residuals) {
  return (c.value <= b && b < bound(c)) || residuals.contains(b, c.value);
}

}  // namespace litemat
