#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litemat/errors.hpp"
#include "litemat/rdf/term.hpp"

namespace litemat::rdf {

enum class ParseMode : std::uint8_t {
  Strict,   // throw MalformedLineError on the first bad statement
  Lenient,  // skip bad statements, counting them
};

struct ParseStats {
  std::uint64_t parsed = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> sampleErrors;  // first few, for diagnostics

  void merge(const ParseStats& other);
};

/// Streaming N-Triples reader. Pulls one statement line at a time, so peak
/// memory is bounded by the longest line, not the input size. Instances are
/// independent; a file may be split at line boundaries and handed to
/// concurrent readers.
class NTriplesReader {
 public:
  explicit NTriplesReader(std::istream& in, ParseMode mode = ParseMode::Strict,
                          std::size_t firstLine = 1);

  /// Next triple, or nullopt at end of input.
  std::optional<Triple> next();

  const ParseStats& stats() const { return stats_; }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  ParseMode mode_;
  std::size_t line_;
  ParseStats stats_;
  std::string buffer_;
};

std::vector<Triple> parseNTriples(std::istream& in, ParseMode mode = ParseMode::Strict,
                                  ParseStats* stats = nullptr);
std::vector<Triple> parseNTriples(std::string_view text, ParseMode mode = ParseMode::Strict,
                                  ParseStats* stats = nullptr);

/// Parses a file split into `partitions` byte ranges aligned to line
/// boundaries, one concurrent reader per range.
std::vector<std::vector<Triple>> parseNTriplesFile(const std::filesystem::path& path,
                                                   std::size_t partitions,
                                                   ParseMode mode = ParseMode::Strict,
                                                   ParseStats* stats = nullptr);

/// Parses one term token (used by statement parsing and dictionary files).
/// `pos` is advanced past the token. Throws FormatError on bad input.
Term parseTermToken(std::string_view text, std::size_t& pos);
Term parseTermToken(std::string_view text);

void writeNTriples(std::ostream& out, std::span<const Triple> triples);
std::string toNTriplesString(std::span<const Triple> triples);
std::string toStatement(const Triple& t);  // one line, no trailing newline

}  // namespace litemat::rdf
