#include "litemat/rdf/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "litemat/parallel.hpp"

namespace litemat::rdf {

namespace {

bool isWs(char c) { return c == ' ' || c == '\t'; }

void skipWs(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && isWs(text[pos])) ++pos;
}

bool isHexDigit(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

// IRIREF forbids control characters, space and <>"{}|^` plus unescaped '\'.
bool isAllowedIriChar(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u <= 0x20) return false;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
      return false;
    default:
      return true;
  }
}

void requireUcharEscape(std::string_view text, std::size_t& pos) {
  // pos sits on the backslash.
  if (pos + 1 >= text.size()) throw FormatError("dangling escape");
  const char kind = text[pos + 1];
  const std::size_t hexCount = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
  if (hexCount == 0) throw FormatError("bad escape in IRI");
  if (pos + 2 + hexCount > text.size()) throw FormatError("truncated \\u escape");
  for (std::size_t i = 0; i < hexCount; ++i) {
    if (!isHexDigit(text[pos + 2 + i])) throw FormatError("bad hex in \\u escape");
  }
  pos += 2 + hexCount;
}

Term parseIriRef(std::string_view text, std::size_t& pos) {
  const std::size_t open = pos;
  ++pos;  // consume '<'
  while (pos < text.size() && text[pos] != '>') {
    if (text[pos] == '\\') {
      requireUcharEscape(text, pos);
    } else if (!isAllowedIriChar(text[pos])) {
      throw FormatError("character not allowed in IRI");
    } else {
      ++pos;
    }
  }
  if (pos >= text.size()) throw FormatError("unterminated IRI");
  Term t = iri(std::string(text.substr(open + 1, pos - open - 1)));
  ++pos;  // consume '>'
  if (t.lexical.empty()) throw FormatError("empty IRI");
  return t;
}

bool isBlankLabelChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.';
}

Term parseBlankNode(std::string_view text, std::size_t& pos) {
  if (pos + 1 >= text.size() || text[pos + 1] != ':') throw FormatError("bad blank node");
  std::size_t end = pos + 2;
  while (end < text.size() && isBlankLabelChar(text[end])) ++end;
  // A trailing dot belongs to the statement, not the label.
  while (end > pos + 2 && text[end - 1] == '.') --end;
  if (end == pos + 2) throw FormatError("empty blank node label");
  Term t = blankNode(std::string(text.substr(pos, end - pos)));
  pos = end;
  return t;
}

bool isEchar(char c) {
  switch (c) {
    case 't':
    case 'b':
    case 'n':
    case 'r':
    case 'f':
    case '"':
    case '\'':
    case '\\':
      return true;
    default:
      return false;
  }
}

Term parseLiteral(std::string_view text, std::size_t& pos) {
  const std::size_t open = pos;
  ++pos;  // consume opening quote
  while (pos < text.size() && text[pos] != '"') {
    const char c = text[pos];
    if (c == '\\') {
      if (pos + 1 >= text.size()) throw FormatError("dangling escape in literal");
      const char e = text[pos + 1];
      if (isEchar(e)) {
        pos += 2;
      } else if (e == 'u' || e == 'U') {
        requireUcharEscape(text, pos);
      } else {
        throw FormatError("bad escape in literal");
      }
    } else if (c == '\n' || c == '\r') {
      throw FormatError("raw newline in literal");
    } else {
      ++pos;
    }
  }
  if (pos >= text.size()) throw FormatError("unterminated literal");
  ++pos;  // consume closing quote

  if (pos < text.size() && text[pos] == '@') {
    const std::size_t tagStart = pos;
    ++pos;
    std::size_t letters = 0;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '-')) {
      ++pos;
      ++letters;
    }
    if (letters == 0) throw FormatError("empty language tag");
    (void)tagStart;
  } else if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '^') {
    pos += 2;
    if (pos >= text.size() || text[pos] != '<') throw FormatError("datatype must be an IRI");
    parseIriRef(text, pos);
  }
  return literalToken(std::string(text.substr(open, pos - open)));
}

// Parses one statement line. Returns false for blank/comment lines, true
// with `out` filled for statements; throws FormatError on malformed input.
bool parseStatementLine(std::string_view text, Triple& out) {
  std::size_t pos = 0;
  skipWs(text, pos);
  if (pos >= text.size() || text[pos] == '#') return false;

  out.s = parseTermToken(text, pos);
  if (out.s.kind == TermKind::Literal) throw FormatError("literal subject");
  if (pos >= text.size() || !isWs(text[pos])) throw FormatError("missing separator");
  skipWs(text, pos);
  out.p = parseTermToken(text, pos);
  if (out.p.kind != TermKind::Iri) throw FormatError("predicate must be an IRI");
  if (pos >= text.size() || !isWs(text[pos])) throw FormatError("missing separator");
  skipWs(text, pos);
  out.o = parseTermToken(text, pos);
  skipWs(text, pos);
  if (pos >= text.size() || text[pos] != '.') throw FormatError("missing terminating dot");
  ++pos;
  skipWs(text, pos);
  if (pos < text.size() && text[pos] != '#') throw FormatError("trailing characters");
  return true;
}

}  // namespace

Term parseTermToken(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw FormatError("missing term");
  switch (text[pos]) {
    case '<':
      return parseIriRef(text, pos);
    case '_':
      return parseBlankNode(text, pos);
    case '"':
      return parseLiteral(text, pos);
    default:
      throw FormatError("unexpected character at start of term");
  }
}

Term parseTermToken(std::string_view text) {
  std::size_t pos = 0;
  Term t = parseTermToken(text, pos);
  if (pos != text.size()) throw FormatError("trailing characters after term");
  return t;
}

void ParseStats::merge(const ParseStats& other) {
  parsed += other.parsed;
  skipped += other.skipped;
  for (const auto& e : other.sampleErrors) {
    if (sampleErrors.size() >= 5) break;
    sampleErrors.push_back(e);
  }
}

NTriplesReader::NTriplesReader(std::istream& in, ParseMode mode, std::size_t firstLine)
    : in_(in), mode_(mode), line_(firstLine == 0 ? 1 : firstLine) {}

std::optional<Triple> NTriplesReader::next() {
  while (std::getline(in_, buffer_)) {
    const std::size_t lineNo = line_++;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    try {
      Triple t;
      if (!parseStatementLine(buffer_, t)) continue;
      ++stats_.parsed;
      return t;
    } catch (const FormatError& e) {
      if (mode_ == ParseMode::Strict) throw MalformedLineError(lineNo, e.what());
      ++stats_.skipped;
      if (stats_.sampleErrors.size() < 5) {
        stats_.sampleErrors.push_back("line " + std::to_string(lineNo) + ": " + e.what());
      }
    }
  }
  return std::nullopt;
}

std::vector<Triple> parseNTriples(std::istream& in, ParseMode mode, ParseStats* stats) {
  NTriplesReader reader(in, mode);
  std::vector<Triple> result;
  while (auto t = reader.next()) result.push_back(std::move(*t));
  if (stats) stats->merge(reader.stats());
  return result;
}

std::vector<Triple> parseNTriples(std::string_view text, ParseMode mode, ParseStats* stats) {
  std::istringstream in{std::string(text)};
  return parseNTriples(in, mode, stats);
}

std::vector<std::vector<Triple>> parseNTriplesFile(const std::filesystem::path& path,
                                                   std::size_t partitions, ParseMode mode,
                                                   ParseStats* stats) {
  if (partitions == 0) partitions = 1;
  std::error_code ec;
  const auto fileSize = std::filesystem::file_size(path, ec);
  if (ec) throw Error("cannot stat " + path.string() + ": " + ec.message());

  // Chunk boundaries snapped forward to the next newline.
  std::vector<std::uint64_t> offsets{0};
  if (fileSize > 0 && partitions > 1) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error("cannot open " + path.string());
    for (std::size_t i = 1; i < partitions; ++i) {
      std::uint64_t target = fileSize * i / partitions;
      if (target <= offsets.back()) continue;
      probe.seekg(static_cast<std::streamoff>(target));
      std::string dummy;
      std::getline(probe, dummy);
      const auto snapped = probe.tellg();
      if (snapped == std::streampos(-1)) break;
      const auto off = static_cast<std::uint64_t>(snapped);
      if (off > offsets.back() && off < fileSize) offsets.push_back(off);
    }
  }
  offsets.push_back(fileSize);

  const std::size_t chunkCount = offsets.size() - 1;
  std::vector<std::vector<Triple>> result(chunkCount);
  std::vector<ParseStats> chunkStats(chunkCount);

  parallelFor(chunkCount, [&](std::size_t i) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    in.seekg(static_cast<std::streamoff>(offsets[i]));
    std::uint64_t remaining = offsets[i + 1] - offsets[i];
    std::string line;
    NTriplesReader reader(in, mode);
    // Read only this chunk: track consumed bytes by line length.
    std::istringstream chunkStream;
    std::string chunk;
    chunk.resize(remaining);
    in.read(chunk.data(), static_cast<std::streamsize>(remaining));
    chunk.resize(static_cast<std::size_t>(in.gcount()));
    chunkStream.str(std::move(chunk));
    NTriplesReader chunkReader(chunkStream, mode);
    while (auto t = chunkReader.next()) result[i].push_back(std::move(*t));
    chunkStats[i] = chunkReader.stats();
    (void)line;
    (void)reader;
  });

  if (stats) {
    for (const auto& cs : chunkStats) stats->merge(cs);
  }
  // Drop empty tail chunks but keep at least one partition.
  while (result.size() > 1 && result.back().empty()) result.pop_back();
  return result;
}

std::string toToken(const Term& term) {
  switch (term.kind) {
    case TermKind::Iri:
      return "<" + term.lexical + ">";
    case TermKind::BlankNode:
    case TermKind::Literal:
      return term.lexical;
  }
  return {};
}

std::string toStatement(const Triple& t) {
  return toToken(t.s) + " " + toToken(t.p) + " " + toToken(t.o) + " .";
}

void writeNTriples(std::ostream& out, std::span<const Triple> triples) {
  for (const auto& t : triples) out << toStatement(t) << '\n';
}

std::string toNTriplesString(std::span<const Triple> triples) {
  std::ostringstream out;
  writeNTriples(out, triples);
  return out.str();
}

}  // namespace litemat::rdf
