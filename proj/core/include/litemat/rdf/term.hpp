#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>

namespace litemat::rdf {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// One RDF term. `lexical` holds the IRI text without angle brackets, the
/// blank-node token including its `_:` prefix, or the full literal token as
/// written (quotes, escapes, and any `@lang` / `^^<datatype>` suffix).
/// Identity is the exact lexical form: "1"^^xsd:int and "01"^^xsd:int are
/// distinct terms.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b) {
    return std::tie(a.kind, a.lexical) < std::tie(b.kind, b.lexical);
  }
};

inline Term iri(std::string text) { return {TermKind::Iri, std::move(text)}; }
inline Term iri(std::string_view text) { return {TermKind::Iri, std::string(text)}; }
inline Term blankNode(std::string token) { return {TermKind::BlankNode, std::move(token)}; }
inline Term literalToken(std::string token) { return {TermKind::Literal, std::move(token)}; }

/// Token form used in N-Triples statements and dictionary files.
std::string toToken(const Term& term);

struct TermHash {
  std::size_t operator()(const Term& t) const {
    return std::hash<std::string>{}(t.lexical) * 31u + static_cast<std::size_t>(t.kind);
  }
};

struct Triple {
  Term s, p, o;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    TermHash h;
    std::size_t seed = h(t.s);
    seed ^= h(t.p) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    seed ^= h(t.o) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace litemat::rdf
