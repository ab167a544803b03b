#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace litemat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statement line that does not parse as N-Triples.
class MalformedLineError : public Error {
 public:
  MalformedLineError(std::size_t line, std::string reason)
      : Error("malformed line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// A schema predicate used with a non-IRI object.
class InvalidAxiomError : public Error {
 public:
  using Error::Error;
};

/// assignCodes was given no entities at all.
class EmptyHierarchyError : public Error {
 public:
  using Error::Error;
};

/// The hierarchy needs more bits than the configured maximum width.
class WidthOverflowError : public Error {
 public:
  using Error::Error;
};

/// An IRI referenced by an axiom has no assigned code.
class UnknownEntityError : public Error {
 public:
  using Error::Error;
};

/// Corrupt or unreadable serialized data.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// locate/extract miss: the term or id is not in the requested table.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A predicate or rdf:type object reached the dataset encoder without a
/// TBox code; signals a pipeline-order bug.
class UnknownSchemaTermError : public Error {
 public:
  using Error::Error;
};

/// A candidate concept id that is absent from the concept table.
class UnknownConceptError : public Error {
 public:
  using Error::Error;
};

/// Query text that does not match the supported grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& reason)
      : Error("syntax error at offset " + std::to_string(position) + ": " + reason),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A SPARQL construct outside the supported subset (OPTIONAL, FILTER, ...).
class UnsupportedFeatureError : public Error {
 public:
  using Error::Error;
};

/// A variable bound in conflicting decode namespaces across patterns.
class NamespaceConflictError : public Error {
 public:
  using Error::Error;
};

}  // namespace litemat
