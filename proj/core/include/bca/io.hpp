#pragma once

// Line-oriented text format for algebras, relations, operators, maps and
// reports.
//
//   # comment
//   format: 1
//   kind: contact
//   algebra: a b c
//   grills: [^b] [^c]
//   ---
//   kind: partition
//   ...
//
// Each document is a block of `key: value` lines; `---` separates documents.
// An indented line continues the value of the previous key. Elements are
// written as 0, 1, a, a+b, {a,b}, or ab when every atom name is one letter.

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bca/alexandroff.hpp"
#include "bca/boolean.hpp"
#include "bca/contact.hpp"
#include "bca/frame.hpp"
#include "bca/modal.hpp"
#include "bca/morphisms.hpp"
#include "bca/resolution.hpp"

namespace bca::io {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Flat key-value report. Keys are emitted in insertion order.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  template <class B>
    requires std::same_as<B, bool>
  void add(std::string key, B value) {
    add(std::move(key), std::string(value ? "true" : "false"));
  }
  friend bool operator==(const Report&, const Report&) = default;
};

enum class Kind { Algebra, Contact, Modal, Partition, Frame, Preorder, Map, Report };

std::string_view kind_name(Kind kind);

using Body = std::variant<Algebra, ContactRelation, ModalOperator, Partition, Frame, FinitePreorder, AlgebraMap, Report>;

struct Document {
  /// Optional label from the `name` key.
  std::string name;
  Body body;

  Kind kind() const { return static_cast<Kind>(body.index()); }
};

/// The body as T; throws std::invalid_argument naming both kinds otherwise.
template <class T>
const T& body_as(const Document& doc, Kind expected) {
  if (const T* p = std::get_if<T>(&doc.body)) return *p;
  throw std::invalid_argument("expected a " + std::string(kind_name(expected)) + " document, got " +
                              std::string(kind_name(doc.kind())));
}

/// Parses every document in the text. Throws ParseError on any syntax,
/// reference or shape error, and on report documents.
std::vector<Document> parse_documents(std::string_view text);
/// Parses text holding exactly one document.
Document parse_document(std::string_view text);

/// Parses one element reference against the algebra. Throws ParseError with
/// line 1 and the column inside `text`.
Region parse_element(const Algebra& algebra, std::string_view text);

enum class RelationForm {
  /// builtin: overlap, else frame form when the relation is atom-determined,
  /// else explicit pairs.
  Canonical,
  Pairs,
  Matrix,
};

struct WriteOptions {
  RelationForm relation_form = RelationForm::Canonical;
  /// Emit the `format: 1` header before the first document.
  bool header = true;
};

std::string serialize(const Document& doc, const WriteOptions& options = {});
std::string serialize_documents(const std::vector<Document>& docs, const WriteOptions& options = {});

/// Aligned human-readable form of a report.
std::string render_text(const Report& report);

}  // namespace bca::io
