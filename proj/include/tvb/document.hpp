#pragma once

#include <optional>
#include <string>

#include "tvb/bundle.hpp"

namespace tvb {

/// Malformed document text; line and column are 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& msg, int line, int column, const std::string& source = "")
      : InvalidInput((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/*
 * Line-oriented sections [fan] [ideal] [diagram] [fixtures] holding `key = value`.
 * Values are integers, p/q rationals or bracket lists and may continue over lines
 * while a bracket is open. '#' starts a comment. Floats are refused.
 *
 *   [fan]      dim, rays, max_cones
 *   [ideal]    generators            (rational rows; [] for L = 0)
 *   [diagram]  rows
 *   [fixtures] extra_columns, extra_degrees ([[alpha...], symdeg] per entry), extra_M_rows
 */
struct BundleDocument {
  Fan fan;
  std::optional<QMatrix> generators;
  std::optional<ZMatrix> diagram;
  Fixtures fixtures;

  bool has_bundle() const { return generators.has_value() && diagram.has_value(); }
  /// Validated bundle; InvalidInput if the ideal or diagram section is absent or invalid.
  ToricVectorBundle bundle() const;
};

BundleDocument parse_document(const std::string& text);
BundleDocument read_document(const std::string& path);

/// Inverse of parse_document up to whitespace and comments.
std::string format_document(const ToricVectorBundle& e);
std::string format_fan(const Fan& f);

/// "a1,a2,...;beta", alpha in the class basis printed by `validate`.
PEClass parse_class(const std::string& text);

}  // namespace tvb
