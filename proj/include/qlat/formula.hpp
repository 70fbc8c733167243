#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace qlat {

/// Half-open character range in the source text a node was parsed from.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable proposition tree. Connectives: '!' (tightest), '&', '|', both
/// binary operators left-associative. Atoms are either spin propositions
/// like P[1,3] or free identifiers bound later against a registry.
class Formula {
 public:
  enum class Kind { atom, negation, conjunction, disjunction };

  static FormulaPtr make_atom(std::string name, SourceSpan span = {});
  static FormulaPtr make_negation(FormulaPtr child, SourceSpan span = {});
  static FormulaPtr make_conjunction(FormulaPtr lhs, FormulaPtr rhs, SourceSpan span = {});
  static FormulaPtr make_disjunction(FormulaPtr lhs, FormulaPtr rhs, SourceSpan span = {});

  Kind kind() const { return kind_; }
  const std::string& atom_name() const { return name_; }
  const FormulaPtr& child() const { return lhs_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  SourceSpan span() const { return span_; }

 private:
  Formula(Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs, SourceSpan span)
      : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)),
        span_(span) {}

  Kind kind_;
  std::string name_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  SourceSpan span_;
};

/// Parse failure: the character position where the problem was detected plus
/// what the parser expected and what it found instead. For errors at end of
/// input, position equals the input length.
struct ParseError {
  std::size_t position = 0;
  std::string expected;
  std::string found;

  std::string message() const;
};

using ParseResult = std::variant<FormulaPtr, ParseError>;

/// Parses the proposition grammar:
///   formula := or
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | "(" formula ")" | atom
///   atom    := "P" "[" int "," int "]" | identifier
/// Whitespace between tokens is ignored.
ParseResult parse(std::string_view input);

/// Canonical rendering with minimal parentheses; parse(print(f)) rebuilds a
/// structurally equal tree.
std::string print(const Formula& f);

bool structurally_equal(const Formula& a, const Formula& b);

}  // namespace qlat
