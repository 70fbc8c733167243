#include "qlat/formula.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace qlat {

FormulaPtr Formula::make_atom(std::string name, SourceSpan span) {
  return FormulaPtr(new Formula(Kind::atom, std::move(name), nullptr, nullptr, span));
}

FormulaPtr Formula::make_negation(FormulaPtr child, SourceSpan span) {
  return FormulaPtr(new Formula(Kind::negation, {}, std::move(child), nullptr, span));
}

FormulaPtr Formula::make_conjunction(FormulaPtr lhs, FormulaPtr rhs, SourceSpan span) {
  return FormulaPtr(new Formula(Kind::conjunction, {}, std::move(lhs), std::move(rhs), span));
}

FormulaPtr Formula::make_disjunction(FormulaPtr lhs, FormulaPtr rhs, SourceSpan span) {
  return FormulaPtr(new Formula(Kind::disjunction, {}, std::move(lhs), std::move(rhs), span));
}

std::string ParseError::message() const {
  return "parse error at position " + std::to_string(position) + ": expected " + expected +
         ", found " + found;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) {}

  ParseResult run() {
    FormulaPtr f = parse_or();
    if (!f) return std::move(error_);
    skip_ws();
    if (pos_ != input_.size()) {
      return fail(pos_, "end of input or an operator ('&', '|')");
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= input_.size();
  }

  char peek() { return input_[pos_]; }

  std::string found_text(std::size_t at) const {
    if (at >= input_.size()) return "end of input";
    if (ident_start(input_[at])) {
      std::size_t end = at;
      while (end < input_.size() && ident_char(input_[end])) ++end;
      return "'" + std::string(input_.substr(at, end - at)) + "'";
    }
    return "'" + std::string(1, input_[at]) + "'";
  }

  FormulaPtr fail_ptr(std::size_t at, std::string expected) {
    error_ = ParseError{at, std::move(expected), found_text(at)};
    return nullptr;
  }

  ParseError fail(std::size_t at, std::string expected) {
    return ParseError{at, std::move(expected), found_text(at)};
  }

  bool expect_char(char c, const char* desc) {
    skip_ws();
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    error_ = fail(pos_, desc);
    return false;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    if (!lhs) return nullptr;
    while (!at_end() && peek() == '|') {
      ++pos_;
      FormulaPtr rhs = parse_and();
      if (!rhs) return nullptr;
      const SourceSpan span{lhs->span().begin, rhs->span().end};
      lhs = Formula::make_disjunction(std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    if (!lhs) return nullptr;
    while (!at_end() && peek() == '&') {
      ++pos_;
      FormulaPtr rhs = parse_unary();
      if (!rhs) return nullptr;
      const SourceSpan span{lhs->span().begin, rhs->span().end};
      lhs = Formula::make_conjunction(std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (pos_ >= input_.size()) {
      return fail_ptr(pos_, "a proposition (atom, '!' or '(')");
    }
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '!') {
      ++pos_;
      FormulaPtr child = parse_unary();
      if (!child) return nullptr;
      return Formula::make_negation(std::move(child), {start, child->span().end});
    }
    if (c == '(') {
      ++pos_;
      FormulaPtr inner = parse_or();
      if (!inner) return nullptr;
      if (!expect_char(')', "')'")) return nullptr;
      return inner;
    }
    if (ident_start(c)) return parse_atom();
    return fail_ptr(pos_, "a proposition (atom, '!' or '(')");
  }

  FormulaPtr parse_atom() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < input_.size() && ident_char(input_[end])) ++end;
    std::string name(input_.substr(start, end - start));
    pos_ = end;

    // "P" immediately entering a bracket is the spin-proposition form; a bare
    // "P" without one stays an ordinary identifier.
    skip_ws();
    if (name == "P" && pos_ < input_.size() && peek() == '[') {
      ++pos_;
      const auto outcome = parse_int();
      if (!outcome) return nullptr;
      if (!expect_char(',', "','")) return nullptr;
      const auto axis = parse_int();
      if (!axis) return nullptr;
      if (!expect_char(']', "']'")) return nullptr;
      name = "P[" + *outcome + "," + *axis + "]";
      return Formula::make_atom(std::move(name), {start, pos_});
    }
    return Formula::make_atom(std::move(name), {start, end});
  }

  std::optional<std::string> parse_int() {
    skip_ws();
    std::size_t end = pos_;
    while (end < input_.size() && std::isdigit(static_cast<unsigned char>(input_[end]))) ++end;
    if (end == pos_) {
      error_ = fail(pos_, "an integer");
      return std::nullopt;
    }
    std::string digits(input_.substr(pos_, end - pos_));
    pos_ = end;
    return digits;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  ParseError error_;
};

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::disjunction: return 1;
    case Formula::Kind::conjunction: return 2;
    default: return 3;
  }
}

void print_node(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      out += f.atom_name();
      return;
    case Formula::Kind::negation: {
      out += '!';
      const bool parens = precedence(f.child()->kind()) < precedence(f.kind());
      if (parens) out += '(';
      print_node(*f.child(), out);
      if (parens) out += ')';
      return;
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const char* op = f.kind() == Formula::Kind::conjunction ? " & " : " | ";
      const int prec = precedence(f.kind());
      // Left-associative operators: the left child tolerates equal
      // precedence, the right child needs parentheses to keep its grouping.
      const bool lparens = precedence(f.lhs()->kind()) < prec;
      const bool rparens = precedence(f.rhs()->kind()) <= prec;
      if (lparens) out += '(';
      print_node(*f.lhs(), out);
      if (lparens) out += ')';
      out += op;
      if (rparens) out += '(';
      print_node(*f.rhs(), out);
      if (rparens) out += ')';
      return;
    }
  }
}

}  // namespace

ParseResult parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Formula& f) {
  std::string out;
  print_node(f, out);
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::atom:
      return a.atom_name() == b.atom_name();
    case Formula::Kind::negation:
      return structurally_equal(*a.child(), *b.child());
    default:
      return structurally_equal(*a.lhs(), *b.lhs()) && structurally_equal(*a.rhs(), *b.rhs());
  }
}

}  // namespace qlat
