#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folia/germ.hpp"

namespace folia {

// Parse failure with a 1-based character position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& msg)
      : Error(kind, std::string(to_string(kind)) + " at offset " + std::to_string(offset) + ": " + msg, msg),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Basis { DDz, DDw, Dz, Dw };

inline std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::DDz: return "d/dz";
    case Basis::DDw: return "d/dw";
    case Basis::Dz: return "dz";
    case Basis::Dw: return "dw";
  }
  return "?";
}

inline bool is_vector_basis(Basis b) { return b == Basis::DDz || b == Basis::DDw; }

struct Ast {
  enum class Kind { Number, VarZ, VarW, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  Rat value;          // Number
  unsigned exponent = 0;  // Pow
  std::vector<std::shared_ptr<const Ast>> children;

  BiPoly eval() const {
    switch (kind) {
      case Kind::Number: return BiPoly(value);
      case Kind::VarZ: return BiPoly::z();
      case Kind::VarW: return BiPoly::w();
      case Kind::Add: return children[0]->eval() + children[1]->eval();
      case Kind::Sub: return children[0]->eval() - children[1]->eval();
      case Kind::Mul: return children[0]->eval() * children[1]->eval();
      case Kind::Neg: return -children[0]->eval();
      case Kind::Pow: return children[0]->eval().pow(exponent);
    }
    return {};
  }

  std::string str() const {
    switch (kind) {
      case Kind::Number: return value.str();
      case Kind::VarZ: return "z";
      case Kind::VarW: return "w";
      case Kind::Add: return "(" + children[0]->str() + " + " + children[1]->str() + ")";
      case Kind::Sub: return "(" + children[0]->str() + " - " + children[1]->str() + ")";
      case Kind::Mul: return "(" + children[0]->str() + " * " + children[1]->str() + ")";
      case Kind::Neg: return "-" + children[0]->str();
      case Kind::Pow: return children[0]->str() + "^" + std::to_string(exponent);
    }
    return {};
  }
};

using AstPtr = std::shared_ptr<const Ast>;

// Top-level sum of coefficient * basis-symbol terms.
struct FormAst {
  struct Term {
    AstPtr coefficient;
    Basis basis;
    std::size_t offset;
  };
  std::vector<Term> terms;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  FormAst parse() {
    FormAst out;
    skip();
    if (pos_ >= s_.size()) fail("empty input");
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    out.terms.push_back(term(negate));
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      if (peek('+') || peek('-')) {
        bool neg = s_[pos_] == '-';
        ++pos_;
        out.terms.push_back(term(neg));
      } else {
        fail("expected '+', '-' or end of input");
      }
    }
    std::optional<bool> vector;
    for (const auto& t : out.terms) {
      bool v = is_vector_basis(t.basis);
      if (vector && *vector != v)
        throw ParseError(ErrorKind::MixedSyntax, t.offset + 1,
                         std::string(to_string(t.basis)) + " mixes 1-form and vector-field symbols");
      vector = v;
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    std::size_t p = at ? *at : pos_;
    std::string found = p < s_.size() ? "'" + std::string(1, s_[p]) + "'" : "end of input";
    throw ParseError(ErrorKind::SyntaxError, p + 1, msg + ", found " + found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::optional<Basis> basis_here() {
    skip();
    auto rest = s_.substr(pos_);
    auto word_end = [&](std::size_t n) {
      return rest.size() == n || !std::isalnum(static_cast<unsigned char>(rest[n]));
    };
    if (rest.starts_with("d/dz") && word_end(4)) return Basis::DDz;
    if (rest.starts_with("d/dw") && word_end(4)) return Basis::DDw;
    if (rest.starts_with("dz") && word_end(2)) return Basis::Dz;
    if (rest.starts_with("dw") && word_end(2)) return Basis::Dw;
    return std::nullopt;
  }
  std::size_t basis_length(Basis b) const { return is_vector_basis(b) ? 4 : 2; }

  FormAst::Term term(bool negate) {
    skip();
    AstPtr coeff;
    if (auto b = basis_here()) {
      std::size_t at = pos_;
      pos_ += basis_length(*b);
      coeff = number(Rat(1));
      return {negate ? neg(coeff) : coeff, *b, at};
    }
    coeff = power();
    while (peek('*')) {
      ++pos_;
      if (auto b = basis_here()) {
        std::size_t at = pos_;
        pos_ += basis_length(*b);
        skip();
        if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-')
          fail("a basis symbol must end its term");
        return {negate ? neg(coeff) : coeff, *b, at};
      }
      coeff = binary(Ast::Kind::Mul, coeff, power());
    }
    fail("expected '*' followed by d/dz, d/dw, dz or dw");
  }

  // scalar polynomial grammar: expr := mterm (('+'|'-') mterm)*
  AstPtr expr() {
    AstPtr lhs;
    if (peek('-')) {
      ++pos_;
      lhs = neg(mterm());
    } else {
      if (peek('+')) ++pos_;
      lhs = mterm();
    }
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      lhs = binary(minus ? Ast::Kind::Sub : Ast::Kind::Add, lhs, mterm());
    }
    return lhs;
  }

  AstPtr mterm() {
    AstPtr lhs = power();
    while (peek('*')) {
      ++pos_;
      lhs = binary(Ast::Kind::Mul, lhs, power());
    }
    return lhs;
  }

  // unary minus binds looser than '^': -z^2 is -(z^2)
  AstPtr power() {
    if (peek('-')) {
      ++pos_;
      return neg(power());
    }
    AstPtr base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '('))
        throw ParseError(ErrorKind::NonIntegerExponent, at + 1, "exponents are nonnegative integer literals");
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
          throw ParseError(ErrorKind::NonIntegerExponent, at + 1, "exponents are nonnegative integer literals");
        fail("expected an exponent");
      }
      Rat e = literal();
      if (!e.is_integer())
        throw ParseError(ErrorKind::NonIntegerExponent, at + 1, "exponent " + e.str() + " is not an integer");
      if (!e.num().fits_uint_p()) throw ParseError(ErrorKind::SyntaxError, at + 1, "exponent too large");
      auto n = std::make_shared<Ast>();
      n->kind = Ast::Kind::Pow;
      n->exponent = static_cast<unsigned>(e.num().get_ui());
      n->children = {base};
      if (peek('^')) fail("chained exponents need parentheses");
      return n;
    }
    return base;
  }

  AstPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected a number, z, w or '('");
    char c = s_[pos_];
    if (basis_here()) fail("basis symbols may only end a top-level term");
    if (std::isdigit(static_cast<unsigned char>(c))) return number(literal());
    if (c == '(') {
      ++pos_;
      AstPtr e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'z' || c == 'w') {
      std::size_t n = pos_ + 1;
      if (n < s_.size() && std::isalnum(static_cast<unsigned char>(s_[n]))) fail("unknown identifier");
      ++pos_;
      auto a = std::make_shared<Ast>();
      a->kind = c == 'z' ? Ast::Kind::VarZ : Ast::Kind::VarW;
      return a;
    }
    fail("expected a number, z, w or '('");
  }

  // integer or p/q literal (no spaces inside)
  Rat literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string text(s_.substr(start, pos_ - start));
    try {
      return Rat::parse(text);
    } catch (const Error&) {
      throw ParseError(ErrorKind::SyntaxError, start + 1, "bad literal '" + text + "'");
    }
  }

  static AstPtr number(const Rat& r) {
    auto a = std::make_shared<Ast>();
    a->kind = Ast::Kind::Number;
    a->value = r;
    return a;
  }
  static AstPtr neg(AstPtr x) {
    auto a = std::make_shared<Ast>();
    a->kind = Ast::Kind::Neg;
    a->children = {std::move(x)};
    return a;
  }
  static AstPtr binary(Ast::Kind k, AstPtr l, AstPtr r) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    a->children = {std::move(l), std::move(r)};
    return a;
  }
};

}  // namespace detail

inline FormAst parse_ast(std::string_view text) { return detail::Parser(text).parse(); }

struct ParsedFoliation {
  FoliationGerm germ;
  bool one_form = false;
  std::vector<std::string> warnings;
};

// Parses "P*d/dz + Q*d/dw" or "A*dz + B*dw" (converted through (P, Q) = (B, -A)).
inline ParsedFoliation parse_foliation(std::string_view text) {
  FormAst ast = parse_ast(text);
  BiPoly c[4];
  for (const auto& t : ast.terms) c[static_cast<int>(t.basis)] += t.coefficient->eval();
  ParsedFoliation out;
  out.one_form = !is_vector_basis(ast.terms.front().basis);
  BiPoly p = out.one_form ? c[static_cast<int>(Basis::Dw)] : c[static_cast<int>(Basis::DDz)];
  BiPoly q = out.one_form ? -c[static_cast<int>(Basis::Dz)] : c[static_cast<int>(Basis::DDw)];
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::InvalidArgument, "foliation is identically zero");
  out.germ = FoliationGerm(p, q);
  if (!out.germ.removed_factor().is_constant())
    out.warnings.push_back("common factor " + out.germ.removed_factor().str() + " divided out");
  return out;
}

// Canonical text of a germ; parse_foliation reproduces the same germ.
inline std::string print_foliation(const FoliationGerm& g) { return g.str(); }

}  // namespace folia
