#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliff/algebra.hpp"
#include "cliff/engine.hpp"

namespace cliff {

// ---------------------------------------------------------------------------
// Syntax tree
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := RATIONAL | 'g(' IDX (',' IDX){0,2} ')' | 'g5'
//           | 'eta(' IDX ',' IDX ')' | 'eps(' IDX ',' IDX ',' IDX ',' IDX ')'
//           | '-' factor | '(' expr ')'
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Literal {
  Rational value;
};

// g(i), g(i,j), g(i,j,k): antisymmetrized product, indices as written.
struct GeneratorTerm {
  std::vector<TetradIndex> indices;
};

struct PseudoscalarTerm {};

struct MetricTerm {
  TetradIndex a;
  TetradIndex b;
};

// Lower-index Levi-Civita symbol.
struct EpsilonTerm {
  IndexQuad indices;
};

struct Negation {
  ExprPtr operand;
};

enum class BinaryOp { add, subtract, multiply };

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Group {
  ExprPtr inner;
};

struct Expr {
  std::variant<Literal, GeneratorTerm, PseudoscalarTerm, MetricTerm, EpsilonTerm, Negation, Binary,
               Group>
      node;
  // Byte offset of the first character of this node in the source.
  std::size_t offset = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string &message);
  std::size_t offset() const { return offset_; }
  const std::string &message() const { return message_; }

private:
  std::size_t offset_;
  std::string message_;
};

// Throws ParseError carrying the byte offset of the problem.
ExprPtr parse(std::string_view input);

Multivector evaluate(const Expr &expr, const ProductEngine &engine = ProductEngine::instance());

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

enum class RenderFormat { plain, latex, json };

std::optional<RenderFormat> parse_format(std::string_view name);

// Terms in canonical blade order. Plain output parses back to the same value.
std::string render(const Multivector &mv, RenderFormat fmt);
std::string render(Blade b, RenderFormat fmt);

} // namespace cliff
