#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"
#include "tensalg/hopf.hpp"

namespace tensalg {

enum class NodeKind { kRational, kGenerator, kNegate, kBinary, kCall };

enum class BinaryOp {
  kAdd,            // +
  kSub,            // -
  kProduct,        // * and ·
  kWedge,          // ^
  kJoint,          // ;   u (x) v into the joint algebra
  kSquare,         // @
  kCircle,         // o   (mode chosen at evaluation)
  kCircleSym,      // o_s
  kCircleAntisym,  // o_a
};

struct ExprAst {
  NodeKind kind = NodeKind::kRational;
  Scalar value;           // kRational
  Side side = Side::kU;   // kGenerator
  Letter index = 0;       // kGenerator
  BinaryOp op = BinaryOp::kAdd;
  std::string name;       // kCall
  std::vector<ExprAst> children;
  int line = 1;
  int column = 1;

  // Structural equality; source positions are ignored.
  friend bool operator==(const ExprAst& a, const ExprAst& b);
};

// Grammar (whitespace insignificant, all infix operators left-associative):
//   expr  := term (('+' | '-') term)*
//   term  := unary (INFIX unary)*, binding tightest first:
//            '*' '^' '·'  >  ';'  >  '@'  >  'o' 'o_s' 'o_a'
//   unary := '-' unary | atom
//   atom  := RATIONAL | 'e'INT | 'f'INT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
// Throws ParseError with the offending position.
ExprAst parse_expression(std::string_view text);

// Fully parenthesized source text that parses back to an equal tree.
std::string to_source(const ExprAst& ast);

enum class CircleMode { kSymmetric, kAntisymmetric };

struct EvalOptions {
  CircleMode circle = CircleMode::kSymmetric;
  Caps caps;
};

// A scalar carries no side until combined with an element.
using Value = std::variant<Scalar, Element, JointElement, TensorSquare, JointTensorSquare>;

// Throws Error(kType / kSideMismatch / kSelfDualRequired / ...) on ill-typed input.
Value evaluate(const ExprAst& ast, const SpaceSpec& spec, const EvalOptions& options = {});

std::string to_string(const Value& value);

// parse + evaluate + print.
std::string evaluate_text(std::string_view text, const SpaceSpec& spec,
                          const EvalOptions& options = {});

}  // namespace tensalg
