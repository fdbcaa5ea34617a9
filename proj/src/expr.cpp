#include "tensalg/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "tensalg/error.hpp"
#include "tensalg/laplace.hpp"
#include "tensalg/products.hpp"
#include "tensalg/symmetry.hpp"

namespace tensalg {

bool operator==(const ExprAst& a, const ExprAst& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::kRational: return a.value == b.value;
    case NodeKind::kGenerator: return a.side == b.side && a.index == b.index;
    case NodeKind::kNegate: return a.children == b.children;
    case NodeKind::kBinary: return a.op == b.op && a.children == b.children;
    case NodeKind::kCall: return a.name == b.name && a.children == b.children;
  }
  return false;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { kEnd, kNumber, kIdent, kLParen, kRParen, kComma, kPlus, kMinus, kStar, kCaret,
                 kAt, kDot, kSemicolon };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ == text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::kNumber;
        t.text = digits();
        // INT '/' INT forms one rational literal.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          advance();
          t.text += "/" + digits();
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::kIdent;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          t.text += text_[pos_];
          advance();
        }
      } else if (text_.substr(pos_, 2) == "\xC2\xB7") {
        t.kind = Tok::kDot;
        t.text = "\xC2\xB7";
        pos_ += 2;
        ++column_;
      } else {
        switch (c) {
          case '(': t.kind = Tok::kLParen; break;
          case ')': t.kind = Tok::kRParen; break;
          case ',': t.kind = Tok::kComma; break;
          case '+': t.kind = Tok::kPlus; break;
          case '-': t.kind = Tok::kMinus; break;
          case '*': t.kind = Tok::kStar; break;
          case '^': t.kind = Tok::kCaret; break;
          case '@': t.kind = Tok::kAt; break;
          case ';': t.kind = Tok::kSemicolon; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------- parsing

const std::map<std::string, std::size_t>& function_arity() {
  static const std::map<std::string, std::size_t> table = {
      {"symm", 1}, {"asymm", 1}, {"S", 1},     {"eps", 1},      {"delta", 1},
      {"lap", 2},  {"lap_slow", 2}, {"dual", 2}, {"pow", 2},    {"phi_t", 1},
      {"phi_s", 1}, {"phi_a", 1},
  };
  return table;
}

std::optional<BinaryOp> circle_op(const std::string& ident) {
  if (ident == "o") return BinaryOp::kCircle;
  if (ident == "o_s") return BinaryOp::kCircleSym;
  if (ident == "o_a") return BinaryOp::kCircleAntisym;
  return std::nullopt;
}

bool is_generator_name(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f')) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprAst parse() {
    ExprAst out = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::kEnd ? " at end of input" : ", found '" + peek().text + "'"));
    }
    ++pos_;
  }

  static ExprAst binary(BinaryOp op, ExprAst lhs, ExprAst rhs, const Token& at) {
    ExprAst node;
    node.kind = NodeKind::kBinary;
    node.op = op;
    node.line = at.line;
    node.column = at.column;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprAst expr() {
    ExprAst lhs = infix(0);
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token op = take();
      ExprAst rhs = infix(0);
      lhs = binary(op.kind == Tok::kPlus ? BinaryOp::kAdd : BinaryOp::kSub, std::move(lhs),
                   std::move(rhs), op);
    }
    return lhs;
  }

  // Binding level of the infix operator at the cursor, if any.
  std::optional<std::pair<int, BinaryOp>> infix_at_cursor() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kStar:
      case Tok::kDot: return std::make_pair(3, BinaryOp::kProduct);
      case Tok::kCaret: return std::make_pair(3, BinaryOp::kWedge);
      case Tok::kSemicolon: return std::make_pair(2, BinaryOp::kJoint);
      case Tok::kAt: return std::make_pair(1, BinaryOp::kSquare);
      case Tok::kIdent:
        if (auto op = circle_op(t.text)) return std::make_pair(0, *op);
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  // Precedence climbing over the term-level infix operators.
  ExprAst infix(int min_level) {
    ExprAst lhs = unary();
    for (;;) {
      auto op = infix_at_cursor();
      if (!op || op->first < min_level) return lhs;
      const Token at = take();
      ExprAst rhs = infix(op->first + 1);
      lhs = binary(op->second, std::move(lhs), std::move(rhs), at);
    }
  }

  ExprAst unary() {
    if (peek().kind == Tok::kMinus) {
      const Token at = take();
      ExprAst node;
      node.kind = NodeKind::kNegate;
      node.line = at.line;
      node.column = at.column;
      node.children.push_back(unary());
      return node;
    }
    return atom();
  }

  ExprAst atom() {
    const Token t = peek();
    ExprAst node;
    node.line = t.line;
    node.column = t.column;
    switch (t.kind) {
      case Tok::kNumber:
        ++pos_;
        node.kind = NodeKind::kRational;
        try {
          node.value = parse_scalar(t.text);
        } catch (const Error& e) {
          throw ParseError(e.what(), t.line, t.column);
        }
        return node;
      case Tok::kLParen: {
        ++pos_;
        ExprAst inner = expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent: {
        ++pos_;
        if (is_generator_name(t.text)) {
          const unsigned long index = std::stoul(t.text.substr(1));
          if (index == 0 || index > 255) {
            throw ParseError("generator index out of range in '" + t.text + "'", t.line,
                             t.column);
          }
          node.kind = NodeKind::kGenerator;
          node.side = t.text[0] == 'e' ? Side::kU : Side::kV;
          node.index = static_cast<Letter>(index);
          return node;
        }
        const auto& table = function_arity();
        auto it = table.find(t.text);
        if (it == table.end()) {
          throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
        }
        node.kind = NodeKind::kCall;
        node.name = t.text;
        expect(Tok::kLParen, "'(' after function name");
        node.children.push_back(expr());
        while (peek().kind == Tok::kComma) {
          ++pos_;
          node.children.push_back(expr());
        }
        expect(Tok::kRParen, "')'");
        if (node.children.size() != it->second) {
          throw ParseError(t.text + " takes " + std::to_string(it->second) + " argument(s), got " +
                               std::to_string(node.children.size()),
                           t.line, t.column);
        }
        if (t.text == "pow") {
          const ExprAst& exponent = node.children[1];
          if (exponent.kind != NodeKind::kRational || exponent.value.get_den() != 1 ||
              sgn(exponent.value) < 0) {
            throw ParseError("pow exponent must be a nonnegative integer literal",
                             exponent.line, exponent.column);
          }
        }
        return node;
      }
      case Tok::kEnd: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

const char* op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kProduct: return "*";
    case BinaryOp::kWedge: return "^";
    case BinaryOp::kJoint: return ";";
    case BinaryOp::kSquare: return "@";
    case BinaryOp::kCircle: return "o";
    case BinaryOp::kCircleSym: return "o_s";
    case BinaryOp::kCircleAntisym: return "o_a";
  }
  return "?";
}

}  // namespace

ExprAst parse_expression(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

std::string to_source(const ExprAst& ast) {
  switch (ast.kind) {
    case NodeKind::kRational: return to_string(ast.value);
    case NodeKind::kGenerator:
      return std::string(1, side_letter(ast.side)) + std::to_string(ast.index);
    case NodeKind::kNegate: return "-" + to_source(ast.children[0]);
    case NodeKind::kBinary:
      return "(" + to_source(ast.children[0]) + " " + op_text(ast.op) + " " +
             to_source(ast.children[1]) + ")";
    case NodeKind::kCall: {
      std::string out = ast.name + "(";
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += ", ";
        out += to_source(ast.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------- evaluation

namespace {

[[noreturn]] void type_error(const std::string& message) { throw Error(ErrorKind::kType, message); }

bool is_square(const Value& v) {
  return std::holds_alternative<TensorSquare>(v) || std::holds_alternative<JointTensorSquare>(v);
}

void reject_squares(const Value& v, const char* where) {
  if (is_square(v)) {
    type_error(std::string("delta(...) results cannot be used as operands of ") + where);
  }
}

JointElement as_joint(const Value& v, const char* where) {
  reject_squares(v, where);
  if (const auto* s = std::get_if<Scalar>(&v)) return JointElement::unit(*s);
  if (const auto* e = std::get_if<Element>(&v)) return embed(*e);
  return std::get<JointElement>(v);
}

// Element on `side`; scalars become multiples of that side's unit.
Element as_element(const Value& v, Side side, const char* where) {
  reject_squares(v, where);
  if (const auto* s = std::get_if<Scalar>(&v)) return Element::unit(side, *s);
  if (const auto* e = std::get_if<Element>(&v)) {
    if (e->side() != side) {
      throw Error(ErrorKind::kSideMismatch, std::string(where) + ": expected a " +
                                                (side == Side::kU ? "U" : "V") +
                                                "-side element");
    }
    return *e;
  }
  type_error(std::string(where) + " needs a one-sided element, got a joint element");
}

// The common side of two operands that must live in the same T(U) or T(V).
Side common_side(const Value& a, const Value& b, const char* where) {
  reject_squares(a, where);
  reject_squares(b, where);
  if (std::holds_alternative<JointElement>(a) || std::holds_alternative<JointElement>(b)) {
    type_error(std::string(where) + " is not defined on joint elements");
  }
  const auto* ea = std::get_if<Element>(&a);
  const auto* eb = std::get_if<Element>(&b);
  if (ea && eb && ea->side() != eb->side()) {
    throw Error(ErrorKind::kSideMismatch, std::string(where) + ": operands on different sides");
  }
  if (ea) return ea->side();
  if (eb) return eb->side();
  return Side::kU;
}

class Evaluator {
 public:
  Evaluator(const SpaceSpec& spec, const EvalOptions& options) : spec_(spec), options_(options) {}

  Value eval(const ExprAst& ast) {
    switch (ast.kind) {
      case NodeKind::kRational: return ast.value;
      case NodeKind::kGenerator: {
        Element g = Element::generator(ast.side, ast.index);
        validate(g, spec_);
        return g;
      }
      case NodeKind::kNegate: return negate(eval(ast.children[0]));
      case NodeKind::kBinary: return binary(ast.op, eval(ast.children[0]), eval(ast.children[1]));
      case NodeKind::kCall: return call(ast);
    }
    type_error("unknown node");
  }

 private:
  static Value negate(const Value& v) {
    reject_squares(v, "unary minus");
    if (const auto* s = std::get_if<Scalar>(&v)) return Scalar(-*s);
    if (const auto* e = std::get_if<Element>(&v)) return -*e;
    return -std::get<JointElement>(v);
  }

  static bool both_scalars(const Value& a, const Value& b) {
    return std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b);
  }

  static bool any_joint(const Value& a, const Value& b) {
    return std::holds_alternative<JointElement>(a) || std::holds_alternative<JointElement>(b);
  }

  static bool sides_differ(const Value& a, const Value& b) {
    const auto* ea = std::get_if<Element>(&a);
    const auto* eb = std::get_if<Element>(&b);
    return ea && eb && ea->side() != eb->side();
  }

  Value add(const Value& a, const Value& b, bool subtract) {
    reject_squares(a, "+/-");
    reject_squares(b, "+/-");
    const Scalar sign(subtract ? -1 : 1);
    if (both_scalars(a, b)) return Scalar(std::get<Scalar>(a) + sign * std::get<Scalar>(b));
    if (any_joint(a, b) || sides_differ(a, b)) {
      return as_joint(a, "+/-") + as_joint(b, "+/-") * sign;
    }
    const Side side = common_side(a, b, "+/-");
    return as_element(a, side, "+/-") + as_element(b, side, "+/-") * sign;
  }

  Value product(const Value& a, const Value& b) {
    reject_squares(a, "*");
    reject_squares(b, "*");
    if (both_scalars(a, b)) return Scalar(std::get<Scalar>(a) * std::get<Scalar>(b));
    if (any_joint(a, b) || sides_differ(a, b)) {
      return joint_product(as_joint(a, "*"), as_joint(b, "*"));
    }
    const Side side = common_side(a, b, "*");
    return concat_product(as_element(a, side, "*"), as_element(b, side, "*"));
  }

  Value binary(BinaryOp op, const Value& a, const Value& b) {
    const Caps& caps = options_.caps;
    switch (op) {
      case BinaryOp::kAdd: return add(a, b, false);
      case BinaryOp::kSub: return add(a, b, true);
      case BinaryOp::kProduct: return product(a, b);
      case BinaryOp::kWedge: {
        if (both_scalars(a, b)) return Scalar(std::get<Scalar>(a) * std::get<Scalar>(b));
        const Side side = common_side(a, b, "^");
        return wedge_product(as_element(a, side, "^"), as_element(b, side, "^"), caps);
      }
      case BinaryOp::kJoint:
        return tensor(as_element(a, Side::kU, "';' left operand"),
                      as_element(b, Side::kV, "';' right operand"));
      case BinaryOp::kSquare: {
        if (both_scalars(a, b)) return Scalar(std::get<Scalar>(a) * std::get<Scalar>(b));
        if (spec_.self_dual() && !any_joint(a, b) && !sides_differ(a, b)) {
          const Side side = common_side(a, b, "@");
          return square(as_element(a, side, "@"), as_element(b, side, "@"), spec_, caps);
        }
        return square(as_joint(a, "@"), as_joint(b, "@"), spec_, caps);
      }
      case BinaryOp::kCircle:
        return binary(options_.circle == CircleMode::kSymmetric ? BinaryOp::kCircleSym
                                                                : BinaryOp::kCircleAntisym,
                      a, b);
      case BinaryOp::kCircleSym: {
        const Side side = common_side(a, b, "o_s");
        return circle_sym(as_element(a, side, "o_s"), as_element(b, side, "o_s"), spec_, caps);
      }
      case BinaryOp::kCircleAntisym: {
        const Side side = common_side(a, b, "o_a");
        return circle_antisym(as_element(a, side, "o_a"), as_element(b, side, "o_a"), spec_,
                              caps);
      }
    }
    type_error("unknown operator");
  }

  Element one_sided(const Value& v, const char* where) {
    reject_squares(v, where);
    if (std::holds_alternative<JointElement>(v)) {
      type_error(std::string(where) + " needs a one-sided element, got a joint element");
    }
    if (const auto* s = std::get_if<Scalar>(&v)) return Element::unit(Side::kU, *s);
    return std::get<Element>(v);
  }

  Value call(const ExprAst& ast) {
    const Caps& caps = options_.caps;
    const std::string& f = ast.name;
    if (f == "pow") {
      const Value base = eval(ast.children[0]);
      const auto t = static_cast<std::size_t>(ast.children[1].value.get_num().get_ui());
      if (const auto* s = std::get_if<Scalar>(&base)) {
        check_grade_cap(t, caps, "pow");
        mpq_class out(1);
        for (std::size_t k = 0; k < t; ++k) out *= *s;
        return out;
      }
      return power(one_sided(base, "pow"), t, caps);
    }

    std::vector<Value> args;
    for (const auto& child : ast.children) args.push_back(eval(child));
    const Value& x = args[0];

    if (f == "lap" || f == "lap_slow") {
      const JointElement a = as_joint(args[0], f.c_str());
      const JointElement b = as_joint(args[1], f.c_str());
      return f == "lap" ? laplace_closed(a, b, spec_, caps) : laplace_recursive(a, b, spec_, caps);
    }
    if (f == "dual") {
      return duality(as_element(args[0], Side::kU, "dual first argument"),
                     as_element(args[1], Side::kV, "dual second argument"), spec_);
    }
    if (f == "eps") {
      reject_squares(x, "eps");
      if (const auto* s = std::get_if<Scalar>(&x)) return *s;
      if (const auto* e = std::get_if<Element>(&x)) return counit(*e);
      return joint_counit(std::get<JointElement>(x));
    }
    if (f == "S") {
      reject_squares(x, "S");
      if (std::holds_alternative<Scalar>(x)) return x;
      if (const auto* e = std::get_if<Element>(&x)) return antipode(*e);
      return joint_antipode(std::get<JointElement>(x));
    }
    if (f == "delta") {
      reject_squares(x, "delta");
      if (const auto* j = std::get_if<JointElement>(&x)) return joint_coproduct(*j, caps);
      return coproduct(one_sided(x, "delta"), caps);
    }
    if (f == "symm" || f == "asymm") {
      if (std::holds_alternative<Scalar>(x)) return x;
      const Element e = one_sided(x, f.c_str());
      return f == "symm" ? symmetrize(e, caps) : antisymmetrize(e, caps);
    }
    if (f == "phi_t") return phi_tensor(one_sided(x, "phi_t"), spec_, caps);
    if (f == "phi_s") return phi_sym(one_sided(x, "phi_s"), spec_, caps);
    if (f == "phi_a") return phi_antisym(one_sided(x, "phi_a"), spec_, caps);
    type_error("unknown function '" + f + "'");
  }

  const SpaceSpec& spec_;
  const EvalOptions& options_;
};

}  // namespace

Value evaluate(const ExprAst& ast, const SpaceSpec& spec, const EvalOptions& options) {
  return Evaluator(spec, options).eval(ast);
}

std::string to_string(const Value& value) {
  return std::visit([](const auto& v) { return to_string(v); }, value);
}

std::string evaluate_text(std::string_view text, const SpaceSpec& spec,
                          const EvalOptions& options) {
  return to_string(evaluate(parse_expression(text), spec, options));
}

}  // namespace tensalg
