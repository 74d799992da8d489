#include "lieframe/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

namespace lieframe {

namespace {

struct FunctionEntry {
  std::string_view name;
  ExprFunction f;
};

constexpr std::array<FunctionEntry, 7> kFunctions{{
    {"sin", ExprFunction::Sin},
    {"cos", ExprFunction::Cos},
    {"tan", ExprFunction::Tan},
    {"exp", ExprFunction::Exp},
    {"log", ExprFunction::Log},
    {"sqrt", ExprFunction::Sqrt},
    {"abs", ExprFunction::Abs},
}};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

std::string_view function_name(ExprFunction f) {
  for (const auto& e : kFunctions) {
    if (e.f == f) return e.name;
  }
  return "?";
}

ExprPtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Const;
  n->value = v;
  return n;
}

ExprPtr make_var() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Var;
  return n;
}

ExprPtr make_unary(ExprKind kind, ExprPtr operand) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->children = {std::move(operand)};
  return n;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->children = {std::move(lhs), std::move(rhs)};
  return n;
}

ExprPtr make_call(ExprFunction f, ExprPtr arg) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Call;
  n->function = f;
  n->children = {std::move(arg)};
  return n;
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, "syntax error at offset " + std::to_string(offset) + ": expected " +
                                        join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, std::string name)
    : Error(ErrorCode::UnknownIdentifier,
            "unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset),
      name_(std::move(name)) {}

namespace {

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::vector<std::string> kOperandStart = {"number", "s", "function", "(", "-"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ < text_.size()) {
      throw SyntaxError(pos_, {"+", "-", "*", "/", "^", "end of input"}, describe_here());
    }
    return e;
  }

 private:
  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        lhs = make_binary(ExprKind::Add, lhs, product());
      } else if (accept('-')) {
        lhs = make_binary(ExprKind::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        lhs = make_binary(ExprKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(ExprKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip_space();
    if (accept('-')) return make_unary(ExprKind::Neg, unary());
    return power();
  }

  // The exponent may itself start with unary minus: 2^-s.
  ExprPtr exponent() {
    skip_space();
    if (accept('-')) return make_unary(ExprKind::Neg, exponent());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    skip_space();
    if (accept('^')) return make_binary(ExprKind::Pow, base, exponent());
    return base;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, kOperandStart, "end of input");
    const char c = text_[pos_];
    if (is_digit(c) || c == '.') return number();
    if (is_ident_start(c)) return identifier();
    if (accept('(')) {
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    throw SyntaxError(pos_, kOperandStart, describe_here());
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && is_digit(text_[end])) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t k = end + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && is_digit(text_[k])) {
        while (k < text_.size() && is_digit(text_[k])) ++k;
        end = k;
      }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, v);
    if (ec != std::errc() || ptr != text_.data() + end) {
      throw SyntaxError(start, {"number"}, "'" + std::string(text_.substr(start, end - start)) + "'");
    }
    pos_ = end;
    return make_const(v);
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "s") return make_var();
    for (const auto& e : kFunctions) {
      if (e.name == name) {
        skip_space();
        expect('(');
        ExprPtr arg = sum();
        expect(')');
        return make_call(e.f, arg);
      }
    }
    throw UnknownIdentifier(start, std::string(name));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) throw SyntaxError(pos_, {std::string(1, c)}, describe_here());
  }

  std::string describe_here() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  std::string_view text_;
  std::size_t pos_{0};
};

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ec == std::errc() ? ptr : buf.data());
}

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Const:
    case ExprKind::Var:
    case ExprKind::Call: return 5;
  }
  return 5;
}

void render(const ExprNode& n, std::string& out);

void render_wrapped(const ExprNode& n, bool parens, std::string& out) {
  if (parens) out += '(';
  render(n, out);
  if (parens) out += ')';
}

void render(const ExprNode& n, std::string& out) {
  const int p = precedence(n);
  switch (n.kind) {
    case ExprKind::Const: out += format_number(n.value); return;
    case ExprKind::Var: out += 's'; return;
    case ExprKind::Call:
      out += function_name(n.function);
      render_wrapped(*n.children[0], true, out);
      return;
    case ExprKind::Neg:
      out += '-';
      render_wrapped(*n.children[0], precedence(*n.children[0]) < p, out);
      return;
    case ExprKind::Pow: {
      const ExprNode& rhs = *n.children[1];
      render_wrapped(*n.children[0], precedence(*n.children[0]) <= p, out);
      out += '^';
      render_wrapped(rhs, rhs.kind != ExprKind::Neg && precedence(rhs) < p, out);
      return;
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      static constexpr std::array<char, 4> ops{'+', '-', '*', '/'};
      const char op = ops[static_cast<std::size_t>(n.kind) - static_cast<std::size_t>(ExprKind::Add)];
      render_wrapped(*n.children[0], precedence(*n.children[0]) < p, out);
      out += op;
      render_wrapped(*n.children[1], precedence(*n.children[1]) <= p, out);
      return;
    }
  }
}

double apply(ExprFunction f, double x) {
  switch (f) {
    case ExprFunction::Sin: return std::sin(x);
    case ExprFunction::Cos: return std::cos(x);
    case ExprFunction::Tan: return std::tan(x);
    case ExprFunction::Exp: return std::exp(x);
    case ExprFunction::Log: return std::log(x);
    case ExprFunction::Sqrt: return std::sqrt(x);
    case ExprFunction::Abs: return std::fabs(x);
  }
  return std::nan("");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

double eval_expr(const ExprNode& ast, double s) {
  double v = 0.0;
  switch (ast.kind) {
    case ExprKind::Const: v = ast.value; break;
    case ExprKind::Var: v = s; break;
    case ExprKind::Neg: v = -eval_expr(*ast.children[0], s); break;
    case ExprKind::Call: v = apply(ast.function, eval_expr(*ast.children[0], s)); break;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Pow: {
      const double a = eval_expr(*ast.children[0], s);
      const double b = eval_expr(*ast.children[1], s);
      switch (ast.kind) {
        case ExprKind::Add: v = a + b; break;
        case ExprKind::Sub: v = a - b; break;
        case ExprKind::Mul: v = a * b; break;
        case ExprKind::Div: v = a / b; break;
        default: v = std::pow(a, b); break;
      }
      break;
    }
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "'" << to_string(ast) << "' is not finite at s=" << s;
    throw Error(ErrorCode::DomainError, os.str());
  }
  return v;
}

std::string to_string(const ExprNode& ast) {
  std::string out;
  render(ast, out);
  return out;
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  if (a.kind == ExprKind::Const && a.value != b.value) return false;
  if (a.kind == ExprKind::Call && a.function != b.function) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

}  // namespace lieframe
