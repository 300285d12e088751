#include "tg/expr.hpp"

#include <cctype>
#include <set>

#include "tg/errors.hpp"

namespace tg {

namespace {

enum class Tok { number, ident, lparen, rparen, comma, plus, minus, star, caret, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[k + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    k += n;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l0 = line, c0 = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (k + n < src.size() && std::isdigit(static_cast<unsigned char>(src[k + n]))) ++n;
      if (k + n + 1 < src.size() && src[k + n] == '/' &&
          std::isdigit(static_cast<unsigned char>(src[k + n + 1]))) {
        ++n;
        while (k + n < src.size() && std::isdigit(static_cast<unsigned char>(src[k + n]))) ++n;
      }
      out.push_back({Tok::number, std::string(src.substr(k, n)), l0, c0});
      advance(n);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (k + n < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[k + n])) || src[k + n] == '_'))
        ++n;
      out.push_back({Tok::ident, std::string(src.substr(k, n)), l0, c0});
      advance(n);
      continue;
    }
    Tok t;
    switch (c) {
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case ',': t = Tok::comma; break;
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '^': t = Tok::caret; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
    }
    out.push_back({t, std::string(1, c), l0, c0});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

const std::set<std::string> kIndexed = {"xi", "xb", "dxi", "dxb", "ket", "bra", "qN"};
const std::set<std::string> kFunctions = {"integrate", "dint", "conj", "bracket"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_sum();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      if (peek().kind == Tok::end) fail(std::string("expected ") + what + " before end of input");
      fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    }
    take();
  }

  static std::shared_ptr<Expr> node(ExprKind kind, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      auto e = node(op.kind == Tok::plus ? ExprKind::add : ExprKind::sub, op);
      e->children = {lhs, parse_product()};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (peek().kind == Tok::star) {
      const Token& op = take();
      auto e = node(ExprKind::product, op);
      e->children = {lhs, parse_unary()};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Tok::minus) {
      const Token& op = take();
      auto e = node(ExprKind::neg, op);
      e->children = {parse_unary()};
      return e;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (peek().kind != Tok::caret) return base;
    const Token& op = take();
    auto e = node(ExprKind::power, op);
    e->children = {base};
    e->index = signed_int("exponent");
    return e;
  }

  int signed_int(const char* what) {
    bool negative = false;
    if (peek().kind == Tok::minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos)
      fail(std::string("expected integer ") + what);
    const Token& t = take();
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError("integer out of range", t.line, t.column);
    }
    if (v > 1000000) throw ParseError("integer out of range", t.line, t.column);
    return static_cast<int>(negative ? -v : v);
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        auto e = node(ExprKind::number, t);
        e->value = Rational(t.text);
        if (e->value.get_den() == 0) throw ParseError("zero denominator", t.line, t.column);
        e->value.canonicalize();
        return e;
      }
      case Tok::lparen: {
        take();
        ExprPtr inner = parse_sum();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: return parse_identifier();
      case Tok::end: fail("expected operand before end of input");
      default: fail("expected operand, found '" + t.text + "'");
    }
  }

  ExprPtr parse_identifier() {
    const Token& t = take();
    const std::string& id = t.text;
    if (id == "q") return node(ExprKind::q_unit, t);
    if (id == "i") return node(ExprKind::i_unit, t);
    if (id == "a" || id == "ad" || id == "Nop") {
      auto e = node(ExprKind::op_symbol, t);
      e->name = id;
      return e;
    }
    if (kIndexed.count(id)) {
      std::shared_ptr<Expr> e;
      if (id == "xi" || id == "xb") e = node(ExprKind::generator, t);
      else if (id == "dxi" || id == "dxb") e = node(ExprKind::differential, t);
      else if (id == "ket") e = node(ExprKind::ket, t);
      else if (id == "bra") e = node(ExprKind::bra, t);
      else e = node(ExprKind::op_symbol, t);
      e->name = id;
      expect(Tok::lparen, "'('");
      const Token& at = peek();
      e->index = signed_int("argument");
      if (id != "qN" && e->index < 0) throw ParseError("index must be non-negative", at.line, at.column);
      if ((id == "ket" || id == "bra") && e->index > 2)
        throw ParseError("level must be 0, 1 or 2", at.line, at.column);
      expect(Tok::rparen, "')'");
      return e;
    }
    if (kFunctions.count(id)) {
      auto e = node(ExprKind::call, t);
      e->name = id;
      expect(Tok::lparen, "'('");
      e->children.push_back(parse_sum());
      while (peek().kind == Tok::comma) {
        take();
        e->children.push_back(parse_sum());
      }
      expect(Tok::rparen, "')'");
      const std::size_t want = id == "integrate" ? 2 : 1;
      if (e->children.size() != want)
        throw ParseError(id + " takes " + std::to_string(want) + " argument(s)", t.line, t.column);
      return e;
    }
    throw ParseError("unknown identifier '" + id + "'", t.line, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::sub: return 1;
    case ExprKind::product: return 2;
    case ExprKind::neg: return 3;
    case ExprKind::power: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::number: return e.value.get_str();
    case ExprKind::q_unit: return "q";
    case ExprKind::i_unit: return "i";
    case ExprKind::generator:
    case ExprKind::differential:
    case ExprKind::ket:
    case ExprKind::bra: return e.name + "(" + std::to_string(e.index) + ")";
    case ExprKind::op_symbol:
      return e.name == "qN" ? "qN(" + std::to_string(e.index) + ")" : e.name;
    case ExprKind::call: {
      std::string s = e.name + "(";
      for (std::size_t k = 0; k < e.children.size(); ++k) s += (k ? ", " : "") + print(*e.children[k]);
      return s + ")";
    }
    case ExprKind::add: return wrap(*e.children[0], 1) + " + " + wrap(*e.children[1], 2);
    case ExprKind::sub: return wrap(*e.children[0], 1) + " - " + wrap(*e.children[1], 2);
    case ExprKind::product: return wrap(*e.children[0], 2) + "*" + wrap(*e.children[1], 3);
    case ExprKind::neg: return "-" + wrap(*e.children[0], 3);
    case ExprKind::power: return wrap(*e.children[0], 5) + "^" + std::to_string(e.index);
  }
  return "?";
}

bool same_tree(const Expr& x, const Expr& y) {
  if (x.kind != y.kind || x.value != y.value || x.name != y.name || x.index != y.index ||
      x.children.size() != y.children.size())
    return false;
  for (std::size_t k = 0; k < x.children.size(); ++k)
    if (!same_tree(*x.children[k], *y.children[k])) return false;
  return true;
}

}  // namespace tg
