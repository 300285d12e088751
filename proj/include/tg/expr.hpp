#pragma once

// Expression language:
//   atoms      q  i  p  p/r  xi(a)  xb(a)  dxi(a)  dxb(a)  a  ad  Nop  qN(s)  ket(n)  bra(n)
//   functions  integrate(e, var)  dint(e)  conj(e)  bracket(n)
//   operators  + - * ^ and parentheses; ^ takes a signed integer exponent.
// Products need an explicit '*'.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tg/scalars.hpp"

namespace tg {

enum class ExprKind {
  number,     // value
  q_unit,     // q
  i_unit,     // i
  generator,  // xi(index) / xb(index), name holds "xi" or "xb"
  differential,
  op_symbol,  // name is a / ad / Nop / qN; index is s for qN
  ket,
  bra,
  call,  // name is the function, children are arguments
  add,
  sub,
  neg,
  product,
  power,  // children[0] ^ index
};

struct Expr {
  ExprKind kind = ExprKind::number;
  Rational value;
  std::string name;
  int index = 0;
  std::vector<std::shared_ptr<const Expr>> children;
  int line = 1;
  int column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws ParseError with line and column.
ExprPtr parse(std::string_view text);

// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

// Structural equality, ignoring source positions.
bool same_tree(const Expr& x, const Expr& y);

}  // namespace tg
