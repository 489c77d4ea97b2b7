#include "galord/io.hpp"

#include <cctype>

#include "galord/errors.hpp"
#include "galord/ratfunc.hpp"

namespace galord {

namespace {

void print_monomial(std::string& out, const Monomial& m, const VarTable& vt,
                    bool leading_star) {
  bool first = !leading_star;
  for (const auto& [v, e] : m.exponents()) {
    if (!first) out += "*";
    first = false;
    out += vt.var_name(v);
    if (e != 1) {
      out += "^";
      out += std::to_string(e);
    }
  }
}

}  // namespace

std::string to_string(const Poly& p, const VarTable& vt) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      out += rat_to_string(a);
    } else {
      bool with_coeff = a != 1;
      if (with_coeff) out += rat_to_string(a);
      print_monomial(out, m, vt, with_coeff);
    }
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  const VarTable& vt = *f.table();
  if (f.is_polynomial()) return to_string(f.num(), vt);
  return "(" + to_string(f.num(), vt) + ")/(" + to_string(f.den(), vt) + ")";
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const VarTablePtr& vt;

  Parser(const std::string& text, const VarTablePtr& table) : s(text), vt(table) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::stol(s.substr(start, pos - start));
  }

  RatFunc parse_var() {
    char name = s[pos++];
    if (name == 'q') {
      if (!vt->has_q()) fail("q is not a variable of this setting");
      return RatFunc::var(vt, vt->q());
    }
    if (name == 'u') {
      if (!vt->has_u()) fail("u is not a variable of this setting");
      return RatFunc::var(vt, vt->u());
    }
    if (!eat('[')) fail("expected [ after x");
    long a = parse_int();
    long b = -1;
    if (eat(',')) b = parse_int();
    if (!eat(']')) fail("expected ]");
    int block, index;
    if (b < 0) {
      block = 0;
      index = static_cast<int>(a) - 1;
    } else {
      block = static_cast<int>(a) - 1;
      index = static_cast<int>(b) - 1;
    }
    if (block < 0 || block >= vt->block_count()) fail("block out of range");
    if (index < 0 || index >= vt->block_size(block)) fail("variable index out of range");
    return RatFunc::var(vt, vt->var(block, index));
  }

  int parse_exponent() {
    if (eat('(')) {
      long e = parse_int();
      if (!eat(')')) fail("expected ) after exponent");
      return static_cast<int>(e);
    }
    return static_cast<int>(parse_int());
  }

  RatFunc parse_atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      RatFunc e = parse_expr();
      if (!eat(')')) fail("expected )");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long n = parse_int();
      return RatFunc::constant(vt, Rat(n));
    }
    if (c == 'x' || c == 'q' || c == 'u') return parse_var();
    fail("expected atom");
  }

  RatFunc parse_power() {
    RatFunc a = parse_atom();
    if (eat('^')) return a.pow(parse_exponent());
    return a;
  }

  RatFunc parse_unary() {
    bool neg = false;
    while (true) {
      char c = peek();
      if (c == '-') {
        neg = !neg;
        ++pos;
      } else if (c == '+') {
        ++pos;
      } else {
        break;
      }
    }
    RatFunc a = parse_power();
    return neg ? -a : a;
  }

  RatFunc parse_term() {
    RatFunc a = parse_unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        eat('*');
        a = a * parse_unary();
      } else if (c == '/') {
        eat('/');
        RatFunc b = parse_unary();
        if (b.is_zero()) fail("division by zero");
        a = a / b;
      } else {
        break;
      }
    }
    return a;
  }

  RatFunc parse_expr() {
    RatFunc a = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        eat('+');
        a = a + parse_term();
      } else if (c == '-') {
        eat('-');
        a = a - parse_term();
      } else {
        break;
      }
    }
    return a;
  }

  RatFunc parse_all() {
    RatFunc e = parse_expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const VarTablePtr& vt) {
  return Parser(text, vt).parse_all();
}

Poly parse_poly(const std::string& text, const VarTable& vt) {
  // parse in the fraction field, then require an exact polynomial
  auto tmp = std::make_shared<const VarTable>(vt);
  RatFunc f = parse_ratfunc(text, tmp);
  return f.poly();
}

}  // namespace galord
