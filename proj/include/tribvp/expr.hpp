#pragma once

// Complex-valued expressions in z and conj(z): recursive-descent parser,
// evaluator, and symbolic Wirtinger derivatives on the polynomial subset.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "tribvp/common.hpp"

namespace tribvp::expr {

enum class Kind { Number, Z, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Conj, Re, Im, Abs2, Log, Exp };

struct Node;
using ExprPtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  Complex value{};           // Number
  ExprPtr a, b;              // operands
  int exponent = 0;          // Pow
  Func func = Func::Conj;    // Call
};

inline ExprPtr number(Complex c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = c;
  return n;
}
inline ExprPtr var_z() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Z;
  return n;
}
inline ExprPtr unary(Kind k, ExprPtr a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  return n;
}
inline ExprPtr binary(Kind k, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
inline ExprPtr power(ExprPtr base, int e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->a = std::move(base);
  n->exponent = e;
  return n;
}
inline ExprPtr call(Func f, ExprPtr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->a = std::move(a);
  n->func = f;
  return n;
}
inline ExprPtr conj_z() { return call(Func::Conj, var_z()); }

// ---------------------------------------------------------------- parsing

namespace detail {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& src) : s(src) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (accept('+')) lhs = binary(Kind::Add, lhs, parse_term());
      else if (accept('-')) lhs = binary(Kind::Sub, lhs, parse_term());
      else return lhs;
    }
  }
  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) lhs = binary(Kind::Mul, lhs, parse_unary());
      else if (accept('/')) lhs = binary(Kind::Div, lhs, parse_unary());
      else return lhs;
    }
  }
  ExprPtr parse_unary() {
    if (accept('-')) return unary(Kind::Neg, parse_unary());
    return parse_factor();
  }
  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos;
      if (pos < s.size() && (s[pos] == '+')) ++pos;
      std::size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == digits) throw SyntaxError("expected nonnegative integer exponent", start);
      return power(base, std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }
  ExprPtr parse_atom() {
    skip();
    if (pos >= s.size()) throw SyntaxError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }
  ExprPtr parse_number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t mark = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = mark;  // 'e' belongs to something else
      }
    }
    return number(Complex(std::stod(s.substr(start, pos - start)), 0.0));
  }
  ExprPtr parse_ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (peek('(')) {
      Func f;
      if (name == "conj") f = Func::Conj;
      else if (name == "re") f = Func::Re;
      else if (name == "im") f = Func::Im;
      else if (name == "abs2") f = Func::Abs2;
      else if (name == "log") f = Func::Log;
      else if (name == "exp") f = Func::Exp;
      else throw UnknownIdentifier(name);
      expect('(');
      ExprPtr arg = parse_expr();
      expect(')');
      return call(f, arg);
    }
    if (name == "z") return var_z();
    if (name == "i") return number(Complex(0.0, 1.0));
    throw UnknownIdentifier(name);
  }
};

}  // namespace detail

inline ExprPtr parse(const std::string& src) {
  if (src.empty()) throw SyntaxError("empty expression", 0);
  detail::Parser p(src);
  ExprPtr e = p.parse_expr();
  p.skip();
  if (p.pos != src.size()) throw SyntaxError("trailing input", p.pos);
  return e;
}

// ------------------------------------------------------------- evaluation

inline Complex eval(const ExprPtr& e, Complex z) {
  switch (e->kind) {
    case Kind::Number: return e->value;
    case Kind::Z: return z;
    case Kind::Neg: return -eval(e->a, z);
    case Kind::Add: return eval(e->a, z) + eval(e->b, z);
    case Kind::Sub: return eval(e->a, z) - eval(e->b, z);
    case Kind::Mul: return eval(e->a, z) * eval(e->b, z);
    case Kind::Div: {
      Complex d = eval(e->b, z);
      if (d == Complex(0.0, 0.0)) throw DomainError("division by zero");
      return eval(e->a, z) / d;
    }
    case Kind::Pow: {
      Complex b = eval(e->a, z), acc(1.0, 0.0);
      for (int i = 0; i < e->exponent; ++i) acc *= b;
      return acc;
    }
    case Kind::Call: {
      Complex a = eval(e->a, z);
      switch (e->func) {
        case Func::Conj: return std::conj(a);
        case Func::Re: return Complex(a.real(), 0.0);
        case Func::Im: return Complex(a.imag(), 0.0);
        case Func::Abs2: return Complex(std::norm(a), 0.0);
        case Func::Log:
          if (a == Complex(0.0, 0.0)) throw DomainError("log of zero");
          return std::log(a);
        case Func::Exp: return std::exp(a);
      }
    }
  }
  throw Error("unreachable expression node");
}

// ----------------------------------------------------------- normalization
// Rewrites abs2/re/im in terms of conj and pushes conj down to z, so the
// symbolic subset only ever sees conj applied to the variable.

inline bool is_const(const ExprPtr& e, Complex* out = nullptr) {
  if (e->kind != Kind::Number) return false;
  if (out) *out = e->value;
  return true;
}

inline ExprPtr conj_of(const ExprPtr& e);

inline ExprPtr normalize(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Number:
    case Kind::Z:
      return e;
    case Kind::Neg: {
      ExprPtr a = normalize(e->a);
      Complex c;
      if (is_const(a, &c)) return number(-c);
      return unary(Kind::Neg, a);
    }
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      ExprPtr a = normalize(e->a), b = normalize(e->b);
      Complex ca, cb;
      if (is_const(a, &ca) && is_const(b, &cb)) {
        switch (e->kind) {
          case Kind::Add: return number(ca + cb);
          case Kind::Sub: return number(ca - cb);
          case Kind::Mul: return number(ca * cb);
          default:
            if (cb == Complex(0.0, 0.0)) throw DomainError("division by zero");
            return number(ca / cb);
        }
      }
      return binary(e->kind, a, b);
    }
    case Kind::Pow: {
      ExprPtr a = normalize(e->a);
      Complex c;
      if (is_const(a, &c)) {
        Complex acc(1.0, 0.0);
        for (int i = 0; i < e->exponent; ++i) acc *= c;
        return number(acc);
      }
      return power(a, e->exponent);
    }
    case Kind::Call: {
      ExprPtr a = normalize(e->a);
      switch (e->func) {
        case Func::Abs2:
          return normalize(binary(Kind::Mul, a, conj_of(a)));
        case Func::Re:
          return normalize(binary(Kind::Mul, number(Complex(0.5, 0.0)),
                                  binary(Kind::Add, a, conj_of(a))));
        case Func::Im:
          return normalize(binary(Kind::Mul, number(Complex(0.0, -0.5)),
                                  binary(Kind::Sub, a, conj_of(a))));
        case Func::Conj:
          return conj_of(a);
        default:
          return call(e->func, a);
      }
    }
  }
  throw Error("unreachable expression node");
}

inline ExprPtr conj_of(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Number: return number(std::conj(e->value));
    case Kind::Z: return call(Func::Conj, var_z());
    case Kind::Neg: return unary(Kind::Neg, conj_of(e->a));
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div:
      return binary(e->kind, conj_of(e->a), conj_of(e->b));
    case Kind::Pow: return power(conj_of(e->a), e->exponent);
    case Kind::Call:
      if (e->func == Func::Conj) return e->a;  // already normalized below it
      throw UnsupportedNode("conj of log/exp is outside the symbolic subset");
  }
  throw Error("unreachable expression node");
}

// --------------------------------------------------- symbolic Wirtinger

namespace detail {

inline bool is_conj_z(const ExprPtr& e) {
  return e->kind == Kind::Call && e->func == Func::Conj && e->a->kind == Kind::Z;
}

inline ExprPtr simp_mul(const ExprPtr& a, const ExprPtr& b) {
  Complex ca, cb;
  bool fa = is_const(a, &ca), fb = is_const(b, &cb);
  if (fa && fb) return number(ca * cb);
  if (fa && ca == Complex(0.0, 0.0)) return number(0.0);
  if (fb && cb == Complex(0.0, 0.0)) return number(0.0);
  if (fa && ca == Complex(1.0, 0.0)) return b;
  if (fb && cb == Complex(1.0, 0.0)) return a;
  return binary(Kind::Mul, a, b);
}

inline ExprPtr simp_add(const ExprPtr& a, const ExprPtr& b) {
  Complex ca, cb;
  bool fa = is_const(a, &ca), fb = is_const(b, &cb);
  if (fa && fb) return number(ca + cb);
  if (fa && ca == Complex(0.0, 0.0)) return b;
  if (fb && cb == Complex(0.0, 0.0)) return a;
  return binary(Kind::Add, a, b);
}

inline ExprPtr simp_pow(const ExprPtr& base, int e) {
  if (e == 0) return number(Complex(1.0, 0.0));
  if (e == 1) return base;
  return power(base, e);
}

// d: derivative of z (1 for dz, 0 for dbar); db: derivative of conj(z).
inline ExprPtr wirtinger(const ExprPtr& e, const Complex dzv, const Complex dbv) {
  switch (e->kind) {
    case Kind::Number: return number(0.0);
    case Kind::Z: return number(dzv);
    case Kind::Neg: return unary(Kind::Neg, wirtinger(e->a, dzv, dbv));
    case Kind::Add:
    case Kind::Sub:
      return binary(e->kind, wirtinger(e->a, dzv, dbv), wirtinger(e->b, dzv, dbv));
    case Kind::Mul:
      return simp_add(simp_mul(wirtinger(e->a, dzv, dbv), e->b),
                      simp_mul(e->a, wirtinger(e->b, dzv, dbv)));
    case Kind::Pow: {
      ExprPtr inner = wirtinger(e->a, dzv, dbv);
      return simp_mul(simp_mul(number(Complex(e->exponent, 0.0)),
                               simp_pow(e->a, e->exponent - 1)),
                      inner);
    }
    case Kind::Call:
      if (is_conj_z(e)) return number(dbv);
      throw UnsupportedNode("derivative outside polynomial subset");
    case Kind::Div:
      throw UnsupportedNode("derivative of division not supported");
  }
  throw Error("unreachable expression node");
}

}  // namespace detail

inline ExprPtr dbar(const ExprPtr& e) {
  return detail::wirtinger(normalize(e), Complex(0.0, 0.0), Complex(1.0, 0.0));
}
inline ExprPtr dz(const ExprPtr& e) {
  return detail::wirtinger(normalize(e), Complex(1.0, 0.0), Complex(0.0, 0.0));
}

// Outward normal derivative on the unit circle: z dz + conj(z) dbar.
inline ExprPtr normal_derivative(const ExprPtr& e) {
  return detail::simp_add(detail::simp_mul(var_z(), dz(e)),
                          detail::simp_mul(conj_z(), dbar(e)));
}

// ----------------------------------------------------------- printing

namespace detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // shorten when a shorter form round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char b2[40];
    std::snprintf(b2, sizeof b2, "%.*g", prec, v);
    if (std::stod(b2) == v) return std::string(b2);
  }
  return s;
}

// operator levels: + - (1), * / (2), unary- (3), ^ (4), atom (5)
inline int level(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    case Kind::Number:
      return (e->value.imag() == 0.0 && e->value.real() >= 0.0) ||
                     e->value == Complex(0.0, 1.0)
                 ? 5
                 : 0;  // general complex literals need a parenthesized form
    default: return 5;
  }
}

inline void print_node(std::ostringstream& os, const ExprPtr& e, int parent_level) {
  int lv = level(e);
  bool wrap = lv < parent_level;
  if (wrap) os << '(';
  switch (e->kind) {
    case Kind::Number: {
      // Parsed trees only contain nonnegative reals and i; the composite
      // forms below come from constant folding and reparse value-equal.
      Complex c = e->value;
      if (c == Complex(0.0, 1.0)) {
        os << 'i';
      } else if (c.imag() == 0.0) {
        if (c.real() < 0.0) os << '-';
        os << fmt_double(std::abs(c.real()));
      } else if (c.real() == 0.0) {
        if (c.imag() < 0.0) os << '-';
        os << fmt_double(std::abs(c.imag())) << "*i";
      } else {
        if (c.real() < 0.0) os << '-';
        os << fmt_double(std::abs(c.real()));
        os << (c.imag() < 0.0 ? " - " : " + ");
        os << fmt_double(std::abs(c.imag())) << "*i";
      }
      break;
    }
    case Kind::Z: os << 'z'; break;
    case Kind::Neg:
      os << '-';
      print_node(os, e->a, 4);
      break;
    case Kind::Add:
      print_node(os, e->a, 1);
      os << " + ";
      print_node(os, e->b, 2);
      break;
    case Kind::Sub:
      print_node(os, e->a, 1);
      os << " - ";
      print_node(os, e->b, 2);
      break;
    case Kind::Mul:
      print_node(os, e->a, 2);
      os << '*';
      print_node(os, e->b, 3);
      break;
    case Kind::Div:
      print_node(os, e->a, 2);
      os << '/';
      print_node(os, e->b, 3);
      break;
    case Kind::Pow:
      print_node(os, e->a, 5);
      os << '^' << e->exponent;
      break;
    case Kind::Call: {
      const char* names[] = {"conj", "re", "im", "abs2", "log", "exp"};
      os << names[static_cast<int>(e->func)] << '(';
      print_node(os, e->a, 0);
      os << ')';
      break;
    }
  }
  if (wrap) os << ')';
}

}  // namespace detail

inline std::string print(const ExprPtr& e) {
  std::ostringstream os;
  detail::print_node(os, e, 0);
  return os.str();
}

// --------------------------------------------- polynomial normal form

// coefficient map: (p, q) -> coeff of z^p conj(z)^q
using Poly = std::map<std::pair<int, int>, Complex>;

namespace detail {

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  return out;
}

inline Poly poly_add(Poly a, const Poly& b, Complex scale = Complex(1, 0)) {
  for (const auto& [k, c] : b) a[k] += scale * c;
  return a;
}

}  // namespace detail

inline Poly to_poly(const ExprPtr& raw) {
  ExprPtr e = normalize(raw);
  std::function<Poly(const ExprPtr&)> go = [&](const ExprPtr& n) -> Poly {
    switch (n->kind) {
      case Kind::Number:
        if (n->value == Complex(0.0, 0.0)) return {};
        return {{{0, 0}, n->value}};
      case Kind::Z: return {{{1, 0}, Complex(1, 0)}};
      case Kind::Neg: {
        Poly p = go(n->a);
        for (auto& [k, c] : p) c = -c;
        return p;
      }
      case Kind::Add: return detail::poly_add(go(n->a), go(n->b));
      case Kind::Sub: return detail::poly_add(go(n->a), go(n->b), Complex(-1, 0));
      case Kind::Mul: return detail::poly_mul(go(n->a), go(n->b));
      case Kind::Pow: {
        Poly base = go(n->a), acc = {{{0, 0}, Complex(1, 0)}};
        for (int i = 0; i < n->exponent; ++i) acc = detail::poly_mul(acc, base);
        return acc;
      }
      case Kind::Call:
        if (detail::is_conj_z(n)) return {{{0, 1}, Complex(1, 0)}};
        throw UnsupportedNode("not a polynomial in z, conj(z)");
      case Kind::Div:
        throw UnsupportedNode("not a polynomial in z, conj(z)");
    }
    throw Error("unreachable expression node");
  };
  Poly p = go(e);
  for (auto it = p.begin(); it != p.end();)
    it = (it->second == Complex(0.0, 0.0)) ? p.erase(it) : std::next(it);
  return p;
}

inline Complex poly_eval(const Poly& p, Complex z) {
  Complex zb = std::conj(z), out(0, 0);
  for (const auto& [k, c] : p) {
    Complex t = c;
    for (int i = 0; i < k.first; ++i) t *= z;
    for (int i = 0; i < k.second; ++i) t *= zb;
    out += t;
  }
  return out;
}

inline Poly poly_dbar(const Poly& p) {
  Poly out;
  for (const auto& [k, c] : p)
    if (k.second > 0) out[{k.first, k.second - 1}] = c * Complex(k.second, 0);
  return out;
}

inline Poly poly_dz(const Poly& p) {
  Poly out;
  for (const auto& [k, c] : p)
    if (k.first > 0) out[{k.first - 1, k.second}] = c * Complex(k.first, 0);
  return out;
}

inline Poly poly_dnu(const Poly& p) {
  Poly out;
  for (const auto& [k, c] : p)
    if (k.first + k.second > 0) out[k] = c * Complex(k.first + k.second, 0);
  return out;
}

// Boundary reduction via z conj(z) = 1: z^p conj(z)^q -> z^(p-q) or conj(z)^(q-p).
inline Poly poly_trace(const Poly& p) {
  Poly out;
  for (const auto& [k, c] : p) {
    int m = std::min(k.first, k.second);
    out[{k.first - m, k.second - m}] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == Complex(0.0, 0.0)) ? out.erase(it) : std::next(it);
  return out;
}

inline ExprPtr from_poly(const Poly& p) {
  if (p.empty()) return number(Complex(0, 0));
  ExprPtr sum = nullptr;
  for (const auto& [k, c] : p) {
    ExprPtr term = nullptr;
    auto append = [&term](ExprPtr piece) {
      term = term ? binary(Kind::Mul, term, piece) : piece;
    };
    if (c != Complex(1, 0) || (k.first == 0 && k.second == 0)) append(number(c));
    if (k.first == 1) append(var_z());
    else if (k.first > 1) append(power(var_z(), k.first));
    if (k.second == 1) append(conj_z());
    else if (k.second > 1) append(power(conj_z(), k.second));
    sum = sum ? binary(Kind::Add, sum, term) : term;
  }
  return sum;
}

}  // namespace tribvp::expr
