#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ergo/word.hpp"

// Expression DSL for maps built from processor instructions.
//
// Grammar (loosest to tightest): |  ^/xor  &  <</>>  + -  * /  **  unary ~ -
//   atom := INT | INT/ODDINT | IDENT | IDENT(args) | (expr)
//   builtins: delta(j,e), inv(e), exp1p2(u,v), trunc(k,e), shl(e,k), shr(e,k)
//   INT is decimal or 0x-hex.
//
// Two notational details:
//   * '^' written tight against an integer literal (no whitespace, as in
//     "x^2") is a power shorthand and expands to repeated multiplication;
//     '^' with whitespace, or the keyword xor, is bitwise xor.
//   * "a ** x" with a an odd integer constant means a^x and compiles to
//     exp1p2((a-1)/2, x).
//
// Division u / v is only accepted when v is syntactically odd (an odd
// constant, or a pattern like 2*e+1); it compiles to u * inv(v).

namespace ergo {

class parse_error : public error {
public:
  parse_error(const std::string& msg, size_t pos)
      : error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
  size_t pos;
};

enum class Op {
  Var, Const, Add, Sub, Mul, And, Or, Xor, Not,
  Shl, Shr, InvOdd, Exp1p2, Digit, TruncMod
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op;
  int64_t num = 0;      // Const numerator (two's-complement wrapped on eval)
  uint64_t den = 1;     // Const denominator, always odd
  unsigned amount = 0;  // Shl/Shr/TruncMod amount, Digit index
  std::string name;     // Var
  ExprPtr a, b;
};

inline ExprPtr t_var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Var;
  e->name = std::move(name);
  return e;
}

inline ExprPtr t_const(int64_t num, uint64_t den = 1) {
  if (den == 0 || !(den & 1)) throw error("constant denominator must be odd");
  auto e = std::make_shared<Expr>();
  e->op = Op::Const;
  e->num = num;
  e->den = den;
  return e;
}

inline ExprPtr t_binary(Op op, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

inline ExprPtr t_add(ExprPtr a, ExprPtr b) { return t_binary(Op::Add, std::move(a), std::move(b)); }
inline ExprPtr t_sub(ExprPtr a, ExprPtr b) { return t_binary(Op::Sub, std::move(a), std::move(b)); }
inline ExprPtr t_mul(ExprPtr a, ExprPtr b) { return t_binary(Op::Mul, std::move(a), std::move(b)); }
inline ExprPtr t_and(ExprPtr a, ExprPtr b) { return t_binary(Op::And, std::move(a), std::move(b)); }
inline ExprPtr t_or(ExprPtr a, ExprPtr b) { return t_binary(Op::Or, std::move(a), std::move(b)); }
inline ExprPtr t_xor(ExprPtr a, ExprPtr b) { return t_binary(Op::Xor, std::move(a), std::move(b)); }
inline ExprPtr t_exp1p2(ExprPtr u, ExprPtr v) { return t_binary(Op::Exp1p2, std::move(u), std::move(v)); }

inline ExprPtr t_not(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Not;
  e->a = std::move(a);
  return e;
}

inline ExprPtr t_inv(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->op = Op::InvOdd;
  e->a = std::move(a);
  return e;
}

inline ExprPtr t_shift(Op op, ExprPtr a, unsigned k) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->a = std::move(a);
  e->amount = k;
  return e;
}

inline ExprPtr t_shl(ExprPtr a, unsigned k) { return t_shift(Op::Shl, std::move(a), k); }
inline ExprPtr t_shr(ExprPtr a, unsigned k) { return t_shift(Op::Shr, std::move(a), k); }
inline ExprPtr t_digit(unsigned j, ExprPtr a) { return t_shift(Op::Digit, std::move(a), j); }
inline ExprPtr t_trunc(unsigned k, ExprPtr a) { return t_shift(Op::TruncMod, std::move(a), k); }

inline ExprPtr t_neg(ExprPtr a) { return t_sub(t_const(0), std::move(a)); }

// Structural equality.
inline bool equal(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->op != y->op || x->num != y->num || x->den != y->den ||
      x->amount != y->amount || x->name != y->name)
    return false;
  return equal(x->a, y->a) && equal(x->b, y->b);
}

// Replace every occurrence of the variable `name` by `repl`.
inline ExprPtr substitute(const ExprPtr& e, const std::string& name, const ExprPtr& repl) {
  if (!e) return e;
  if (e->op == Op::Var) return e->name == name ? repl : e;
  auto c = std::make_shared<Expr>(*e);
  c->a = substitute(e->a, name, repl);
  c->b = substitute(e->b, name, repl);
  return c;
}

inline void collect_vars(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->op == Op::Var) out.insert(e->name);
  collect_vars(e->a, out);
  collect_vars(e->b, out);
}

inline std::set<std::string> free_vars(const ExprPtr& e) {
  std::set<std::string> s;
  collect_vars(e, s);
  return s;
}

// ---------------------------------------------------------------------------
// Evaluation at precision n (the 2-adic word model).

using Env = std::map<std::string, Word2>;

inline Word2 eval(const ExprPtr& e, const Env& env, unsigned n) {
  switch (e->op) {
    case Op::Var: {
      auto it = env.find(e->name);
      if (it == env.end()) throw eval_error("unbound variable: " + e->name);
      if (it->second.n != n) throw eval_error("variable " + e->name + " bound at wrong precision");
      return it->second;
    }
    case Op::Const: {
      Word2 w = word_from_int(e->num, n);
      if (e->den != 1) w = mul(w, inv_odd(word(e->den, n)));
      return w;
    }
    case Op::Add: return add(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Sub: return sub(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Mul: return mul(eval(e->a, env, n), eval(e->b, env, n));
    case Op::And: return band(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Or: return bor(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Xor: return bxor(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Not: return bnot(eval(e->a, env, n));
    case Op::Shl: return shl(eval(e->a, env, n), e->amount);
    case Op::Shr: return shr(eval(e->a, env, n), e->amount);
    case Op::InvOdd: {
      Word2 w = eval(e->a, env, n);
      if (!(w.v & 1)) throw eval_error("inv: value is even");
      return inv_odd(w);
    }
    case Op::Exp1p2: return exp1p2(eval(e->a, env, n), eval(e->b, env, n));
    case Op::Digit: {
      Word2 w = eval(e->a, env, n);
      unsigned j = e->amount;
      if (j >= n) throw eval_error("delta index out of range at this precision");
      return Word2{(w.v >> j) & 1u, n};
    }
    case Op::TruncMod: {
      Word2 w = eval(e->a, env, n);
      unsigned k = e->amount;
      return Word2{k >= n ? w.v : (w.v & mask_bits(k)), n};
    }
  }
  throw error("corrupt expression node");
}

// Univariate convenience: the single free variable is bound to x.
inline uint64_t eval1(const ExprPtr& e, uint64_t x, unsigned n, const std::string& var = "x") {
  Env env;
  env[var] = word(x, n);
  return eval(e, env, n).v;
}

// ---------------------------------------------------------------------------
// Exact evaluation modulo q = p^k for odd primes p (arithmetic operators
// only; the digitwise operators of the word model have no odd-p meaning
// here).

inline uint64_t mod_inverse(uint64_t a, uint64_t q) {
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(q), newr = static_cast<int64_t>(a % q);
  while (newr != 0) {
    int64_t quot = r / newr;
    t -= quot * newt; std::swap(t, newt);
    r -= quot * newr; std::swap(r, newr);
  }
  if (r != 1) throw eval_error("value not invertible modulo " + std::to_string(q));
  if (t < 0) t += static_cast<int64_t>(q);
  return static_cast<uint64_t>(t);
}

inline uint64_t eval_mod(const ExprPtr& e, uint64_t x, uint64_t q, uint64_t p,
                         const std::string& var = "x") {
  auto norm = [&](int64_t v) -> uint64_t {
    int64_t m = v % static_cast<int64_t>(q);
    if (m < 0) m += static_cast<int64_t>(q);
    return static_cast<uint64_t>(m);
  };
  switch (e->op) {
    case Op::Var:
      if (e->name != var) throw eval_error("unbound variable: " + e->name);
      return x % q;
    case Op::Const: {
      uint64_t w = norm(e->num);
      if (e->den != 1) w = (w * mod_inverse(e->den % q, q)) % q;
      return w;
    }
    case Op::Add: return (eval_mod(e->a, x, q, p, var) + eval_mod(e->b, x, q, p, var)) % q;
    case Op::Sub: return (q + eval_mod(e->a, x, q, p, var) - eval_mod(e->b, x, q, p, var)) % q;
    case Op::Mul: return (eval_mod(e->a, x, q, p, var) * eval_mod(e->b, x, q, p, var)) % q;
    case Op::InvOdd: return mod_inverse(eval_mod(e->a, x, q, p, var), q);
    case Op::Exp1p2: {
      uint64_t base = (1 + p * eval_mod(e->a, x, q, p, var)) % q;
      uint64_t ee = eval_mod(e->b, x, q, p, var);
      uint64_t r = 1;
      while (ee) {
        if (ee & 1) r = (r * base) % q;
        base = (base * base) % q;
        ee >>= 1;
      }
      return r;
    }
    default:
      throw eval_error("operator has no odd-p evaluation");
  }
}

// ---------------------------------------------------------------------------
// Compatibility classifier.  Everything in the operator set is 1-Lipschitz
// except shifts towards less significant bits: Shr loses low bits and
// Digit scales as 2^(-j); any occurrence of either makes the whole tree
// suspect, and we deliberately do not try to recognize re-admitting
// contexts here (the digit-weighted criterion has its own check).

struct CompatClass {
  bool compatible = true;
  ExprPtr witness;  // offending subtree when not compatible
};

inline void classify_walk(const ExprPtr& e, CompatClass& c) {
  if (!e || !c.compatible) return;
  if (e->op == Op::Shr || e->op == Op::Digit) {
    c.compatible = false;
    c.witness = e;
    return;
  }
  classify_walk(e->a, c);
  classify_walk(e->b, c);
}

inline CompatClass classify(const ExprPtr& e) {
  CompatClass c;
  classify_walk(e, c);
  return c;
}

// ---------------------------------------------------------------------------
// Printer.  Output is fully parenthesized and reparses to the same tree.

inline std::string pretty(const ExprPtr& e) {
  switch (e->op) {
    case Op::Var: return e->name;
    case Op::Const: {
      std::string s = std::to_string(e->num);
      if (e->den != 1) s += "/" + std::to_string(e->den);
      return s;
    }
    case Op::Add: return "(" + pretty(e->a) + " + " + pretty(e->b) + ")";
    case Op::Sub: return "(" + pretty(e->a) + " - " + pretty(e->b) + ")";
    case Op::Mul: return "(" + pretty(e->a) + " * " + pretty(e->b) + ")";
    case Op::And: return "(" + pretty(e->a) + " & " + pretty(e->b) + ")";
    case Op::Or: return "(" + pretty(e->a) + " | " + pretty(e->b) + ")";
    case Op::Xor: return "(" + pretty(e->a) + " ^ " + pretty(e->b) + ")";
    case Op::Not: return "(~" + pretty(e->a) + ")";
    case Op::Shl: return "shl(" + pretty(e->a) + ", " + std::to_string(e->amount) + ")";
    case Op::Shr: return "shr(" + pretty(e->a) + ", " + std::to_string(e->amount) + ")";
    case Op::InvOdd: return "inv(" + pretty(e->a) + ")";
    case Op::Exp1p2: return "exp1p2(" + pretty(e->a) + ", " + pretty(e->b) + ")";
    case Op::Digit: return "delta(" + std::to_string(e->amount) + ", " + pretty(e->a) + ")";
    case Op::TruncMod: return "trunc(" + std::to_string(e->amount) + ", " + pretty(e->a) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser.

namespace detail {

enum class Tok {
  End, Int, Ident, Pipe, Caret, TightCaret, Amp, Plus, Minus, Star,
  Slash, StarStar, Tilde, LParen, RParen, Comma, ShiftL, ShiftR
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;

  Tok tok = Tok::End;
  size_t tok_pos = 0;
  uint64_t int_val = 0;
  std::string ident;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, tok_pos); }

  void advance() {
    bool space_before = false;
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
      ++pos;
      space_before = true;
    }
    if (pos == 0) space_before = true;  // leading '^' can't be tight
    tok_pos = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok = Tok::Int;
      int_val = lex_int();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      ident.assign(src.substr(start, pos - start));
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '|': tok = Tok::Pipe; return;
      case '^': {
        bool space_after = pos >= src.size() || std::isspace(static_cast<unsigned char>(src[pos]));
        tok = (!space_before && !space_after) ? Tok::TightCaret : Tok::Caret;
        return;
      }
      case '&': tok = Tok::Amp; return;
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*':
        if (pos < src.size() && src[pos] == '*') { ++pos; tok = Tok::StarStar; } else tok = Tok::Star;
        return;
      case '/': tok = Tok::Slash; return;
      case '~': tok = Tok::Tilde; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case ',': tok = Tok::Comma; return;
      case '<':
        if (pos < src.size() && src[pos] == '<') { ++pos; tok = Tok::ShiftL; return; }
        break;
      case '>':
        if (pos < src.size() && src[pos] == '>') { ++pos; tok = Tok::ShiftR; return; }
        break;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", tok_pos);
  }

  uint64_t lex_int() {
    uint64_t v = 0;
    if (src[pos] == '0' && pos + 1 < src.size() && (src[pos + 1] == 'x' || src[pos + 1] == 'X')) {
      pos += 2;
      size_t digits = 0;
      while (pos < src.size() && std::isxdigit(static_cast<unsigned char>(src[pos]))) {
        if (digits >= 16) fail("integer literal overflow");
        char d = src[pos];
        unsigned hv = d <= '9' ? d - '0' : (std::tolower(d) - 'a' + 10);
        v = (v << 4) | hv;
        ++digits;
        ++pos;
      }
      if (digits == 0) fail("malformed hex literal");
      return v;
    }
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      unsigned d = src[pos] - '0';
      if (v > (~0ull - d) / 10) fail("integer literal overflow");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(std::string_view s) : lx(s) {}

  bool at(Tok t) const { return lx.tok == t; }
  void expect(Tok t, const char* what) {
    if (!at(t)) lx.fail(std::string("expected ") + what);
    lx.advance();
  }

  // syntactic parity, for validating divisors
  static bool syntactically_even(const ExprPtr& e) {
    switch (e->op) {
      case Op::Const: return e->den == 1 && (e->num & 1) == 0;
      case Op::Mul: return syntactically_even(e->a) || syntactically_even(e->b);
      case Op::Shl: return e->amount >= 1;
      case Op::Add:
      case Op::Sub: return syntactically_even(e->a) && syntactically_even(e->b);
      default: return false;
    }
  }
  static bool syntactically_odd(const ExprPtr& e) {
    switch (e->op) {
      case Op::Const: return (e->num & 1) != 0;  // den is odd by construction
      case Op::Add:
      case Op::Sub:
        return (syntactically_odd(e->a) && syntactically_even(e->b)) ||
               (syntactically_even(e->a) && syntactically_odd(e->b));
      case Op::Mul: return syntactically_odd(e->a) && syntactically_odd(e->b);
      case Op::Or: return syntactically_odd(e->a) || syntactically_odd(e->b);
      case Op::Exp1p2: return true;  // (1+2u)^v
      case Op::InvOdd: return true;
      default: return false;
    }
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_xor();
    while (at(Tok::Pipe)) {
      lx.advance();
      e = t_or(e, parse_xor());
    }
    return e;
  }

  ExprPtr parse_xor() {
    ExprPtr e = parse_and();
    for (;;) {
      if (at(Tok::Caret) || at(Tok::TightCaret)) {
        // a tight caret that reaches this level was not claimed by the
        // power postfix (non-literal exponent): treat it as xor too
        lx.advance();
        e = t_xor(e, parse_and());
      } else if (at(Tok::Ident) && lx.ident == "xor") {
        lx.advance();
        e = t_xor(e, parse_and());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_shift();
    while (at(Tok::Amp)) {
      lx.advance();
      e = t_and(e, parse_shift());
    }
    return e;
  }

  ExprPtr parse_shift() {
    ExprPtr e = parse_sum();
    for (;;) {
      if (at(Tok::ShiftL) || at(Tok::ShiftR)) {
        bool left = at(Tok::ShiftL);
        lx.advance();
        if (!at(Tok::Int)) lx.fail("shift amount must be an integer literal");
        uint64_t k = lx.int_val;
        if (k > 64) lx.fail("shift amount too large");
        lx.advance();
        e = left ? t_shl(e, static_cast<unsigned>(k)) : t_shr(e, static_cast<unsigned>(k));
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_prod();
    for (;;) {
      if (at(Tok::Plus)) {
        lx.advance();
        e = t_add(e, parse_prod());
      } else if (at(Tok::Minus)) {
        lx.advance();
        e = t_sub(e, parse_prod());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_prod() {
    ExprPtr e = parse_pow();
    for (;;) {
      if (at(Tok::Star)) {
        lx.advance();
        e = t_mul(e, parse_pow());
      } else if (at(Tok::Slash)) {
        size_t at_pos = lx.tok_pos;
        lx.advance();
        ExprPtr d = parse_pow();
        if (!syntactically_odd(d))
          throw parse_error("division requires a syntactically odd divisor", at_pos);
        e = t_mul(e, t_inv(d));
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_pow() {
    ExprPtr e = parse_unary();
    if (at(Tok::StarStar)) {
      size_t at_pos = lx.tok_pos;
      lx.advance();
      // a ** x  ==  a^x for a constant odd base, via exp1p2((a-1)/2, x)
      if (e->op != Op::Const || e->den != 1 || !(e->num & 1))
        throw parse_error("left operand of ** must be an odd integer constant", at_pos);
      int64_t m = (e->num - 1) / 2;
      return t_exp1p2(t_const(m), parse_unary());
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Tilde)) {
      lx.advance();
      return t_not(parse_unary());
    }
    if (at(Tok::Minus)) {
      lx.advance();
      ExprPtr e = parse_unary();
      if (e->op == Op::Const && e->num != INT64_MIN) return t_const(-e->num, e->den);
      return t_neg(e);
    }
    return parse_postfix();
  }

  // tight ^INT is the power notation of written mathematics: x^2 = x*x
  ExprPtr parse_postfix() {
    ExprPtr e = parse_atom();
    while (at(Tok::TightCaret)) {
      // only claim it when an integer literal follows; otherwise leave the
      // caret for the xor level
      Lexer save = lx;
      lx.advance();
      if (!at(Tok::Int)) {
        lx = save;
        return e;
      }
      uint64_t k = lx.int_val;
      if (k > 64) lx.fail("exponent too large");
      lx.advance();
      e = expand_power(e, k);
    }
    return e;
  }

  static ExprPtr expand_power(const ExprPtr& e, uint64_t k) {
    if (k == 0) return t_const(1);
    if (k == 1) return e;
    ExprPtr half = expand_power(e, k / 2);
    ExprPtr sq = t_mul(half, half);
    return (k & 1) ? t_mul(e, sq) : sq;
  }

  ExprPtr parse_atom() {
    switch (lx.tok) {
      case Tok::Int: {
        uint64_t v = lx.int_val;
        lx.advance();
        // INT/ODDINT rational constant
        if (at(Tok::Slash)) {
          Lexer save = lx;
          size_t at_pos = lx.tok_pos;
          lx.advance();
          if (at(Tok::Int)) {
            uint64_t den = lx.int_val;
            if (den == 0 || !(den & 1))
              throw parse_error("rational constant with even denominator", at_pos);
            lx.advance();
            return t_const(static_cast<int64_t>(v), den);
          }
          lx = save;  // plain division, handled at the product level
        }
        return t_const(static_cast<int64_t>(v));
      }
      case Tok::Ident: {
        std::string name = lx.ident;
        size_t at_pos = lx.tok_pos;
        lx.advance();
        if (!at(Tok::LParen)) {
          if (name == "xor") throw parse_error("xor is an operator, not a variable", at_pos);
          return t_var(name);
        }
        lx.advance();
        ExprPtr e = parse_call(name, at_pos);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LParen: {
        lx.advance();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        lx.fail("expected an expression");
    }
  }

  unsigned parse_index_arg(const char* what) {
    if (!at(Tok::Int)) lx.fail(std::string(what) + " must be an integer literal");
    uint64_t v = lx.int_val;
    if (v > 64) lx.fail(std::string(what) + " too large");
    lx.advance();
    return static_cast<unsigned>(v);
  }

  ExprPtr parse_call(const std::string& name, size_t at_pos) {
    if (name == "delta") {
      unsigned j = parse_index_arg("delta index");
      expect(Tok::Comma, "','");
      return t_digit(j, parse_expr());
    }
    if (name == "trunc") {
      unsigned k = parse_index_arg("trunc width");
      expect(Tok::Comma, "','");
      return t_trunc(k, parse_expr());
    }
    if (name == "inv") return t_inv(parse_expr());
    if (name == "exp1p2") {
      ExprPtr u = parse_expr();
      expect(Tok::Comma, "','");
      return t_exp1p2(u, parse_expr());
    }
    if (name == "shl" || name == "shr") {
      ExprPtr e = parse_expr();
      expect(Tok::Comma, "','");
      unsigned k = parse_index_arg("shift amount");
      return name == "shl" ? t_shl(e, k) : t_shr(e, k);
    }
    throw parse_error("unknown function: " + name, at_pos);
  }
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) {
  detail::Parser p(text);
  ExprPtr e = p.parse_expr();
  if (!p.at(detail::Tok::End)) p.lx.fail("trailing input");
  return e;
}

}  // namespace ergo
