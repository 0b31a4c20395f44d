#include "extlab/parse.hpp"

#include <algorithm>
#include <cctype>

namespace extlab {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  size_t pos() const { return pos_; }

  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

Rat parse_number(Cursor& c) {
  bool neg = false;
  if (c.accept('-')) neg = true;
  else c.accept('+');
  std::string whole = c.digits();
  Rat r;
  if (c.accept('/')) {
    std::string den = c.digits();
    if (den == "0") c.fail("zero denominator");
    r = Rat(whole + "/" + den);
  } else if (c.accept('.')) {
    std::string frac = c.digits();
    std::string den = "1" + std::string(frac.size(), '0');
    r = Rat(whole + frac + "/" + den);
  } else {
    r = Rat(whole);
  }
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

ExtRat parse_bound(Cursor& c, bool low_side) {
  if (c.accept_word("-inf")) return ExtRat::neg_inf();
  if (c.accept_word("+inf") || c.accept_word("inf")) {
    if (low_side) c.fail("a lower bound cannot be +inf");
    return ExtRat::pos_inf();
  }
  return ExtRat(parse_number(c));
}

Interval parse_interval(Cursor& c) {
  if (c.accept('{')) {
    Rat v = parse_number(c);
    c.expect('}', "to close a singleton");
    return Interval::point(v);
  }
  bool lo_inc;
  if (c.accept('[')) lo_inc = true;
  else if (c.accept('(')) lo_inc = false;
  else c.fail("expected an interval");
  ExtRat lo = parse_bound(c, true);
  c.expect(',', "between interval bounds");
  ExtRat hi = parse_bound(c, false);
  bool hi_inc;
  if (c.accept(']')) hi_inc = true;
  else if (c.accept(')')) hi_inc = false;
  else c.fail("expected ')' or ']' to close the interval");
  Interval iv{{lo, lo_inc && lo.finite()}, {hi, hi_inc && hi.finite()}};
  if ((lo_inc && !lo.finite()) || (hi_inc && !hi.finite()))
    c.fail("an infinite endpoint cannot be included");
  if (!iv.valid()) c.fail("malformed interval " + to_string(iv));
  return iv;
}

RealSet parse_realset_at(Cursor& c) {
  if (c.accept_word("empty")) return RealSet();
  std::vector<Interval> pieces;
  pieces.push_back(parse_interval(c));
  while (c.accept_word("U") || c.accept_word("u")) pieces.push_back(parse_interval(c));
  return canonicalize(std::move(pieces));
}

// Polynomial expression grammar.
Poly parse_expr(Cursor& c);

Poly parse_atom(Cursor& c) {
  if (c.accept('(')) {
    Poly p = parse_expr(c);
    c.expect(')', "to close the parenthesis");
    return p;
  }
  char ch = c.peek();
  if (ch == 'x') {
    c.accept('x');
    return Poly::x();
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) return Poly::constant(parse_number(c));
  c.fail("expected a number, 'x', or a parenthesized expression");
}

Poly parse_power(Cursor& c) {
  if (c.accept('-')) return -parse_power(c);  // -x^2 reads as -(x^2)
  Poly base = parse_atom(c);
  if (!c.accept('^')) return base;
  size_t at = c.pos();
  Rat e = parse_number(c);
  if (!is_integer(e) || e < 0) throw ParseError("exponent must be a nonnegative integer", at);
  long n = e.get_num().get_si();
  if (n > 64) throw ParseError("exponent too large", at);
  Poly acc = Poly::constant(Rat(1));
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Poly parse_term(Cursor& c) {
  Poly p = parse_power(c);
  for (;;) {
    if (c.accept('*')) {
      p = p * parse_power(c);
    } else if (c.peek() == '/') {
      size_t at = c.pos();
      c.accept('/');
      Poly d = parse_power(c);
      if (!d.is_constant() || d.is_zero())
        throw ParseError("division only by nonzero constants", at);
      p = scale(p, Rat(1) / d.coeff(0));
    } else {
      break;
    }
  }
  return p;
}

Poly parse_expr(Cursor& c) {
  Poly p = parse_term(c);
  for (;;) {
    if (c.accept('+')) p = p + parse_term(c);
    else if (c.accept('-')) p = p - parse_term(c);
    else break;
  }
  return p;
}

template <typename T, typename Fn>
T parse_whole(const std::string& text, Fn fn) {
  try {
    Cursor c(text);
    T value = fn(c);
    if (!c.done()) c.fail("unexpected trailing input");
    return value;
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.position(), text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, text);  // interval/piece invariant failures
  }
}

}  // namespace

Rat parse_rational(const std::string& text) {
  return parse_whole<Rat>(text, [](Cursor& c) { return parse_number(c); });
}

RealSet parse_realset(const std::string& text) {
  return parse_whole<RealSet>(text, [](Cursor& c) { return parse_realset_at(c); });
}

Poly parse_poly(const std::string& text) {
  return parse_whole<Poly>(text, [](Cursor& c) { return parse_expr(c); });
}

PiecewiseFunc parse_pwfunc(const std::string& text) {
  return parse_whole<PiecewiseFunc>(text, [](Cursor& c) {
    if (c.accept_word("empty")) return PiecewiseFunc{};
    std::vector<PiecePoly> pieces;
    std::vector<Interval> cover;
    do {
      Interval iv = parse_interval(c);
      c.expect(':', "between a piece and its expression");
      Poly p = parse_expr(c);
      cover.push_back(iv);
      pieces.push_back({iv, std::move(p)});
    } while (c.accept(';'));
    return make_pwfunc(canonicalize(std::move(cover)), std::move(pieces));
  });
}

std::string caret_diagnostic(const ParseError& err) {
  std::string out = err.input() + "\n";
  out += std::string(std::min(err.position(), err.input().size()), ' ') + "^\n";
  out += err.what();
  return out;
}

}  // namespace extlab
