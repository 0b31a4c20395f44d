#pragma once

#include <stdexcept>
#include <string>

#include "extlab/pwfunc.hpp"

namespace extlab {

/// Parse failure with the offending input and position, for caret
/// diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position, std::string input = {})
      : std::runtime_error(msg), position_(position), input_(std::move(input)) {}
  size_t position() const { return position_; }
  const std::string& input() const { return input_; }

 private:
  size_t position_;
  std::string input_;
};

/// "p/q", integers, or decimals ("1.25" reads as 5/4).
Rat parse_rational(const std::string& text);

/// Set notation: "[0,1) U (2,3] U {5}", "(-inf,0]", "empty".
RealSet parse_realset(const std::string& text);

/// Polynomial expressions over x with rational coefficients: +, -, *, /
/// (by constants), ^ with nonnegative integer exponents, parentheses.
Poly parse_poly(const std::string& text);

/// Piecewise grammar: semicolon-separated "piece: expr" entries,
/// e.g. "[0,1): x^2; [1,2]: 2*x - 1"; "empty" for the empty function.
PiecewiseFunc parse_pwfunc(const std::string& text);

/// "line / caret / message" diagnostic block for a parse error.
std::string caret_diagnostic(const ParseError& err);

}  // namespace extlab
