#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <string>

namespace extlab {

/// Exact rational number. All arithmetic in the library is exact; doubles
/// appear only in decimal output columns.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

/// 1/10^k, used for default tolerances.
inline Rat pow10_inv(unsigned k) {
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  Rat r(Int(1), d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// "p/q" for non-integers, "p" otherwise. Round-trips through parse_rational.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Decimal rendering (17 significant digits) for CSV columns and reports.
inline std::string to_decimal(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", mpq_get_d(r.get_mpq_t()));
  return buf;
}

}  // namespace extlab
