#include "extlab/realset.hpp"

#include <algorithm>

namespace extlab {

bool Interval::valid() const {
  if (lo.value.kind == +1 || hi.value.kind == -1) return false;
  if (!lo.value.finite() && lo.included) return false;
  if (!hi.value.finite() && hi.included) return false;
  int c = cmp(lo.value, hi.value);
  if (c > 0) return false;
  if (c == 0) return lo.included && hi.included;  // singleton
  return true;
}

bool Interval::contains(const Rat& x) const {
  ExtRat v{x};
  int cl = cmp(lo.value, v);
  if (cl > 0 || (cl == 0 && !lo.included)) return false;
  int ch = cmp(v, hi.value);
  if (ch > 0 || (ch == 0 && !hi.included)) return false;
  return true;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo.included == b.lo.included && a.hi.included == b.hi.included &&
         a.lo.value == b.lo.value && a.hi.value == b.hi.value;
}

namespace {

// Order on lower endpoints: at equal values an included bound comes first.
bool lo_less(const Endpoint& a, const Endpoint& b) {
  int c = cmp(a.value, b.value);
  if (c != 0) return c < 0;
  return a.included && !b.included;
}

// Order on upper endpoints: at equal values an included bound is larger.
bool hi_less(const Endpoint& a, const Endpoint& b) {
  int c = cmp(a.value, b.value);
  if (c != 0) return c < 0;
  return !a.included && b.included;
}

// cur.hi touches or overlaps next.lo, assuming cur.lo <= next.lo.
bool mergeable(const Interval& cur, const Interval& next) {
  int c = cmp(next.lo.value, cur.hi.value);
  if (c < 0) return true;
  if (c > 0) return false;
  return next.lo.included || cur.hi.included;
}

}  // namespace

RealSet canonicalize(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (!iv.valid()) throw std::invalid_argument("malformed interval: " + to_string(iv));
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return lo_less(a.lo, b.lo); });
  std::vector<Interval> out;
  for (auto& iv : raw) {
    if (!out.empty() && mergeable(out.back(), iv)) {
      if (hi_less(out.back().hi, iv.hi)) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return RealSet(std::move(out));
}

RealSet RealSet::of(std::vector<Interval> raw) { return canonicalize(std::move(raw)); }

bool RealSet::contains(const Rat& x) const {
  for (const auto& p : pieces_) {
    if (cmp(ExtRat(x), p.lo.value) < 0) return false;
    if (p.contains(x)) return true;
  }
  return false;
}

bool operator==(const RealSet& a, const RealSet& b) {
  if (a.pieces().size() != b.pieces().size()) return false;
  for (size_t i = 0; i < a.pieces().size(); ++i)
    if (!(a.pieces()[i] == b.pieces()[i])) return false;
  return true;
}

RealSet union_of(const RealSet& s, const RealSet& t) {
  std::vector<Interval> all = s.pieces();
  all.insert(all.end(), t.pieces().begin(), t.pieces().end());
  return canonicalize(std::move(all));
}

bool intersect_intervals(const Interval& a, const Interval& b, Interval& out) {
  Endpoint lo = lo_less(a.lo, b.lo) ? b.lo : a.lo;
  Endpoint hi = hi_less(a.hi, b.hi) ? a.hi : b.hi;
  Interval r{lo, hi};
  if (!r.valid()) return false;
  out = r;
  return true;
}

RealSet intersect(const RealSet& s, const RealSet& t) {
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  const auto& sp = s.pieces();
  const auto& tp = t.pieces();
  while (i < sp.size() && j < tp.size()) {
    Interval r;
    if (intersect_intervals(sp[i], tp[j], r)) out.push_back(r);
    if (hi_less(sp[i].hi, tp[j].hi)) ++i; else ++j;
  }
  return canonicalize(std::move(out));
}

RealSet complement(const RealSet& s) {
  std::vector<Interval> out;
  Endpoint cursor{ExtRat::neg_inf(), false};
  for (const auto& p : s.pieces()) {
    Interval gap{cursor, {p.lo.value, !p.lo.included}};
    if (gap.valid()) out.push_back(gap);
    cursor = Endpoint{p.hi.value, !p.hi.included};
  }
  Interval tail{cursor, {ExtRat::pos_inf(), false}};
  if (tail.valid()) out.push_back(tail);
  return canonicalize(std::move(out));
}

RealSet difference(const RealSet& s, const RealSet& t) { return intersect(s, complement(t)); }

RealSet closure(const RealSet& s) {
  std::vector<Interval> out;
  for (auto p : s.pieces()) {
    if (p.lo.value.finite()) p.lo.included = true;
    if (p.hi.value.finite()) p.hi.included = true;
    out.push_back(std::move(p));
  }
  return canonicalize(std::move(out));
}

RealSet interior(const RealSet& s) {
  std::vector<Interval> out;
  for (auto p : s.pieces()) {
    if (p.is_singleton()) continue;
    if (p.lo.value.finite()) p.lo.included = false;
    if (p.hi.value.finite()) p.hi.included = false;
    out.push_back(std::move(p));
  }
  return canonicalize(std::move(out));
}

bool is_closed(const RealSet& s) { return closure(s) == s; }
bool is_open(const RealSet& s) { return interior(s) == s; }

namespace {

Interval shrink_piece(const Interval& p, const Rat& step) {
  if (p.is_singleton()) return p;
  Endpoint lo = p.lo, hi = p.hi;
  bool bounded = lo.value.finite() && hi.value.finite();
  Rat mid;
  if (bounded) mid = (lo.value.value + hi.value.value) / 2;
  if (lo.value.finite() && !lo.included) {
    Rat moved = lo.value.value + step;
    lo = Endpoint{ExtRat(bounded ? rat_min(moved, mid) : moved), true};
  }
  if (hi.value.finite() && !hi.included) {
    Rat moved = hi.value.value - step;
    hi = Endpoint{ExtRat(bounded ? rat_max(moved, mid) : moved), true};
  }
  return Interval{lo, hi};
}

}  // namespace

RealSet fsigma_decomposition(const RealSet& a, int n) {
  if (n < 1) throw std::invalid_argument("fsigma_decomposition: n must be >= 1");
  Rat step = rat(1, n);
  std::vector<Interval> out;
  out.reserve(a.pieces().size());
  for (const auto& p : a.pieces()) out.push_back(shrink_piece(p, step));
  return canonicalize(std::move(out));
}

RealSet gdelta_codecomposition(const RealSet& a, int n) {
  return fsigma_decomposition(complement(a), n);
}

Rat sample_point(const RealSet& s) {
  if (s.is_empty()) throw std::invalid_argument("sample_point: empty set");
  const Interval& p = s.pieces().front();
  if (p.is_singleton()) return p.lo.value.value;
  if (p.lo.value.finite() && p.hi.value.finite()) return (p.lo.value.value + p.hi.value.value) / 2;
  if (p.lo.value.finite()) return p.lo.value.value + 1;
  if (p.hi.value.finite()) return p.hi.value.value - 1;
  return Rat(0);
}

std::string to_string(const Interval& iv) {
  if (iv.is_singleton() && iv.lo.included && iv.hi.included) return "{" + to_string(iv.lo.value.value) + "}";
  std::string s;
  s += iv.lo.included ? '[' : '(';
  s += iv.lo.value.finite() ? to_string(iv.lo.value.value) : std::string("-inf");
  s += ',';
  s += iv.hi.value.finite() ? to_string(iv.hi.value.value) : std::string("inf");
  s += iv.hi.included ? ']' : ')';
  return s;
}

std::string to_string(const RealSet& s) {
  if (s.is_empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < s.pieces().size(); ++i) {
    if (i) out += " U ";
    out += to_string(s.pieces()[i]);
  }
  return out;
}

}  // namespace extlab
