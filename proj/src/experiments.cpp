#include "normlab/experiments.hpp"

#include <sstream>

#include "normlab/error.hpp"

namespace normlab {
namespace {

bool is_square(Integer const& n, Integer* root_out = nullptr) {
  if (n < 0) return false;
  Integer const r = sqrt(n);
  if (root_out) *root_out = r;
  return r * r == n;
}

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

// 0, 1, -1, 2, -2, ..., H, -H
long signed_order(long k) { return k % 2 == 1 ? (k + 1) / 2 : -(k / 2); }

}  // namespace

Interval QuadraticIrrational::value() const {
  return (Interval(a) + Interval(b) * interval_sqrt(Rational(D))) / Interval(c);
}

std::optional<Rational> QuadraticIrrational::exact_square() const {
  Integer r;
  if (b == 0) return (a / c) * (a / c);
  if (is_square(D, &r)) {
    Rational const v = (a + b * Rational(r)) / c;
    return v * v;
  }
  if (a == 0) return b * b * Rational(D) / (c * c);
  return std::nullopt;
}

Interval QuadraticIrrational::square() const {
  if (auto const e = exact_square()) return Interval(*e);
  // ((a^2 + b^2 D) + 2ab sqrt(D)) / c^2
  return (Interval(a * a + b * b * Rational(D)) + Interval(2 * a * b) * interval_sqrt(Rational(D))) /
         Interval(c * c);
}

std::string QuadraticIrrational::describe() const {
  return "(" + to_string(a) + " + " + to_string(b) + "*sqrt(" + D.str() + "))/" + to_string(c);
}

QuadraticIrrational parse_alpha(std::string const& text) {
  if (text == "golden") return {1, 1, 5, 2};
  if (text.rfind("sqrt:", 0) == 0) {
    Integer const d = parse_rational(text.substr(5)).convert_to<Integer>();
    if (d <= 0 || parse_rational(text.substr(5)) != Rational(d)) {
      throw Error(ErrorCode::kParseError, "sqrt:D needs a positive integer D");
    }
    return {0, 1, d, 1};
  }
  if (text.rfind("quad:", 0) == 0) {
    auto const parts = split(text.substr(5), ',');
    if (parts.size() != 4) throw Error(ErrorCode::kParseError, "quad:a,b,D,c needs four entries");
    QuadraticIrrational q{parse_rational(parts[0]), parse_rational(parts[1]),
                          parse_rational(parts[2]).convert_to<Integer>(), parse_rational(parts[3])};
    if (q.D <= 0 || q.c == 0) throw Error(ErrorCode::kParseError, "need D > 0 and c != 0");
    return q;
  }
  throw Error(ErrorCode::kParseError, "alpha must be golden, sqrt:D or quad:a,b,D,c");
}

OppenheimRow oppenheim_min(QuadraticIrrational const& alpha, int vars, long H) {
  if (vars != 2 && vars != 3) throw Error(ErrorCode::kInvalidArgument, "vars must be 2 or 3");
  if (H < 1) throw Error(ErrorCode::kInvalidArgument, "H must be positive");
  auto const exact = alpha.exact_square();
  Interval const a2 = alpha.square();
  OppenheimRow row;
  row.height = H;
  std::optional<Interval> best, best_last;
  int const others = vars - 1;
  long const side = 2 * H + 1;
  long const combos = others == 1 ? side : side * side;
  for (long idx = 0; idx < combos; ++idx) {
    // The other coordinates in the order 0, 1, -1, 2, -2, ...
    long const y = signed_order(others == 1 ? idx : idx / side);
    long const z = others == 1 ? 0 : signed_order(idx % side);
    long const last = others == 1 ? y : z;
    Rational const rational_part = others == 1 ? Rational(0) : Rational(y * y);
    Interval c;
    std::optional<Rational> ce;
    if (exact) {
      ce = rational_part - *exact * last * last;
      c = Interval(*ce);
    } else {
      c = Interval(rational_part) - a2 * Interval(Rational(last * last));
    }
    // x^2 + c is monotone in x >= 0: the smallest |value| sits next to sqrt(-c).
    std::vector<long> candidates{0, 1};
    if (!c.certainly_positive()) {
      Interval const r = sqrt(max(-c, Interval(0)));
      long const lo = static_cast<long>(numerator(r.lower()) / denominator(r.lower()));
      long const hi = static_cast<long>(numerator(r.upper()) / denominator(r.upper()));
      for (long x = lo - 1; x <= hi + 1; ++x) {
        if (x >= 2 && x <= H) candidates.push_back(x);
      }
    }
    for (long x : candidates) {
      if (x > H || (x == 0 && y == 0 && z == 0)) continue;
      ++row.evaluated;
      Interval value;
      if (exact) {
        Rational const v = Rational(x * x) + *ce;
        if (v == 0) {
          ++row.zeros;
          continue;
        }
        value = Interval(abs(v));
      } else {
        value = abs(Interval(Rational(x * x)) + c);
        if (!value.certainly_positive()) {
          throw Error(ErrorCode::kPrecisionLoss, "value not separated from zero; raise --precision-bits");
        }
      }
      RationalVector point(vars);
      point[0] = x;
      point[1] = y;
      if (vars == 3) point[2] = z;
      if (!best || value.mid() < best->mid()) {
        best = value;
        row.point = point;
      }
      if (last != 0 && (!best_last || value.mid() < best_last->mid())) {
        best_last = value;
        row.point_last_nonzero = point;
      }
    }
  }
  row.min_abs = *best;
  row.min_abs_last_nonzero = *best_last;
  return row;
}

}  // namespace normlab
