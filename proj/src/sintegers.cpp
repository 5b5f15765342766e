#include "normlab/sintegers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normlab/error.hpp"

namespace normlab {
namespace {

// f = F / L with F integral; evaluates F on integer points, in __int128 when
// the height bound makes that safe.
class IntegerEvaluator {
 public:
  IntegerEvaluator(Form<Rational> const& f, long H) : degree_(f.degree()) {
    L_ = 1;
    for (auto const& [m, c] : f.terms()) L_ = boost::multiprecision::lcm(L_, denominator(c));
    Integer bound = 0;
    Integer const h_pow = pow(Integer(std::max(H, 1L)), static_cast<unsigned>(degree_));
    for (auto const& [m, c] : f.terms()) {
      Integer const a = numerator(c) * (L_ / denominator(c));
      terms_.push_back({m, a, 0});
      bound += abs(a) * h_pow;
    }
    small_ = bound < (Integer(1) << 120);
    if (small_) {
      for (auto& t : terms_) t.small = to_int128(t.c);
    }
  }

  Integer const& denominator_scale() const { return L_; }
  int degree() const { return degree_; }

  Integer operator()(std::vector<long> const& x) const {
    if (small_) {
      __int128 acc = 0;
      for (auto const& t : terms_) {
        __int128 v = t.small;
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (int e = 0; e < t.m[i]; ++e) v *= x[i];
        }
        acc += v;
      }
      return from_int128(acc);
    }
    Integer acc = 0;
    for (auto const& t : terms_) {
      Integer v = t.c;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (int e = 0; e < t.m[i]; ++e) v *= x[i];
      }
      acc += v;
    }
    return acc;
  }

 private:
  struct Term {
    Monomial m;
    Integer c;
    __int128 small;
  };

  static __int128 to_int128(Integer const& v) {
    Integer const a = abs(v);
    Integer const hi = a >> 64;
    Integer const lo = a - (hi << 64);
    __int128 r = (static_cast<__int128>(static_cast<unsigned long long>(hi)) << 64) |
                 static_cast<unsigned long long>(lo);
    return v < 0 ? -r : r;
  }

  static Integer from_int128(__int128 v) {
    bool const negative = v < 0;
    unsigned __int128 a = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer r = Integer(static_cast<unsigned long long>(a >> 64));
    r <<= 64;
    r += Integer(static_cast<unsigned long long>(a & 0xffffffffffffffffULL));
    return negative ? Integer(-r) : r;
  }

  int degree_;
  Integer L_;
  std::vector<Term> terms_;
  bool small_ = false;
};

Interval abs_difference(PlaceValue const& a, PlaceValue const& b) {
  if (a.is_exact() && b.is_exact()) {
    return Interval(normalized_abs(std::get<Rational>(a.value) - std::get<Rational>(b.value), a.place));
  }
  if (a.place.is_archimedean()) {
    auto const as_interval = [](PlaceValue const& x) {
      if (auto const* r = std::get_if<Rational>(&x.value)) return Interval(*r);
      return std::get<Interval>(x.value);
    };
    return abs(as_interval(a) - as_interval(b));
  }
  auto const as_padic = [](PlaceValue const& x) {
    if (auto const* r = std::get_if<Rational>(&x.value)) {
      return PAdic::from_rational(*r, x.place.p());
    }
    return std::get<PAdic>(x.value);
  };
  PAdic const d = as_padic(a) - as_padic(b);
  if (d.is_exact_zero()) return Interval(0);
  if (d.is_inexact_zero() || d.relative_precision() < 2) {
    // |d| <= p^{-valuation} and may be zero.
    return Interval(Rational(0), pow(Rational(d.prime()), -d.valuation()));
  }
  return Interval(d.normalized_abs());
}

Interval archimedean_key(std::vector<PlaceValue> const& v) {
  if (auto const* r = std::get_if<Rational>(&v.front().value)) return Interval(*r);
  return std::get<Interval>(v.front().value);
}

bool is_diagonal_quadratic(int degree, std::vector<Monomial> const& monomials) {
  if (degree != 2) return false;
  for (auto const& m : monomials) {
    if (std::count(m.begin(), m.end(), 2) != 1) return false;
  }
  return true;
}

}  // namespace

SRing SRing::from_places(std::vector<Place> const& places) { return {finite_primes(places)}; }

std::vector<Place> SRing::places() const {
  std::vector<Place> out{Place::archimedean()};
  for (auto const& p : primes) out.push_back(Place::prime(p));
  return out;
}

bool SRing::contains(Rational const& x) const {
  Integer d = denominator(x);
  for (auto const& p : primes) {
    while (d % p == 0) d /= p;
  }
  return d == 1;
}

RationalVector SPoint::value() const {
  RationalVector x(static_cast<int>(numerators.size()));
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    x[static_cast<int>(i)] = Rational(Integer(numerators[i]), denominator);
  }
  return x;
}

bool SPoint::is_zero() const {
  return std::all_of(numerators.begin(), numerators.end(), [](long v) { return v == 0; });
}

void enumerate_points(SRing const& ring, int n, long H, int D,
                      std::function<void(SPoint const&)> const& visit) {
  if (H < 1 || D < 0 || n < 1) throw Error(ErrorCode::kInvalidArgument, "need H >= 1, D >= 0, n >= 1");
  std::size_t const k = ring.primes.size();
  std::vector<int> a(k, 0);
  int const top = ring.primes.empty() ? 0 : D;
  while (true) {
    SPoint point;
    point.denominator = 1;
    std::vector<long> reduced_by;  // primes that must not divide every numerator
    for (std::size_t i = 0; i < k; ++i) {
      point.denominator *= pow(ring.primes[i], static_cast<unsigned>(a[i]));
      if (a[i] > 0) reduced_by.push_back(static_cast<long>(ring.primes[i]));
    }
    point.numerators.assign(n, -H);
    while (true) {
      bool ok = true;
      for (long p : reduced_by) {
        bool all_divisible = true;
        for (long v : point.numerators) {
          if (v % p != 0) {
            all_divisible = false;
            break;
          }
        }
        if (all_divisible) {
          ok = false;
          break;
        }
      }
      if (ok) visit(point);
      int i = n - 1;
      while (i >= 0 && point.numerators[i] == H) {
        point.numerators[i] = -H;
        --i;
      }
      if (i < 0) break;
      ++point.numerators[i];
    }
    std::size_t i = k;
    while (i > 0 && a[i - 1] == top) {
      a[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++a[i - 1];
  }
}

std::uint64_t count_points(SRing const& ring, int n, long H, int D) {
  // Upper bound: ignores the reducedness condition.
  long double const side = 2.0L * H + 1;
  long double const per = std::pow(side, n);
  long double const denoms = std::pow(static_cast<long double>(ring.primes.empty() ? 1 : D + 1),
                                      static_cast<long double>(ring.primes.size()));
  long double const total = per * denoms;
  if (total > 1e18L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

SVector SVector::global(RationalVector const& x, std::vector<Place> const& places) {
  SVector w;
  w.places = places;
  for (std::size_t v = 0; v < places.size(); ++v) {
    std::vector<LocalScalar> comp;
    for (int i = 0; i < x.size(); ++i) comp.emplace_back(x[i]);
    w.components.push_back(std::move(comp));
  }
  return w;
}

int SVector::dimension() const {
  return components.empty() ? 0 : static_cast<int>(components.front().size());
}

std::optional<Rational> exact_place_norm(SVector const& w, std::size_t v) {
  Rational best = 0;
  for (auto const& x : w.components[v]) {
    Rational a;
    if (auto const* r = std::get_if<Rational>(&x)) {
      a = normalized_abs(*r, w.places[v]);
    } else if (auto const* p = std::get_if<PAdic>(&x)) {
      if (!p->is_exact_zero() && (p->is_zero() || p->relative_precision() < 2)) return std::nullopt;
      a = p->normalized_abs();
    } else {
      return std::nullopt;
    }
    best = std::max(best, a);
  }
  return best;
}

Interval place_norm(SVector const& w, std::size_t v) {
  if (auto const exact = exact_place_norm(w, v)) return Interval(*exact);
  Interval best(0);
  for (auto const& x : w.components[v]) {
    Interval a;
    if (auto const* r = std::get_if<Rational>(&x)) {
      a = Interval(normalized_abs(*r, w.places[v]));
    } else if (auto const* i = std::get_if<Interval>(&x)) {
      a = abs(*i);
    } else {
      auto const& p = std::get<PAdic>(x);
      if (p.is_exact_zero()) {
        a = Interval(0);
      } else if (p.is_zero() || p.relative_precision() < 2) {
        a = Interval(Rational(0), pow(Rational(p.prime()), -p.valuation()));
      } else {
        a = Interval(p.normalized_abs());
      }
    }
    best = max(best, a);
  }
  return best;
}

std::optional<Rational> exact_snorm(SVector const& w) {
  Rational best = 0;
  for (std::size_t v = 0; v < w.places.size(); ++v) {
    auto const n = exact_place_norm(w, v);
    if (!n) return std::nullopt;
    best = std::max(best, *n);
  }
  return best;
}

std::optional<Rational> exact_content(SVector const& w) {
  Rational prod = 1;
  for (std::size_t v = 0; v < w.places.size(); ++v) {
    auto const n = exact_place_norm(w, v);
    if (!n) return std::nullopt;
    prod *= *n;
  }
  return prod;
}

Interval snorm(SVector const& w) {
  if (auto const e = exact_snorm(w)) return Interval(*e);
  Interval best(0);
  for (std::size_t v = 0; v < w.places.size(); ++v) best = max(best, place_norm(w, v));
  return best;
}

Interval content(SVector const& w) {
  if (auto const e = exact_content(w)) return Interval(*e);
  Interval prod(1);
  for (std::size_t v = 0; v < w.places.size(); ++v) prod = prod * place_norm(w, v);
  return prod;
}

std::optional<Rational> exact_content(std::vector<PlaceValue> const& values) {
  Rational prod = 1;
  for (auto const& v : values) {
    if (!v.abs_is_exact()) return std::nullopt;
    prod *= v.exact_abs();
  }
  return prod;
}

Interval content(std::vector<PlaceValue> const& values) {
  if (auto const e = exact_content(values)) return Interval(*e);
  Interval prod(1);
  for (auto const& v : values) {
    if (v.abs_is_exact()) {
      prod = prod * Interval(v.exact_abs());
    } else if (auto const* p = std::get_if<PAdic>(&v.value)) {
      prod = prod * Interval(Rational(0), pow(Rational(p->prime()), -p->valuation()));
    } else {
      prod = prod * v.abs_enclosure();
    }
  }
  return prod;
}

Rational SUnit::value(SRing const& ring) const {
  Rational r = sign;
  for (std::size_t i = 0; i < exponents.size(); ++i) r *= pow(Rational(ring.primes[i]), exponents[i]);
  return r;
}

SUnit SUnit::power(int s) const {
  SUnit r;
  r.sign = (s % 2 == 0) ? 1 : sign;
  for (int e : exponents) r.exponents.push_back(e * s);
  return r;
}

SVector scale(SVector const& w, Rational const& xi) {
  SVector out = w;
  for (std::size_t v = 0; v < w.places.size(); ++v) {
    for (auto& x : out.components[v]) {
      if (auto* r = std::get_if<Rational>(&x)) {
        *r *= xi;
      } else if (auto* i = std::get_if<Interval>(&x)) {
        *i = *i * Interval(xi);
      } else {
        auto& p = std::get<PAdic>(x);
        p = p * PAdic::from_rational(xi, p.prime(), std::max(p.relative_precision(), 2));
      }
    }
  }
  return out;
}

Interval unit_kappa_hat(SRing const& ring, int s) {
  Integer prod = 1;
  for (auto const& p : ring.primes) prod *= pow(p, static_cast<unsigned>(s));
  return sqrt(Interval(prod));
}

UnitBalanceResult unit_balance(SVector const& w, int s, SRing const& ring,
                               UnitBalanceOptions const& options) {
  if (s < 1) throw Error(ErrorCode::kInvalidArgument, "s must be positive");
  std::size_t const k = ring.primes.size();
  if (w.places.size() != k + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "vector places do not match the ring");
  }
  std::vector<Interval> norms;
  std::vector<std::optional<Rational>> exact;
  bool all_exact = true;
  for (std::size_t v = 0; v <= k; ++v) {
    norms.push_back(place_norm(w, v));
    exact.push_back(exact_place_norm(w, v));
    all_exact = all_exact && exact.back().has_value();
    if (exact.back() && *exact.back() == 0) {
      throw Error(ErrorCode::kZeroContent, "a component of w vanishes, so cont(w) = 0");
    }
    if (!norms.back().certainly_positive()) {
      throw Error(ErrorCode::kPrecisionLoss, "cannot certify cont(w) != 0");
    }
  }
  // Continuous optimum of the log problem.
  std::vector<double> logs;
  for (auto const& n : norms) logs.push_back(std::log(n.mid_double()));
  double mean = 0;
  for (double l : logs) mean += l / static_cast<double>(k + 1);
  std::vector<long> center(k);
  for (std::size_t i = 0; i < k; ++i) {
    double const lp = std::log(static_cast<double>(ring.primes[i]));
    center[i] = std::lround((logs[i + 1] - mean) / (s * lp));
  }
  int E = std::max(options.window, 1);
  while (E > 1 && std::pow(2.0 * E + 1, static_cast<double>(k)) > static_cast<double>(options.max_box)) --E;

  UnitBalanceResult result;
  result.window = E;
  std::vector<int> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<int>(center[i] - E);
  std::optional<Rational> best_exact;
  std::optional<Interval> best_interval;
  std::vector<int> best_e(k, 0);
  while (true) {
    // ||xi^s w||_S for xi = prod p_i^{e_i}
    Rational arch_scale = 1;
    for (std::size_t i = 0; i < k; ++i) arch_scale *= pow(Rational(ring.primes[i]), s * e[i]);
    if (all_exact) {
      Rational value = *exact[0] * arch_scale;
      for (std::size_t i = 0; i < k; ++i) {
        value = std::max(value, *exact[i + 1] * pow(Rational(ring.primes[i]), -s * e[i]));
      }
      if (!best_exact || value < *best_exact) {
        best_exact = value;
        best_e = e;
      }
    } else {
      Interval value = norms[0] * Interval(arch_scale);
      for (std::size_t i = 0; i < k; ++i) {
        value = max(value, norms[i + 1] * Interval(pow(Rational(ring.primes[i]), -s * e[i])));
      }
      if (!best_interval || value.mid() < best_interval->mid()) {
        best_interval = value;
        best_e = e;
      }
    }
    std::size_t i = k;
    while (i > 0 && e[i - 1] == center[i - 1] + E) {
      e[i - 1] = static_cast<int>(center[i - 1] - E);
      --i;
    }
    if (i == 0) break;
    ++e[i - 1];
  }
  result.xi.sign = 1;
  result.xi.exponents = best_e;
  if (all_exact) {
    result.exact_balanced = *best_exact;
    result.balanced_norm = Interval(*best_exact);
  } else {
    result.balanced_norm = *best_interval;
  }
  Interval cont(1);
  for (auto const& n : norms) cont = cont * n;
  result.target = root(cont, static_cast<unsigned>(k + 1));
  result.ratio = result.balanced_norm / result.target;
  result.kappa_hat = unit_kappa_hat(ring, s);
  return result;
}

ScanSummary value_scan(SForm const& f, ScanOptions const& options) {
  ScanSummary summary;
  summary.height = options.height;
  summary.denom_cap = options.denom_cap;
  summary.places = f.places;
  SRing const ring = SRing::from_places(f.places);
  int const n = f.nvars();
  auto const global = f.global_form();
  std::uint64_t const bound = count_points(ring, n, options.height, options.denom_cap);

  auto const note_min = [&](RationalVector const& x, Interval const& c, std::optional<Rational> const& ce) {
    // Ties go to the lower height, then to a point whose first nonzero
    // coordinate is positive, then to enumeration order.
    auto const rank = [](RationalVector const& p) {
      Rational h = 0;
      int negative = 0;
      for (int i = 0; i < p.size(); ++i) h = std::max(h, Rational(abs(p[i])));
      for (int i = 0; i < p.size(); ++i) {
        if (p[i] != 0) {
          negative = p[i] < 0;
          break;
        }
      }
      return std::make_pair(h, negative);
    };
    bool better;
    bool tie;
    if (ce && summary.exact_min_content) {
      better = *ce < *summary.exact_min_content;
      tie = *ce == *summary.exact_min_content;
    } else {
      better = !summary.min_content || c.mid() < summary.min_content->mid();
      tie = summary.min_content && c.mid() == summary.min_content->mid();
    }
    if (tie && rank(x) < rank(*summary.min_point)) better = true;
    if (better) {
      summary.min_content = c;
      summary.exact_min_content = ce;
      summary.min_point = x;
    }
  };

  // Pruned exact mode for diagonal quadratics over Z.
  if (bound > options.max_points && options.allow_pruned && ring.primes.empty()) {
    auto const& comp = f.components.front();
    std::vector<Monomial> monomials;
    std::vector<Interval> a(n, Interval(0));
    std::vector<std::optional<Rational>> ea(n, Rational(0));
    if (comp.exact) {
      for (auto const& [m, c] : comp.exact->terms()) monomials.push_back(m);
    } else if (comp.real) {
      for (auto const& [m, c] : comp.real->terms()) monomials.push_back(m);
    }
    if (is_diagonal_quadratic(f.degree(), monomials)) {
      for (auto const& m : monomials) {
        int const i = static_cast<int>(std::find(m.begin(), m.end(), 2) - m.begin());
        if (comp.exact) {
          ea[i] = *comp.exact->coefficient(m);
          a[i] = Interval(*ea[i]);
        } else {
          a[i] = *comp.real->coefficient(m);
          ea[i] = std::nullopt;
        }
      }
      bool const exact_mode = comp.exact.has_value();
      if (a[0].certainly_nonzero()) {
        summary.pruned = true;
        long const H = options.height;
        std::vector<long> rest(n - 1, -H);
        while (true) {
          Interval c(0);
          Rational ce = 0;
          bool rest_zero = true;
          for (int i = 1; i < n; ++i) {
            long const v = rest[i - 1];
            rest_zero = rest_zero && v == 0;
            if (exact_mode) {
              ce += *ea[i] * v * v;
            } else {
              c = c + a[i] * Interval(Rational(v * v));
            }
          }
          if (exact_mode) c = Interval(ce);
          std::vector<long> candidates{0, 1};
          Interval const ratio = -c / a[0];
          if (!ratio.certainly_negative()) {
            Interval const r = sqrt(max(ratio, Interval(0)));
            Integer lo = numerator(r.lower()) / denominator(r.lower());
            Integer hi = numerator(r.upper()) / denominator(r.upper()) + 1;
            for (Integer x = lo - 1; x <= hi + 1; ++x) {
              if (x >= 0 && x <= H) candidates.push_back(static_cast<long>(x));
            }
          }
          std::sort(candidates.begin(), candidates.end());
          candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
          for (long x1 : candidates) {
            if (x1 > H) continue;
            if (x1 == 0 && rest_zero) continue;
            ++summary.points;
            RationalVector x(n);
            x[0] = x1;
            for (int i = 1; i < n; ++i) x[i] = rest[i - 1];
            PlaceValue value{f.places.front(), Rational(0)};
            if (exact_mode) {
              value.value = *ea[0] * x1 * x1 + ce;
            } else {
              value.value = a[0] * Interval(Rational(x1 * x1)) + c;
            }
            if (value.certainly_zero()) {
              summary.zeros.push_back(x);
              continue;
            }
            if (value.possibly_zero()) {
              ++summary.possible_zeros;
              continue;
            }
            std::vector<PlaceValue> const values{value};
            note_min(x, content(values), exact_content(values));
          }
          int i = n - 2;
          while (i >= 0 && rest[i] == H) {
            rest[i] = -H;
            --i;
          }
          if (i < 0) break;
          ++rest[i];
        }
        return summary;
      }
    }
  }
  if (bound > options.max_points) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "scan box has up to " + std::to_string(bound) + " points (cap " +
                    std::to_string(options.max_points) + ")");
  }

  std::optional<IntegerEvaluator> fast;
  if (global) fast.emplace(*global, options.height);
  std::vector<std::optional<IntegerEvaluator>> component_fast;
  for (auto const& c : f.components) {
    if (c.exact) {
      component_fast.emplace_back(std::in_place, *c.exact, options.height);
    } else {
      component_fast.emplace_back();
    }
  }

  std::vector<Rational> exact_values;
  std::vector<std::vector<PlaceValue>> tuple_values;
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint64_t, ScanEntry>> kept;

  enumerate_points(ring, n, options.height, options.denom_cap, [&](SPoint const& point) {
    if (point.is_zero()) return;
    ++summary.points;
    RationalVector const x = point.value();
    std::vector<PlaceValue> values;
    Integer const dpow = pow(point.denominator, static_cast<unsigned>(f.degree()));
    if (fast) {
      Rational const q((*fast)(point.numerators), fast->denominator_scale() * dpow);
      for (auto const& v : f.places) values.push_back({v, q});
      exact_values.push_back(q);
    } else {
      for (std::size_t c = 0; c < f.components.size(); ++c) {
        auto const& comp = f.components[c];
        if (component_fast[c]) {
          auto const& ev = *component_fast[c];
          values.push_back({comp.place, Rational(ev(point.numerators), ev.denominator_scale() * dpow)});
        } else {
          auto const one = evaluate(SForm{{comp.place}, {comp}, f.kind, {}, {}}, x, options.padic_digits);
          values.push_back(one.front());
        }
      }
    }
    ScanEntry entry;
    bool all_zero = true;
    bool any_possible = false;
    for (auto const& v : values) {
      all_zero = all_zero && v.certainly_zero();
      any_possible = any_possible || v.possibly_zero();
    }
    if (all_zero) {
      summary.zeros.push_back(x);
    } else if (any_possible) {
      ++summary.possible_zeros;
      entry.possible_zero = true;
    }
    try {
      entry.exact_content = exact_content(values);
      entry.content = content(values);
    } catch (Error const&) {
      entry.precision_loss = true;
      ++summary.precision_flags;
    }
    if (!all_zero && !any_possible && !entry.precision_loss) {
      note_min(x, entry.content, entry.exact_content);
    }
    if (!fast && !all_zero) tuple_values.push_back(values);
    if (options.keep_entries) {
      entry.point = x;
      entry.values = std::move(values);
      kept.emplace_back(order, std::move(entry));
    }
    ++order;
  });

  // Discreteness gap by a sweep in archimedean order: the archimedean
  // difference bounds max_v |u - w|_v from below.
  if (fast) {
    std::sort(exact_values.begin(), exact_values.end());
    exact_values.erase(std::unique(exact_values.begin(), exact_values.end()), exact_values.end());
    std::optional<Rational> best;
    for (std::size_t i = 0; i < exact_values.size(); ++i) {
      for (std::size_t j = i + 1; j < exact_values.size(); ++j) {
        Rational const d = exact_values[j] - exact_values[i];
        if (best && d >= *best) break;
        Rational g = d;
        for (auto const& v : f.places) g = std::max(g, normalized_abs(d, v));
        if (!best || g < *best) best = g;
      }
    }
    if (best) {
      summary.exact_gap = best;
      summary.gap = Interval(*best);
    }
  } else {
    std::sort(tuple_values.begin(), tuple_values.end(), [](auto const& a, auto const& b) {
      return archimedean_key(a).mid() < archimedean_key(b).mid();
    });
    std::optional<Interval> best;
    for (std::size_t i = 0; i < tuple_values.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple_values.size(); ++j) {
        Interval const arch = abs_difference(tuple_values[i][0], tuple_values[j][0]);
        if (best && Rational(arch.mid() - arch.rad()) > best->upper() &&
            archimedean_key(tuple_values[j]).lower() - archimedean_key(tuple_values[i]).upper() >
                best->upper()) {
          break;
        }
        Interval g = arch;
        bool distinct = arch.certainly_positive();
        for (std::size_t v = 1; v < tuple_values[i].size(); ++v) {
          Interval const d = abs_difference(tuple_values[i][v], tuple_values[j][v]);
          distinct = distinct || d.certainly_positive();
          g = max(g, d);
        }
        if (!distinct) continue;  // indistinguishable: treated as one value
        if (!best) {
          best = g;
        } else {
          best = Interval(std::min(best->lower(), g.lower()), std::min(best->upper(), g.upper()));
        }
      }
    }
    summary.gap = best;
    if (best && best->is_point()) summary.exact_gap = best->lower();
  }

  if (options.keep_entries) {
    std::stable_sort(kept.begin(), kept.end(), [](auto const& a, auto const& b) {
      auto const& ea = a.second;
      auto const& eb = b.second;
      if (ea.exact_content && eb.exact_content && *ea.exact_content != *eb.exact_content) {
        return *ea.exact_content < *eb.exact_content;
      }
      if (!(ea.exact_content && eb.exact_content) && ea.content.mid() != eb.content.mid()) {
        return ea.content.mid() < eb.content.mid();
      }
      return a.first < b.first;
    });
    for (auto& [o, e] : kept) summary.entries.push_back(std::move(e));
  }
  return summary;
}

std::optional<RationalVector> rational_zero_search(Form<Rational> const& f, long H) {
  int const n = f.nvars();
  IntegerEvaluator const ev(f, H);
  std::vector<long> x(n);
  for (long h = 1; h <= H; ++h) {
    // x1 from h down to -h; rest ascending; first nonzero coordinate positive.
    for (long x1 = h; x1 >= -h; --x1) {
      std::vector<long> rest(n - 1, -h);
      while (true) {
        x[0] = x1;
        for (int i = 1; i < n; ++i) x[i] = rest[i - 1];
        long height = 0;
        long first = 0;
        for (long v : x) {
          height = std::max(height, std::labs(v));
          if (first == 0) first = v;
        }
        if (height == h && first > 0 && ev(x) == 0) {
          RationalVector out(n);
          for (int i = 0; i < n; ++i) out[i] = x[i];
          return out;
        }
        int i = n - 2;
        while (i >= 0 && rest[i] == h) {
          rest[i] = -h;
          --i;
        }
        if (i < 0) break;
        ++rest[i];
      }
    }
  }
  return std::nullopt;
}

}  // namespace normlab
