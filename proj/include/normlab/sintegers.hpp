#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "normlab/forms.hpp"

namespace normlab {

// O_S = Z[1/p_1, ..., 1/p_k].
struct SRing {
  std::vector<Integer> primes;  // sorted, distinct

  static SRing from_places(std::vector<Place> const& places);
  std::vector<Place> places() const;
  bool contains(Rational const& x) const;
};

// x = numerators / denominator with denominator = prod p_i^{a_i}.
struct SPoint {
  std::vector<long> numerators;
  Integer denominator;

  RationalVector value() const;
  bool is_zero() const;
};

// Every x in O_S^n whose numerators over d = prod p_i^{a_i} (a_i <= D, the
// representation reduced at each p_i) have |.| <= H; zero included once.
// Order: exponent tuples (a_1..a_k) lexicographically, then numerators
// lexicographically from -H to H.
void enumerate_points(SRing const& ring, int n, long H, int D,
                      std::function<void(SPoint const&)> const& visit);
std::uint64_t count_points(SRing const& ring, int n, long H, int D);

using LocalScalar = std::variant<Rational, Interval, PAdic>;

// w = (w_v)_{v in S}.
struct SVector {
  std::vector<Place> places;
  std::vector<std::vector<LocalScalar>> components;

  // Diagonal image of a global point.
  static SVector global(RationalVector const& x, std::vector<Place> const& places);
  int dimension() const;
};

// ||w_v||_v: sup over coordinates of |.|_v.
Interval place_norm(SVector const& w, std::size_t place_index);
std::optional<Rational> exact_place_norm(SVector const& w, std::size_t place_index);
Interval snorm(SVector const& w);
Interval content(SVector const& w);
std::optional<Rational> exact_snorm(SVector const& w);
std::optional<Rational> exact_content(SVector const& w);

// cont(a) = prod_v |a_v|_v for a scalar tuple, e.g. a form value.
Interval content(std::vector<PlaceValue> const& values);
std::optional<Rational> exact_content(std::vector<PlaceValue> const& values);

// xi = sign * prod p_i^{e_i}
struct SUnit {
  int sign = 1;
  std::vector<int> exponents;

  Rational value(SRing const& ring) const;
  SUnit power(int s) const;
};

// w scaled by a rational scalar at every place.
SVector scale(SVector const& w, Rational const& xi);

struct UnitBalanceResult {
  SUnit xi;
  Interval balanced_norm;                  // ||xi^s w||_S
  std::optional<Rational> exact_balanced;  // when w is exact
  Interval target;                         // cont(w)^{1/|S|}
  Interval ratio;                          // balanced_norm / target, >= 1
  Interval kappa_hat;                      // certified bound on ratio
  int window = 0;                          // search half-width used
};

struct UnitBalanceOptions {
  int window = 24;               // half-width E of the exponent box
  std::uint64_t max_box = 200000;  // the window shrinks to keep the box this small
};

// Minimizes ||xi^s w||_S over a box of exponents centred at the rounded
// continuous optimum. Errors: ZERO_CONTENT.
UnitBalanceResult unit_balance(SVector const& w, int s, SRing const& ring,
                               UnitBalanceOptions const& options = {});

// exp of the covering bound (s/2) sum log p_i of the unit lattice.
Interval unit_kappa_hat(SRing const& ring, int s);

struct ScanOptions {
  long height = 10;
  int denom_cap = 0;
  int padic_digits = kDefaultPadicDigits;
  bool keep_entries = false;
  // Exhaustive scans refuse boxes larger than this (ENUMERATION_TOO_LARGE);
  // diagonal quadratics over S = {inf} switch to the pruned exact mode.
  std::uint64_t max_points = 20000000;
  bool allow_pruned = true;
};

struct ScanEntry {
  RationalVector point;
  std::vector<PlaceValue> values;
  Interval content;
  std::optional<Rational> exact_content;
  bool possible_zero = false;
  bool precision_loss = false;
};

struct ScanSummary {
  long height = 0;
  int denom_cap = 0;
  std::vector<Place> places;
  bool pruned = false;
  std::uint64_t points = 0;
  // Smallest content over points with certified nonzero value.
  std::optional<Interval> min_content;
  std::optional<Rational> exact_min_content;
  std::optional<RationalVector> min_point;
  // min over distinct values u != w of max_v |u - w|_v; absent in pruned mode.
  std::optional<Interval> gap;
  std::optional<Rational> exact_gap;
  std::vector<RationalVector> zeros;  // certified nontrivial zeros
  std::uint64_t possible_zeros = 0;
  std::uint64_t precision_flags = 0;
  std::vector<ScanEntry> entries;  // sorted by content, then enumeration order
};

ScanSummary value_scan(SForm const& f, ScanOptions const& options);

// First nonzero rational zero of height <= H in shell order: height 1, 2, ...;
// within a shell x1 descending, then the rest ascending; first nonzero
// coordinate positive. Nothing means NONE_FOUND(H).
std::optional<RationalVector> rational_zero_search(Form<Rational> const& f, long H);

}  // namespace normlab
