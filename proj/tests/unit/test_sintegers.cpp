#include <random>
#include <set>

#include <gtest/gtest.h>

#include "normlab/error.hpp"
#include "normlab/sintegers.hpp"

using namespace normlab;

namespace {

RationalVector vec(std::vector<Rational> const& v) {
  RationalVector x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<int>(i)] = v[i];
  return x;
}

std::vector<Place> places_of(std::string const& text) { return parse_places(text); }

}  // namespace

TEST(Enumerate, GridCounts) {
  int count = 0;
  enumerate_points(SRing{}, 2, 10, 0, [&](SPoint const&) { ++count; });
  EXPECT_EQ(count, 441);
  int nonzero = 0;
  enumerate_points(SRing{}, 2, 1, 0, [&](SPoint const& p) { nonzero += !p.is_zero(); });
  EXPECT_EQ(nonzero, 8);
}

TEST(Enumerate, ReducedDenominators) {
  std::set<Rational> seen;
  int visits = 0;
  enumerate_points(SRing{{2}}, 1, 1, 1, [&](SPoint const& p) {
    seen.insert(p.value()[0]);
    ++visits;
  });
  EXPECT_EQ(visits, 5);
  EXPECT_EQ(seen, (std::set<Rational>{0, 1, -1, Rational(1, 2), Rational(-1, 2)}));
}

TEST(Enumerate, NoDuplicatesWithTwoPrimes) {
  std::set<std::pair<Rational, Rational>> seen;
  int visits = 0;
  enumerate_points(SRing{{2, 3}}, 2, 4, 2, [&](SPoint const& p) {
    auto const x = p.value();
    seen.insert({x[0], x[1]});
    ++visits;
  });
  EXPECT_EQ(static_cast<int>(seen.size()), visits);
}

TEST(Content, Examples) {
  auto const S = places_of("inf,2");
  auto const three = SVector::global(vec({3}), S);
  EXPECT_EQ(*exact_snorm(three), 3);
  EXPECT_EQ(*exact_content(three), 3);
  auto const half = SVector::global(vec({Rational(1, 2)}), S);
  EXPECT_EQ(*exact_snorm(half), 2);
  EXPECT_EQ(*exact_content(half), 1);
  EXPECT_EQ(*exact_content(scale(three, 2)), 3);
}

TEST(Content, UnitsHaveContentOne) {
  SRing const ring{{2, 3, 5}};
  auto const S = ring.places();
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      SUnit const u{a % 2 == 0 ? 1 : -1, {a, b, a - b}};
      EXPECT_EQ(*exact_content(SVector::global(vec({u.value(ring)}), S)), 1);
    }
  }
}

TEST(Content, AtLeastOneForSIntegers) {
  SRing const ring{{2, 3}};
  auto const S = ring.places();
  Rational smallest = 1000;
  enumerate_points(ring, 1, 50, 3, [&](SPoint const& p) {
    if (p.is_zero()) return;
    smallest = std::min(smallest, *exact_content(SVector::global(p.value(), S)));
  });
  EXPECT_EQ(smallest, 1);
}

TEST(Content, UnitInvariance) {
  SRing const ring{{2, 7}};
  auto const S = ring.places();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-99, 99), expo(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto const w = SVector::global(vec({Rational(coord(rng), 7), Rational(coord(rng), 4), coord(rng)}), S);
    if (*exact_content(w) == 0) continue;
    Rational const xi = SUnit{1, {expo(rng), expo(rng)}}.value(ring);
    EXPECT_EQ(*exact_content(scale(w, xi)), *exact_content(w));
  }
}

TEST(UnitBalance, TrivialUnitGroup) {
  auto const w = SVector::global(vec({3, 4}), places_of("inf"));
  auto const r = unit_balance(w, 2, SRing{});
  EXPECT_TRUE(r.xi.exponents.empty());
  EXPECT_EQ(*r.exact_balanced, 4);
  EXPECT_TRUE(r.ratio.contains(1));
}

TEST(UnitBalance, PowerOfTwo) {
  // ||2^e * 32||_S = max(2^{5+e}, 2^{-(5+e)}): optimum e = -5 with norm 1.
  SRing const ring{{2}};
  auto const w = SVector::global(vec({32}), ring.places());
  auto const r = unit_balance(w, 1, ring);
  EXPECT_EQ(r.xi.exponents, std::vector<int>{-5});
  EXPECT_EQ(*r.exact_balanced, 1);
  Rational best = 1000000;
  for (int e = -10; e <= 10; ++e) {
    Rational const v = pow(Rational(2), e) * 32;
    best = std::min(best, std::max(v, normalized_abs(v, Place::prime(2))));
  }
  EXPECT_EQ(best, *r.exact_balanced);
}

TEST(UnitBalance, AlreadyBalanced) {
  SRing const ring{{3}};
  auto const w = SVector::global(vec({1, 2}), ring.places());
  auto const r = unit_balance(w, 1, ring);
  EXPECT_EQ(r.xi.exponents, std::vector<int>{0});
}

TEST(UnitBalance, RatioWithinKappaHat) {
  SRing const ring{{2, 3}};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 5000), expo(-8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    Rational const a = Rational(num(rng)) * pow(Rational(2), expo(rng)) * pow(Rational(3), expo(rng));
    Rational const b = Rational(num(rng)) * pow(Rational(2), expo(rng));
    auto const w = SVector::global(vec({a, b}), ring.places());
    for (int s : {1, 2}) {
      auto const r = unit_balance(w, s, ring);
      EXPECT_FALSE(r.ratio.certainly_less(Interval(1)));
      EXPECT_TRUE(r.ratio.certainly_less(r.kappa_hat) || r.ratio.overlaps(r.kappa_hat));
    }
  }
}

TEST(UnitBalance, ZeroContent) {
  SRing const ring{{2}};
  auto const w = SVector::global(vec({0, 0}), ring.places());
  try {
    unit_balance(w, 1, ring);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroContent);
  }
}

TEST(ValueScan, CubicNormForm) {
  auto const k = make_field(std::vector<long>{-2, 0, 0, 1});
  ScanOptions opts;
  opts.height = 6;
  auto const s = value_scan(norm_sform(k, places_of("inf")), opts);
  EXPECT_TRUE(s.zeros.empty());
  EXPECT_EQ(*s.exact_min_content, 1);
  EXPECT_EQ(*s.exact_gap, 1);
  EXPECT_EQ(s.points, 13u * 13u * 13u - 1u);
}

TEST(ValueScan, FindsZerosOfSplitForm) {
  Form<Rational> f(2, 2);
  f.add_term({2, 0}, 1);
  f.add_term({0, 2}, -1);
  ScanOptions opts;
  opts.height = 5;
  auto const s = value_scan(make_sform(f, places_of("inf")), opts);
  std::set<std::pair<Rational, Rational>> zeros;
  for (auto const& z : s.zeros) zeros.insert({z[0], z[1]});
  EXPECT_TRUE(zeros.count({1, 1}));
  EXPECT_EQ(zeros.size(), 20u);
}

TEST(ValueScan, SAdicContentAtLeastOne) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  ScanOptions opts;
  opts.height = 12;
  opts.denom_cap = 2;
  auto const s = value_scan(norm_sform(k, places_of("inf,7")), opts);
  EXPECT_TRUE(s.zeros.empty());
  EXPECT_GE(*s.exact_min_content, 1);
}

TEST(ValueScan, DeterministicEntries) {
  auto const k = make_field(std::vector<long>{1, 0, 1});
  ScanOptions opts;
  opts.height = 4;
  opts.denom_cap = 1;
  opts.keep_entries = true;
  auto const S = places_of("inf,5");
  auto const a = value_scan(norm_sform(k, S), opts);
  auto const b = value_scan(norm_sform(k, S), opts);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].point, b.entries[i].point);
    EXPECT_EQ(a.entries[i].exact_content, b.entries[i].exact_content);
  }
  for (std::size_t i = 1; i < a.entries.size(); ++i) {
    EXPECT_LE(*a.entries[i - 1].exact_content, *a.entries[i].exact_content);
  }
}

TEST(ValueScan, PrunedMatchesExhaustive) {
  // Golden-ratio form with interval coefficients, both modes on the same box.
  Interval const alpha = (Interval(1) + sqrt(Interval(5))) / Interval(2);
  Form<Interval> f(2, 2);
  f.add_term({2, 0}, Interval(1));
  f.add_term({0, 2}, -(alpha * alpha));
  SForm sf;
  sf.places = places_of("inf");
  FormComponent comp;
  comp.place = Place::archimedean();
  comp.real = f;
  sf.components.push_back(comp);
  ScanOptions opts;
  opts.height = 60;
  auto const full = value_scan(sf, opts);
  opts.max_points = 10;
  auto const pruned = value_scan(sf, opts);
  EXPECT_FALSE(full.pruned);
  EXPECT_TRUE(pruned.pruned);
  EXPECT_TRUE(full.min_content->overlaps(*pruned.min_content));
  EXPECT_TRUE(full.min_content->contains(1));
}

TEST(ValueScan, RefusesHugeBoxes) {
  Form<Rational> f(3, 3);
  f.add_term({1, 1, 1}, 1);
  ScanOptions opts;
  opts.height = 1000;
  try {
    value_scan(make_sform(f, places_of("inf")), opts);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEnumerationTooLarge);
  }
}

TEST(ZeroSearch, Examples) {
  Form<Rational> definite(2, 2);
  definite.add_term({2, 0}, 1);
  definite.add_term({0, 2}, 1);
  EXPECT_FALSE(rational_zero_search(definite, 30));
  Form<Rational> pell(2, 2);
  pell.add_term({2, 0}, 1);
  pell.add_term({0, 2}, -2);
  EXPECT_FALSE(rational_zero_search(pell, 100));
  Form<Rational> product(2, 2);
  product.add_term({1, 1}, 1);
  auto const z = rational_zero_search(product, 5);
  ASSERT_TRUE(z);
  EXPECT_EQ((*z)[0], 1);
  EXPECT_EQ((*z)[1], 0);
  Form<Rational> split(2, 2);
  split.add_term({2, 0}, 1);
  split.add_term({0, 2}, -1);
  auto const w = rational_zero_search(split, 5);
  EXPECT_EQ((*w)[0], 1);
  EXPECT_EQ((*w)[1], -1);
}
