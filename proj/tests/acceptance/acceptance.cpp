// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "normlab/dynamics.hpp"
#include "normlab/error.hpp"
#include "normlab/experiments.hpp"
#include "normlab/forms.hpp"
#include "normlab/linalg.hpp"
#include "normlab/serialize.hpp"
#include "normlab/sintegers.hpp"

using namespace normlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RationalVector rvec(std::vector<Rational> const& v) {
  RationalVector x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<int>(i)] = v[i];
  return x;
}

bool within(Interval const& ratio, Interval const& k) {
  return ratio.lower() * k.upper() >= 1 && ratio.upper() <= k.upper();
}

std::string num(Interval const& x) { return to_decimal_ball(x, 12).mid; }

// "(a,b,...)" from a JSON rational vector, dropping unit denominators.
std::string pt(Json const& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string c = p[i].get<std::string>();
    if (c.size() > 2 && c.compare(c.size() - 2, 2, "/1") == 0) c.resize(c.size() - 2);
    out += (i ? "," : "") + c;
  }
  return out + ")";
}

Outcome cubic_norm_form() {
  auto const f = norm_form(*make_field(std::vector<long>{-2, 0, 0, 1}));
  Form<Rational> expected(3, 3);
  expected.add_term({3, 0, 0}, 1);
  expected.add_term({0, 3, 0}, 2);
  expected.add_term({0, 0, 3}, 4);
  expected.add_term({1, 1, 1}, -6);
  return {f.terms() == expected.terms(), to_string(f)};
}

Outcome cm_identity() {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const f = quasi_norm_form(k, parse_places("inf"));
  auto const& c = f.components.at(0);
  if (!c.exact || !c.real) return {false, "no exact archimedean component"};
  // t = sqrt2 + i has minimal polynomial t^4 - 2t^2 + 9; columns express
  // 1, sqrt2, i, i sqrt2 in the basis 1, t, t^2, t^3.
  auto const cm = make_field(std::vector<long>{9, 0, -2, 0, 1});
  RationalMatrix b(4, 4);
  b << 1, 0, 0, Rational(-1, 2), 0, Rational(5, 6), Rational(1, 6), 0, 0, 0, 0, Rational(1, 2), 0, Rational(-1, 6),
      Rational(1, 6), 0;
  auto const target = apply_gl(inverse(b), norm_form(*cm));
  bool ok = target.terms() == c.exact->terms();
  Rational const tol = pow(Rational(2), -20);
  Rational worst = 0;
  for (auto const& [m, x] : c.real->terms()) {
    auto const it = target.terms().find(m);
    Rational const want = it == target.terms().end() ? Rational(0) : it->second;
    ok = ok && x.contains(want) && x.rad() < tol && denominator(want) == 1;
    worst = std::max(worst, x.rad());
  }
  for (auto const& [m, x] : target.terms()) ok = ok && c.real->terms().count(m) == 1;
  std::ostringstream s;
  s << to_string(*c.exact) << "; max radius " << decimal_string(worst, 3);
  return {ok, s.str()};
}

Json scan_output(std::vector<long> const& coeffs, std::string const& places, long H, int D) {
  ScanOptions opts;
  opts.height = H;
  opts.denom_cap = D;
  auto const s = value_scan(norm_sform(make_field(coeffs), parse_places(places)), opts);
  return to_json(s);
}

// One scan per field; each must finish within the per-field limit.
Json discreteness_output(std::vector<double>* seconds = nullptr) {
  Json out = Json::array();
  for (auto const& c : {std::vector<long>{-2, 0, 1}, std::vector<long>{1, 0, 1}, std::vector<long>{-2, 0, 0, 1}}) {
    auto const start = std::chrono::steady_clock::now();
    out.push_back(scan_output(c, "inf", 50, 0));
    if (seconds) {
      seconds->push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
  }
  return out;
}

Outcome discreteness(Json const& out, std::vector<double> const& seconds) {
  Outcome r{true, ""};
  char const* names[] = {"Q(sqrt2)", "Q(i)", "Q(cbrt2)"};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto const& s = out[i];
    bool const ok = s["zeros"].empty() && s["gap"].is_string() && rational_from_json(s["gap"]) >= 1 &&
                    s["possible_zeros"] == 0 && seconds[i] < 30;
    r.pass = r.pass && ok;
    std::ostringstream t;
    t << (i ? "; " : "") << names[i] << " gap " << s["gap"].get<std::string>() << " zeros " << s["zeros"].size()
      << " points " << s["points"].dump() << " in " << static_cast<int>(seconds[i] * 100) / 100.0 << " s";
    r.detail += t.str();
  }
  return r;
}

Json content_output() { return scan_output({-2, 0, 1}, "inf,7", 30, 2); }

Outcome content_bound(Json const& s) {
  bool const ok = s["zeros"].empty() && s["precision_flags"] == 0 && s["min_nonzero_content"].is_string() &&
                  rational_from_json(s["min_nonzero_content"]) >= 1;
  return {ok, "points " + s["points"].dump() + ", min content " + s["min_nonzero_content"].dump()};
}

Json oppenheim_json(OppenheimRow const& r) {
  Json j;
  j["height"] = r.height;
  j["min_abs"] = to_json(r.min_abs);
  j["point"] = to_json(r.point);
  j["min_abs_last_nonzero"] = to_json(r.min_abs_last_nonzero);
  j["point_last_nonzero"] = to_json(r.point_last_nonzero);
  j["evaluated"] = r.evaluated;
  j["zeros"] = r.zeros;
  return j;
}

Json separation_output() { return oppenheim_json(oppenheim_min(parse_alpha("golden"), 2, 10000)); }

Outcome separation(Json const& j) {
  Interval const m = interval_from_json(j["min_abs"]);
  Interval const expected = (Interval(5) - interval_sqrt(5)) / Interval(2);
  Rational const tol(1, 1000000000);
  bool const value_ok = m.upper() <= expected.upper() + tol && m.lower() >= expected.lower() - tol;
  auto const p = j["point"];
  bool const point_ok = p.size() == 2 && ((p[0] == "2/1" && p[1] == "1/1") || (p[0] == "-2/1" && p[1] == "-1/1"));
  std::ostringstream s;
  s << "min " << num(m) << " at " << pt(p) << ", expected " << num(expected) << " at (2,1); with y != 0: "
    << num(interval_from_json(j["min_abs_last_nonzero"])) << " at " << pt(j["point_last_nonzero"]);
  return {value_ok && point_ok, s.str()};
}

Json contrast_output() {
  auto const alpha = parse_alpha("golden");
  return Json::array({oppenheim_json(oppenheim_min(alpha, 3, 20)), oppenheim_json(oppenheim_min(alpha, 3, 200))});
}

Outcome contrast(Json const& j) {
  Interval const small = interval_from_json(j[0]["min_abs"]);
  Interval const large = interval_from_json(j[1]["min_abs"]);
  return {large.certainly_less(small), "H=20: " + num(small) + " at " + pt(j[0]["point"]) + "; H=200: " +
                                           num(large) + " at " + pt(j[1]["point"])};
}

Outcome unit_balancing(std::uint64_t seed) {
  SRing const ring{{2, 3}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n(1, 100000), e(-12, 12), sign(0, 1), len(1, 3);
  Interval const kappa = unit_kappa_hat(ring, 1);
  bool ok = kappa.upper_double() < INFINITY;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v;
    for (int i = len(rng); i >= 0; --i) {
      Rational x = Rational(n(rng)) * pow(Rational(2), e(rng)) * pow(Rational(3), e(rng));
      v.push_back(sign(rng) ? -x : x);
    }
    auto const r = unit_balance(SVector::global(rvec(v), ring.places()), 1, ring);
    ok = ok && within(r.ratio, r.kappa_hat) && identical(r.kappa_hat, kappa);
    worst = std::max(worst, r.ratio.upper_double());
  }
  std::ostringstream s;
  s << "kappa_hat " << num(kappa) << ", worst ratio " << worst;
  return {ok, s.str()};
}

Outcome split_balancing(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-10000, 10000), den(1, 50);
  bool ok = true;
  Rational const tol = pow(Rational(2), -20);
  std::ostringstream s;
  for (auto const& coeffs : {std::vector<long>{-2, 0, 1}, std::vector<long>{-2, 0, 0, 1}}) {
    auto const st = split_structure(*make_field(coeffs));
    double worst = 0;
    Rational residual = 0;
    for (int trial = 0; trial < 200;) {
      RationalVector x(st.dimension());
      for (int i = 0; i < x.size(); ++i) x[i] = Rational(coord(rng), den(rng));
      if (x.isZero()) continue;
      auto const r = split_balance(st, to_intervals(x));
      ok = ok && within(r.ratio, r.k_hat) && r.t.determinant_one(st) && r.residual.upper() < tol;
      worst = std::max(worst, r.ratio.upper_double());
      residual = std::max(residual, r.residual.upper());
      ++trial;
      if (trial == 200) s << (coeffs.size() == 3 ? "" : "; ") << "k_hat " << num(r.k_hat);
    }
    s << " worst ratio " << worst << " max residual " << decimal_string(residual, 3);
  }
  return {ok, s.str()};
}

Outcome reduction(std::uint64_t seed) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const S = parse_places("inf,7");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n(-2000, 2000), d(0, 3);
  bool ok = true;
  double worst = 0;
  Interval bound;
  for (int trial = 0; trial < 100;) {
    auto const w = rvec({Rational(Integer(n(rng)), pow(Integer(7), static_cast<unsigned>(d(rng)))),
                         Rational(Integer(n(rng)), pow(Integer(7), static_cast<unsigned>(d(rng))))});
    if (w.isZero()) continue;
    auto const r = balanced_reduce(k, S, w);
    ok = ok && within(r.ratio, r.bound);
    worst = std::max({worst, r.ratio.upper_double(), 1 / r.ratio.lower_double()});
    bound = r.bound;
    ++trial;
  }
  std::ostringstream s;
  s << "bound " << num(bound) << ", worst two-sided ratio " << worst;
  return {ok, s.str()};
}

Outcome orbits() {
  auto const st = split_structure(*make_field(std::vector<long>{-2, 0, 1}));
  TraceOptions opts;
  opts.t_min = -10;
  opts.t_max = 10;
  opts.step = Rational(1, 10);
  auto const norm_trace = orbit_trace(structure_lattice(st), {1, -1}, opts);
  IntervalMatrix id = IntervalMatrix::Identity(2, 2);
  auto const z_trace = orbit_trace(make_lattice(id), {1, -1}, opts);
  bool const a = norm_trace.verdict == Verdict::kBoundedBelow && norm_trace.level &&
                 norm_trace.level->lower() > Rational(3, 10);
  bool const b = z_trace.verdict == Verdict::kDecays && z_trace.level &&
                 z_trace.level->upper() <= exp(Interval(-9)).lower();
  std::ostringstream s;
  s << "Q(sqrt2): " << to_string(norm_trace.verdict) << " c = " << (norm_trace.level ? num(*norm_trace.level) : "-")
    << "; Z^2: " << to_string(z_trace.verdict) << " witness " << (z_trace.level ? num(*z_trace.level) : "-");
  return {a && b, s.str()};
}

Outcome shortest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6), frac(-6, 6);
  int checked = 0;
  int agreed = 0;
  while (checked < 50) {
    int const n = 2 + checked % 2;
    IntervalMatrix b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b(i, j) = Interval(Rational(entry(rng)) + Rational(frac(rng), 11));
    }
    LatticeBasis l;
    try {
      l = make_lattice(b);
    } catch (Error const&) {
      continue;
    }
    auto const fast = shortest_vector(l);
    long const box = 12;
    if (std::any_of(fast.coefficients.begin(), fast.coefficients.end(), [&](long v) { return std::labs(v) > box; }))
      continue;
    auto const slow = brute_force_shortest(l, box);
    ++checked;
    if (identical(fast.norm, slow.norm) && fast.coefficients == slow.coefficients) ++agreed;
  }
  return {agreed == checked, std::to_string(agreed) + "/" + std::to_string(checked) + " lattices agree"};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t const seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  int failures = 0;

  auto run = [&](int id, double limit, std::function<Outcome()> const& fn) {
    auto const start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = fn();
    } catch (std::exception const& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const pass = r.pass && secs < limit;
    failures += pass ? 0 : 1;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s, limit " << limit << " s)  " << r.detail << std::endl;
    std::cout.unsetf(std::ios::fixed);
    std::cout.precision(6);
  };

  std::string outputs[4];
  run(1, 1, cubic_norm_form);
  run(2, 5, cm_identity);
  run(3, 90, [&] {
    std::vector<double> seconds;
    Json const j = discreteness_output(&seconds);
    outputs[0] = j.dump();
    return discreteness(j, seconds);
  });
  run(4, 60, [&] {
    Json const j = content_output();
    outputs[1] = j.dump();
    return content_bound(j);
  });
  run(5, 60, [&] {
    Json const j = separation_output();
    outputs[2] = j.dump();
    return separation(j);
  });
  run(6, 60, [&] {
    Json const j = contrast_output();
    outputs[3] = j.dump();
    return contrast(j);
  });
  run(7, 10, [&] { return unit_balancing(seed); });
  run(8, 10, [&] { return split_balancing(seed); });
  run(9, 30, [&] { return reduction(seed); });
  run(10, 120, orbits);
  run(11, 30, [&] { return shortest(seed); });
  run(12, 600, [&] {
    std::string const again[4] = {discreteness_output().dump(), content_output().dump(),
                                  separation_output().dump(), contrast_output().dump()};
    int same = 0;
    for (int i = 0; i < 4; ++i) same += outputs[i] == again[i] && !outputs[i].empty();
    return Outcome{same == 4, std::to_string(same) + "/4 outputs byte-identical"};
  });
  return failures == 0 ? 0 : 1;
}
