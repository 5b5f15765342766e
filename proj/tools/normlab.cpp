// normlab: build S-(quasi-)norm forms, scan their values, trace torus orbits.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "normlab/dynamics.hpp"
#include "normlab/error.hpp"
#include "normlab/experiments.hpp"
#include "normlab/serialize.hpp"

using namespace normlab;

namespace {

constexpr char const* kVersion = "normlab 1.0.0";

struct Global {
  std::uint64_t seed = 0;
  int precision_bits = 128;
  int padic_digits = kDefaultPadicDigits;
};

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

// "1,0,-2" is t^2 - 2: leading coefficient first.
Field field_from_flag(std::string const& text) {
  std::vector<Integer> coeffs;
  for (auto const& c : split(text, ',')) {
    Rational const q = parse_rational(c);
    if (denominator(q) != 1) throw Error(ErrorCode::kParseError, "field coefficients must be integers");
    coeffs.push_back(numerator(q));
  }
  if (coeffs.size() < 2) throw Error(ErrorCode::kParseError, "field needs degree >= 1");
  std::reverse(coeffs.begin(), coeffs.end());
  return make_field(coeffs);
}

RationalVector vector_from_flag(std::string const& text) {
  auto const parts = split(text, ',');
  RationalVector x(static_cast<int>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) x[static_cast<int>(i)] = parse_decimal(parts[i]);
  return x;
}

void write_text(std::string const& path, std::string const& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

Json read_json(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

// Canonical "key=value" lines, hashed into every output.
struct Config {
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;

  Config& add(std::string key, std::string value) {
    entries.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string canonical() const {
    auto sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    std::string s = command + "\n";
    for (auto const& [k, v] : sorted) s += k + "=" + v + "\n";
    return s;
  }
  std::string hash() const { return config_hash(canonical()); }
  Json meta() const {
    Json caps = Json::object();
    for (auto const& [k, v] : entries) caps[k] = v;
    return Json{{"tool", kVersion}, {"command", command}, {"config_hash", hash()}, {"config", caps}};
  }
  std::string csv_header() const {
    std::string s = "# " + std::string(kVersion) + " " + command + " config_hash=" + hash() + "\n#";
    for (auto const& [k, v] : entries) s += " " + k + "=" + v;
    return s + "\n";
  }
};

Config base_config(std::string command, Global const& g) {
  Config c{std::move(command), {}};
  c.add("precision_bits", std::to_string(g.precision_bits)).add("padic_digits", std::to_string(g.padic_digits));
  return c;
}

// ---- build-form ----

struct BuildOptions {
  std::string field;
  std::string kind = "norm";
  std::string places = "inf";
  std::vector<std::string> q;
  std::string terms;
  std::string preset;
  std::string out;
};

Form<Rational> parse_terms(std::string const& text) {
  // "2,0:1;0,2:-1"
  std::vector<std::pair<Monomial, Rational>> terms;
  for (auto const& t : split(text, ';')) {
    auto const colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kParseError, "term must be exponents:coefficient");
    Monomial m;
    for (auto const& e : split(t.substr(0, colon), ',')) m.push_back(std::stoi(e));
    terms.emplace_back(m, parse_decimal(t.substr(colon + 1)));
  }
  if (terms.empty()) throw Error(ErrorCode::kParseError, "no terms given");
  int degree = 0;
  for (int e : terms.front().first) degree += e;
  Form<Rational> f(static_cast<int>(terms.front().first.size()), degree);
  for (auto const& [m, c] : terms) f.add_term(m, c);
  return f;
}

std::vector<QuasiChoice> parse_q(std::vector<std::string> const& specs) {
  std::vector<QuasiChoice> out;
  for (auto const& s : specs) {
    auto const eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "q must be place=a,b,c[;a,b,c...]");
    QuasiChoice c{parse_place(s.substr(0, eq)), {}};
    for (auto const& q : split(s.substr(eq + 1), ';')) c.q.push_back(parse_binary_quadratic(q));
    out.push_back(c);
  }
  return out;
}

SForm golden_form() {
  Interval const alpha = parse_alpha("golden").value();
  Form<Interval> f(2, 2);
  f.add_term({2, 0}, Interval(1));
  f.add_term({0, 2}, -(alpha * alpha));
  SForm s;
  s.places = {Place::archimedean()};
  FormComponent c;
  c.place = Place::archimedean();
  c.real = f;
  s.components.push_back(c);
  return s;
}

int run_build(BuildOptions o, Global const& g) {
  if (!o.preset.empty()) {
    if (o.preset == "sqrt2") {
      o.field = "1,0,-2";
      o.kind = "norm";
    } else if (o.preset == "cbrt2") {
      o.field = "1,0,0,-2";
      o.kind = "norm";
    } else if (o.preset == "gaussian") {
      o.field = "1,0,1";
      o.kind = "norm";
    } else if (o.preset == "cm") {
      o.field = "1,0,-2";
      o.kind = "quasi";
    } else if (o.preset == "golden") {
      o.kind = "golden";
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown preset '" + o.preset + "'");
    }
  }
  auto const places = parse_places(o.places);
  SForm f;
  if (o.kind == "norm") {
    f = norm_sform(field_from_flag(o.field), places);
  } else if (o.kind == "quasi") {
    f = quasi_norm_form(field_from_flag(o.field), places, parse_q(o.q), {g.precision_bits, g.padic_digits});
  } else if (o.kind == "given") {
    f = make_sform(parse_terms(o.terms), places);
  } else if (o.kind == "golden") {
    f = golden_form();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "kind must be norm, quasi or given");
  }
  Config c = base_config("build-form", g);
  c.add("field", o.field).add("kind", o.kind).add("places", o.places).add("terms", o.terms).add("preset", o.preset);
  std::string qs;
  for (auto const& q : o.q) qs += q + " ";
  c.add("q", qs);
  Json j = to_json(f);
  j["meta"] = c.meta();
  write_text(o.out, j.dump(2) + "\n");
  return 0;
}

// ---- scan ----

struct ScanFlags {
  std::string form;
  long height = 10;
  int denom_cap = 0;
  std::string out;
  std::string summary;
  std::uint64_t max_points = 20000000;
};

int run_scan(ScanFlags const& o, Global const& g) {
  SForm const f = sform_from_json(read_json(o.form));
  ScanOptions opts;
  opts.height = o.height;
  opts.denom_cap = o.denom_cap;
  opts.padic_digits = g.padic_digits;
  opts.keep_entries = !o.out.empty();
  opts.max_points = o.max_points;
  auto const s = value_scan(f, opts);
  Config c = base_config("scan", g);
  c.add("form_hash", config_hash(to_json(f).dump()))
      .add("height", std::to_string(o.height))
      .add("denom_cap", std::to_string(o.denom_cap))
      .add("max_points", std::to_string(o.max_points));
  if (!o.out.empty()) write_text(o.out, c.csv_header() + scan_csv(s));
  Json j{{"meta", c.meta()}, {"scan", to_json(s)}};
  write_text(o.summary, j.dump(2) + "\n");
  return 0;
}

// ---- orbit-trace ----

struct TraceFlags {
  std::string form;
  std::string lattice = "form";
  int dim = 2;
  std::string t_min = "-10";
  std::string t_max = "10";
  std::string step = "0.1";
  std::string threshold = "0.001";
  std::string out;
  std::string summary;
};

TraceOptions trace_options(TraceFlags const& o) {
  TraceOptions t;
  t.t_min = parse_decimal(o.t_min);
  t.t_max = parse_decimal(o.t_max);
  t.step = parse_decimal(o.step);
  t.threshold = parse_decimal(o.threshold);
  return t;
}

void add_trace_config(Config& c, TraceFlags const& o) {
  c.add("t_min", o.t_min).add("t_max", o.t_max).add("step", o.step).add("threshold", o.threshold);
}

int run_trace(TraceFlags const& o, Global const& g) {
  LatticeBasis lattice;
  std::vector<Rational> flow;
  Config c = base_config("orbit-trace", g);
  if (o.lattice == "standard") {
    lattice = make_lattice(IntervalMatrix::Identity(o.dim, o.dim));
    flow.assign(o.dim, Rational(0));
    flow[0] = 1;
    flow[1] = -1;
    c.add("lattice", "standard").add("dim", std::to_string(o.dim));
  } else {
    SForm const f = sform_from_json(read_json(o.form));
    auto const st = structure_for(f, g.precision_bits);
    if (!st) throw Error(ErrorCode::kInvalidArgument, "no split torus structure is known for this form");
    lattice = structure_lattice(*st);
    flow = default_flow(*st);
    c.add("lattice", "form").add("form_hash", config_hash(to_json(f).dump()));
  }
  add_trace_config(c, o);
  auto const trace = orbit_trace(lattice, flow, trace_options(o));
  if (!o.out.empty()) write_text(o.out, c.csv_header() + trace_csv(trace));
  Json flow_json = Json::array();
  for (auto const& u : flow) flow_json.push_back(to_json(u));
  Json j{{"meta", c.meta()}, {"flow", flow_json}, {"trace", to_json(trace)}};
  write_text(o.summary, j.dump(2) + "\n");
  return 0;
}

// ---- report ----

struct ReportFlags {
  std::string form;
  long height = 10;
  int denom_cap = 0;
  long zero_height = 20;
  TraceFlags trace;
  bool record_timing = false;
  std::string out;
};

int run_report(ReportFlags const& o, Global const& g) {
  auto const start = std::chrono::steady_clock::now();
  SForm const f = sform_from_json(read_json(o.form));
  ReportOptions opts;
  opts.scan.height = o.height;
  opts.scan.denom_cap = o.denom_cap;
  opts.scan.padic_digits = g.padic_digits;
  opts.zero_height = o.zero_height;
  opts.trace = trace_options(o.trace);
  opts.precision_bits = g.precision_bits;
  auto const report = compactness_report(f, opts);
  Config c = base_config("report", g);
  c.add("form_hash", config_hash(to_json(f).dump()))
      .add("height", std::to_string(o.height))
      .add("denom_cap", std::to_string(o.denom_cap))
      .add("zero_height", std::to_string(o.zero_height));
  add_trace_config(c, o.trace);
  Json inputs{{"kind", to_string(f.kind)}, {"nvars", f.nvars()}, {"degree", f.degree()}};
  Json places = Json::array();
  for (auto const& v : f.places) places.push_back(to_string(v));
  inputs["places"] = places;
  Json j{{"meta", c.meta()}, {"inputs", inputs}};
  Json const body = to_json(report);
  for (auto const& [k, v] : body.items()) j[k] = v;
  j["claims_hold_within"] = Json{{"height", o.height}, {"denom_cap", o.denom_cap}, {"zero_height", o.zero_height},
                                 {"t_window", o.trace.t_min + ".." + o.trace.t_max}};
  if (o.record_timing) {
    j["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  write_text(o.out, j.dump(2) + "\n");
  return 0;
}

// ---- oppenheim ----

struct OppenheimFlags {
  std::string alpha = "golden";
  int vars = 2;
  std::string heights = "100,1000,10000";
  std::string out;
};

int run_oppenheim(OppenheimFlags const& o, Global const& g) {
  auto const alpha = parse_alpha(o.alpha);
  Config c = base_config("oppenheim", g);
  c.add("alpha", o.alpha).add("vars", std::to_string(o.vars)).add("heights", o.heights);
  std::string text = c.csv_header();
  text += "# q = " + std::string(o.vars == 2 ? "x^2 - alpha^2 y^2" : "x^2 + y^2 - alpha^2 z^2") +
          ", alpha = " + alpha.describe() + "\n";
  text += "height,min_abs_mid,min_abs_rad,point,min_abs_last_nonzero_mid,min_abs_last_nonzero_rad,point_last_nonzero,"
          "evaluated,zeros\n";
  for (auto const& h : split(o.heights, ',')) {
    long const H = std::stol(h);
    auto const row = oppenheim_min(alpha, o.vars, H);
    auto const a = to_decimal_ball(row.min_abs);
    auto const b = to_decimal_ball(row.min_abs_last_nonzero);
    text += std::to_string(H) + "," + a.mid + "," + a.rad + "," + point_string(row.point) + "," + b.mid + "," +
            b.rad + "," + point_string(row.point_last_nonzero) + "," + std::to_string(row.evaluated) + "," +
            std::to_string(row.zeros) + "\n";
  }
  write_text(o.out, text);
  return 0;
}

// ---- balance ----

struct BalanceFlags {
  std::string mode = "reduce";
  std::string field = "1,0,-2";
  std::string places = "inf";
  std::string point;
  std::string vector;
  int s = 1;
  int random = 0;
  long height = 100;
  int denom_cap = 0;
  std::string out;
};

int run_balance(BalanceFlags const& o, Global const& g) {
  Config c = base_config("balance", g);
  c.add("mode", o.mode).add("places", o.places).add("seed", std::to_string(g.seed));
  auto const places = parse_places(o.places);
  SRing const ring = SRing::from_places(places);
  Json j;
  if (o.mode == "unit") {
    c.add("vector", o.vector).add("s", std::to_string(o.s));
    auto const r = unit_balance(SVector::global(vector_from_flag(o.vector), places), o.s, ring);
    j = Json{{"meta", c.meta()}, {"unit_balance", to_json(r)}};
  } else if (o.mode == "split") {
    c.add("field", o.field).add("point", o.point);
    auto const st = split_structure(*field_from_flag(o.field), g.precision_bits);
    j = Json{{"meta", c.meta()}, {"split_balance", to_json(split_balance(st, to_intervals(vector_from_flag(o.point))))}};
  } else if (o.mode == "reduce") {
    c.add("field", o.field).add("point", o.point).add("random", std::to_string(o.random));
    c.add("height", std::to_string(o.height)).add("denom_cap", std::to_string(o.denom_cap));
    Field const k = field_from_flag(o.field);
    std::vector<RationalVector> points;
    if (!o.point.empty()) points.push_back(vector_from_flag(o.point));
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<long> num(-o.height, o.height);
    std::uniform_int_distribution<int> expo(0, o.denom_cap);
    while (static_cast<int>(points.size()) < o.random + (o.point.empty() ? 0 : 1)) {
      Integer d = 1;
      for (auto const& p : ring.primes) d *= pow(p, static_cast<unsigned>(expo(rng)));
      RationalVector x(k->degree);
      for (int i = 0; i < k->degree; ++i) x[i] = Rational(Integer(num(rng)), d);
      if (!x.isZero()) points.push_back(x);
    }
    Json results = Json::array();
    bool all_within = true;
    for (auto const& x : points) {
      auto const r = balanced_reduce(k, places, x, g.precision_bits);
      bool const within = r.ratio.upper() <= r.bound.upper() && r.ratio.lower() * r.bound.upper() >= 1;
      all_within = all_within && within;
      Json item = to_json(r);
      item["point"] = to_json(x);
      item["within_bound"] = within;
      results.push_back(item);
    }
    j = Json{{"meta", c.meta()}, {"results", results}, {"all_within_bound", all_within}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "mode must be unit, split or reduce");
  }
  write_text(o.out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norm forms, quasi-norm forms and their S-integer values"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value config file (sections per subcommand)");
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--precision-bits", g.precision_bits, "interval precision in bits")
      ->check(CLI::Range(16, 4096))
      ->capture_default_str();
  app.add_option("--padic-digits", g.padic_digits, "p-adic precision N")->check(CLI::Range(2, 4096))->capture_default_str();

  BuildOptions build;
  auto* b = app.add_subcommand("build-form", "construct a norm, quasi-norm or given S-form");
  b->add_option("--field", build.field, "defining polynomial, leading coefficient first, e.g. 1,0,-2");
  b->add_option("--kind", build.kind, "norm | quasi | given")->check(CLI::IsMember({"norm", "quasi", "given"}));
  b->add_option("--places", build.places, "e.g. inf,5")->capture_default_str();
  b->add_option("--q", build.q, "quasi: place=a,b,c[;a,b,c...] overriding the default anisotropic q");
  b->add_option("--terms", build.terms, "given: exponents:coefficient;... e.g. 2,0:1;0,2:-1");
  b->add_option("--preset", build.preset, "sqrt2 | cbrt2 | gaussian | golden | cm")
      ->check(CLI::IsMember({"sqrt2", "cbrt2", "gaussian", "golden", "cm"}));
  b->add_option("--out", build.out, "output JSON (stdout if omitted)");

  ScanFlags scan;
  auto* s = app.add_subcommand("scan", "value scan over an S-integer box");
  s->add_option("--form", scan.form, "form JSON")->required();
  s->add_option("--height", scan.height, "numerator bound H")->check(CLI::Range(1L, 1000000000L))->capture_default_str();
  s->add_option("--denom-cap", scan.denom_cap, "denominator exponent cap D")->check(CLI::Range(0, 64))->capture_default_str();
  s->add_option("--max-points", scan.max_points, "refuse larger exhaustive boxes")->capture_default_str();
  s->add_option("--out", scan.out, "spectrum CSV (point,value_per_place,content,flags)");
  s->add_option("--summary", scan.summary, "summary JSON (stdout if omitted)");

  TraceFlags trace;
  auto const add_trace_flags = [](CLI::App* cmd, TraceFlags& t) {
    cmd->add_option("--t-min", t.t_min)->capture_default_str();
    cmd->add_option("--t-max", t.t_max)->capture_default_str();
    cmd->add_option("--step", t.step)->capture_default_str();
    cmd->add_option("--threshold", t.threshold, "DECAYS below this norm")->capture_default_str();
  };
  auto* t = app.add_subcommand("orbit-trace", "shortest vectors along a one-parameter torus flow");
  t->add_option("--form", trace.form, "form JSON");
  t->add_option("--lattice", trace.lattice, "form | standard")->check(CLI::IsMember({"form", "standard"}));
  t->add_option("--dim", trace.dim, "dimension of the standard lattice")->check(CLI::Range(2, 4));
  add_trace_flags(t, trace);
  t->add_option("--out", trace.out, "trace CSV (t,lower,upper,witness)");
  t->add_option("--summary", trace.summary, "summary JSON (stdout if omitted)");

  ReportFlags report;
  auto* r = app.add_subcommand("report", "scan, zero search and orbit trace in one verdict");
  r->add_option("--form", report.form, "form JSON")->required();
  r->add_option("--height", report.height)->check(CLI::Range(1L, 1000000000L))->capture_default_str();
  r->add_option("--denom-cap", report.denom_cap)->check(CLI::Range(0, 64))->capture_default_str();
  r->add_option("--zero-height", report.zero_height)->check(CLI::Range(1L, 100000L))->capture_default_str();
  add_trace_flags(r, report.trace);
  r->add_flag("--record-timing", report.record_timing, "include wall time (makes output nondeterministic)");
  r->add_option("--out", report.out, "verdict JSON (stdout if omitted)");

  OppenheimFlags opp;
  auto* o = app.add_subcommand("oppenheim", "min |q| per height for x^2 - a^2 y^2 or x^2 + y^2 - a^2 z^2");
  o->add_option("--alpha", opp.alpha, "golden | sqrt:D | quad:a,b,D,c")->capture_default_str();
  o->add_option("--vars", opp.vars)->check(CLI::IsMember({2, 3}))->capture_default_str();
  o->add_option("--heights", opp.heights)->capture_default_str();
  o->add_option("--out", opp.out, "table CSV (stdout if omitted)");

  BalanceFlags bal;
  auto* u = app.add_subcommand("balance", "unit balancing and torus balancing");
  u->add_option("--mode", bal.mode, "unit | split | reduce")->check(CLI::IsMember({"unit", "split", "reduce"}));
  u->add_option("--field", bal.field)->capture_default_str();
  u->add_option("--places", bal.places)->capture_default_str();
  u->add_option("--point", bal.point, "coordinates, comma separated");
  u->add_option("--vector", bal.vector, "unit mode: the vector w");
  u->add_option("--s", bal.s, "unit mode: exponent s")->check(CLI::Range(1, 64));
  u->add_option("--random", bal.random, "reduce mode: number of random points (uses --seed)")->check(CLI::Range(0, 100000));
  u->add_option("--height", bal.height)->check(CLI::Range(1L, 1000000000L));
  u->add_option("--denom-cap", bal.denom_cap)->check(CLI::Range(0, 16));
  u->add_option("--out", bal.out);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    PrecisionGuard guard(g.precision_bits);
    if (b->parsed()) return run_build(build, g);
    if (s->parsed()) return run_scan(scan, g);
    if (t->parsed()) return run_trace(trace, g);
    if (r->parsed()) return run_report(report, g);
    if (o->parsed()) return run_oppenheim(opp, g);
    if (u->parsed()) return run_balance(bal, g);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
