#include "normlab/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "normlab/error.hpp"

namespace normlab {
namespace {

std::string monomial_key(Monomial const& m) {
  std::string key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(m[i]);
  }
  return key;
}

Monomial parse_monomial(std::string const& key) {
  Monomial m;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      m.push_back(std::stoi(part));
    } catch (std::exception const&) {
      throw Error(ErrorCode::kParseError, "bad exponent tuple '" + key + "'");
    }
  }
  return m;
}

template <typename S, typename F>
Json terms_json(Form<S> const& f, F&& convert) {
  Json out = Json::object();
  for (auto const& [m, c] : f.terms()) out[monomial_key(m)] = convert(c);
  return out;
}

template <typename S, typename F>
Form<S> terms_from_json(Json const& j, int nvars, int degree, F&& convert) {
  Form<S> f(nvars, degree);
  for (auto const& [key, value] : j.items()) f.add_term(parse_monomial(key), convert(value));
  return f;
}

std::string require_string(Json const& j, char const* what) {
  if (!j.is_string()) throw Error(ErrorCode::kParseError, std::string("expected a string for ") + what);
  return j.get<std::string>();
}

Json optional_interval(std::optional<Interval> const& x) { return x ? to_json(*x) : Json(nullptr); }

}  // namespace

Json to_json(Rational const& q) { return to_string(q); }

Json to_json(Interval const& x, int digits) {
  auto const ball = to_decimal_ball(x, digits);
  return Json{{"mid", ball.mid}, {"rad", ball.rad}};
}

Json to_json(PAdic const& x) {
  Json j{{"p", x.prime().str()}};
  if (x.is_exact_zero()) {
    j["zero"] = "exact";
  } else if (x.is_inexact_zero()) {
    j["zero"] = "inexact";
    j["valuation"] = x.valuation();
  } else {
    j["valuation"] = x.valuation();
    j["unit"] = x.unit().str();
    j["N"] = x.relative_precision();
  }
  return j;
}

Json to_json(PlaceValue const& v) {
  Json j{{"place", to_string(v.place)}};
  std::visit([&](auto const& x) { j["value"] = to_json(x); }, v.value);
  return j;
}

Json to_json(RationalVector const& x) {
  Json j = Json::array();
  for (int i = 0; i < x.size(); ++i) j.push_back(to_json(x[i]));
  return j;
}

Rational rational_from_json(Json const& j) { return parse_rational(require_string(j, "rational")); }

Interval interval_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("mid") || !j.contains("rad")) {
    throw Error(ErrorCode::kParseError, "interval must be {mid, rad}");
  }
  return from_decimal_ball({require_string(j["mid"], "mid"), require_string(j["rad"], "rad")});
}

PAdic padic_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("p")) throw Error(ErrorCode::kParseError, "p-adic value needs p");
  Integer const p = parse_rational(require_string(j["p"], "p")).convert_to<Integer>();
  if (j.contains("zero")) {
    if (j["zero"] == "exact") return PAdic::exact_zero(p);
    return PAdic::inexact_zero(p, j.at("valuation").get<int>());
  }
  int const v = j.at("valuation").get<int>();
  int const N = j.at("N").get<int>();
  Integer const unit = parse_rational(require_string(j.at("unit"), "unit")).convert_to<Integer>();
  // p^v times a unit known modulo p^N.
  return PAdic::from_residue(unit, p, N) * PAdic::from_rational(pow(Rational(p), v), p, N);
}

std::string point_string(RationalVector const& x) {
  std::string s;
  for (int i = 0; i < x.size(); ++i) {
    if (i) s += " ";
    s += denominator(x[i]) == 1 ? numerator(x[i]).str() : to_string(x[i]);
  }
  return s;
}

std::string value_string(PlaceValue const& v) {
  std::string s = to_string(v.place) + "=";
  if (auto const* r = std::get_if<Rational>(&v.value)) return s + to_string(*r);
  if (auto const* i = std::get_if<Interval>(&v.value)) {
    auto const ball = to_decimal_ball(*i);
    return s + ball.mid + "+-" + ball.rad;
  }
  return s + to_string(std::get<PAdic>(v.value));
}

Json to_json(SForm const& f) {
  Json j;
  j["format"] = "normlab-sform";
  j["version"] = 1;
  j["kind"] = to_string(f.kind);
  j["nvars"] = f.nvars();
  j["degree"] = f.degree();
  Json places = Json::array();
  for (auto const& v : f.places) places.push_back(to_string(v));
  j["places"] = places;
  if (!f.field.empty()) {
    Json field = Json::array();
    for (auto const& c : f.field) field.push_back(c.str());
    j["field"] = field;
  }
  if (!f.q_choices.empty()) {
    Json qs = Json::array();
    for (auto const& choice : f.q_choices) {
      Json list = Json::array();
      for (auto const& q : choice.q) list.push_back(to_string(q.a) + "," + to_string(q.b) + "," + to_string(q.c));
      qs.push_back(Json{{"place", to_string(choice.place)}, {"q", list}});
    }
    j["q_choices"] = qs;
  }
  Json comps = Json::array();
  for (auto const& c : f.components) {
    Json cj{{"place", to_string(c.place)}};
    if (c.exact) cj["exact"] = terms_json(*c.exact, [](Rational const& q) { return to_json(q); });
    if (c.real) cj["real"] = terms_json(*c.real, [](Interval const& x) { return to_json(x, 45); });
    if (c.padic) cj["padic"] = terms_json(*c.padic, [](PAdic const& x) { return to_json(x); });
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

SForm sform_from_json(Json const& j) {
  try {
    if (j.value("format", "") != "normlab-sform") throw Error(ErrorCode::kParseError, "not a normlab form file");
    SForm f;
    std::string const kind = j.at("kind").get<std::string>();
    if (kind == "norm") {
      f.kind = FormKind::kNorm;
    } else if (kind == "quasi") {
      f.kind = FormKind::kQuasi;
    } else if (kind == "given") {
      f.kind = FormKind::kGiven;
    } else {
      throw Error(ErrorCode::kParseError, "unknown form kind '" + kind + "'");
    }
    int const nvars = j.at("nvars").get<int>();
    int const degree = j.at("degree").get<int>();
    std::string places;
    for (auto const& v : j.at("places")) places += (places.empty() ? "" : ",") + v.get<std::string>();
    f.places = parse_places(places);
    if (j.contains("field")) {
      for (auto const& c : j["field"]) f.field.push_back(parse_rational(c.get<std::string>()).convert_to<Integer>());
    }
    if (j.contains("q_choices")) {
      for (auto const& choice : j["q_choices"]) {
        QuasiChoice qc{parse_place(choice.at("place").get<std::string>()), {}};
        for (auto const& q : choice.at("q")) qc.q.push_back(parse_binary_quadratic(q.get<std::string>()));
        f.q_choices.push_back(qc);
      }
    }
    for (auto const& cj : j.at("components")) {
      FormComponent c;
      c.place = parse_place(cj.at("place").get<std::string>());
      if (cj.contains("exact")) {
        c.exact = terms_from_json<Rational>(cj["exact"], nvars, degree, rational_from_json);
      }
      if (cj.contains("real")) {
        c.real = terms_from_json<Interval>(cj["real"], nvars, degree, interval_from_json);
      }
      if (cj.contains("padic")) {
        c.padic = terms_from_json<PAdic>(cj["padic"], nvars, degree, padic_from_json);
      }
      if (!c.exact && !c.real && !c.padic) {
        throw Error(ErrorCode::kParseError, "component at " + to_string(c.place) + " has no coefficients");
      }
      f.components.push_back(std::move(c));
    }
    if (f.components.size() != f.places.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "one component per place is required");
    }
    for (std::size_t i = 0; i < f.places.size(); ++i) {
      if (!(f.components[i].place == f.places[i])) {
        throw Error(ErrorCode::kParseError, "components must follow the place order");
      }
    }
    return f;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed form file: ") + e.what());
  }
}

Json to_json(ScanSummary const& s) {
  Json j;
  Json places = Json::array();
  for (auto const& v : s.places) places.push_back(to_string(v));
  j["places"] = places;
  j["height"] = s.height;
  j["denom_cap"] = s.denom_cap;
  j["mode"] = s.pruned ? "pruned-diagonal" : "exhaustive";
  j["points"] = s.points;
  j["min_nonzero_content"] = s.exact_min_content ? Json(to_json(*s.exact_min_content)) : optional_interval(s.min_content);
  j["min_point"] = s.min_point ? to_json(*s.min_point) : Json(nullptr);
  j["gap"] = s.exact_gap ? Json(to_json(*s.exact_gap)) : optional_interval(s.gap);
  Json zeros = Json::array();
  for (auto const& z : s.zeros) zeros.push_back(to_json(z));
  j["zeros"] = zeros;
  j["possible_zeros"] = s.possible_zeros;
  j["precision_flags"] = s.precision_flags;
  return j;
}

std::string scan_csv(ScanSummary const& s) {
  std::string out = "point,value_per_place,content,flags\n";
  for (auto const& e : s.entries) {
    std::string values;
    for (auto const& v : e.values) values += (values.empty() ? "" : "|") + value_string(v);
    std::string content;
    if (e.exact_content) {
      content = to_string(*e.exact_content);
    } else {
      auto const ball = to_decimal_ball(e.content);
      content = ball.mid + "+-" + ball.rad;
    }
    std::string flags;
    if (e.possible_zero) flags += "possible_zero";
    if (e.precision_loss) flags += std::string(flags.empty() ? "" : "|") + "precision_loss";
    out += point_string(e.point) + "," + values + "," + content + "," + flags + "\n";
  }
  return out;
}

Json to_json(ShortestVector const& v) {
  Json z = Json::array();
  for (long c : v.coefficients) z.push_back(c);
  return Json{{"coefficients", z}, {"norm", to_json(v.norm)}, {"candidates", v.candidates}};
}

Json to_json(OrbitTrace const& t) {
  Json j;
  j["verdict"] = to_string(t.verdict);
  j["level"] = optional_interval(t.level);
  j["window"] = Json{{"t_min", to_json(t.window.t_min)},
                     {"t_max", to_json(t.window.t_max)},
                     {"step", to_json(t.window.step)},
                     {"threshold", to_json(t.window.threshold)}};
  j["samples"] = t.samples.size();
  if (t.witness_sample) {
    auto const& s = t.samples[*t.witness_sample];
    j["witness"] = Json{{"t", to_json(s.t)}, {"shortest", to_json(s.shortest)}};
  }
  return j;
}

std::string trace_csv(OrbitTrace const& t) {
  std::string out = "t,lower,upper,witness\n";
  for (auto const& s : t.samples) {
    std::string witness;
    for (long c : s.shortest.coefficients) witness += (witness.empty() ? "" : " ") + std::to_string(c);
    out += decimal_string(s.t, 6, 0) + "," + decimal_string(s.shortest.norm.lower(), 12, -1) + "," +
           decimal_string(s.shortest.norm.upper(), 12, 1) + "," + witness + "\n";
  }
  return out;
}

Json to_json(CompactnessReport const& r) {
  Json j;
  j["scan"] = to_json(r.scan);
  if (r.zero_search_run) {
    j["zero_search"] = r.zero ? Json{{"result", "FOUND"}, {"zero", to_json(*r.zero)}}
                              : Json{{"result", "NONE_FOUND"}};
  } else {
    j["zero_search"] = Json{{"result", "NOT_RUN"}, {"reason", "components are not one rational form"}};
  }
  j["trace"] = r.trace ? to_json(*r.trace) : Json{{"verdict", "NOT_RUN"}, {"reason", r.trace_note}};
  j["consistency"] = r.consistency;
  return j;
}

Json to_json(UnitBalanceResult const& r) {
  Json e = Json::array();
  for (int x : r.xi.exponents) e.push_back(x);
  return Json{{"xi", {{"sign", r.xi.sign}, {"exponents", e}}},
              {"balanced_norm", r.exact_balanced ? Json(to_json(*r.exact_balanced)) : to_json(r.balanced_norm)},
              {"target", to_json(r.target)},
              {"ratio", to_json(r.ratio)},
              {"kappa_hat", to_json(r.kappa_hat)},
              {"window", r.window}};
}

Json to_json(SplitBalanceResult const& r) {
  Json lambda = Json::array();
  for (auto const& l : r.t.lambda) lambda.push_back(to_json(l));
  return Json{{"lambda", lambda},       {"norm", to_json(r.norm)},   {"target", to_json(r.target)},
              {"ratio", to_json(r.ratio)}, {"k_hat", to_json(r.k_hat)}, {"residual", to_json(r.residual)}};
}

Json to_json(BalancedReduceResult const& r) {
  Json finite = Json::array();
  for (auto const& f : r.finite) {
    finite.push_back(Json{{"p", f.p.str()},
                          {"degrees", f.degrees},
                          {"block_exponents", f.beta},
                          {"l", f.balance.l},
                          {"ratio", to_json(f.balance.ratio)},
                          {"k_hat", to_json(f.balance.k_hat)}});
  }
  return Json{{"unit", to_json(r.unit)}, {"archimedean", to_json(r.arch)}, {"finite", finite},
              {"norm", to_json(r.norm)}, {"target", to_json(r.target)},   {"ratio", to_json(r.ratio)},
              {"bound", to_json(r.bound)}};
}

std::string config_hash(std::string const& canonical) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace normlab
