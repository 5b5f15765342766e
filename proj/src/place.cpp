#include "normlab/place.hpp"

#include <algorithm>
#include <sstream>

#include "normlab/error.hpp"

namespace normlab {

Place Place::prime(Integer p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, p.str() + " is not prime");
  Place v;
  v.p_ = std::move(p);
  return v;
}

std::string to_string(Place const& v) { return v.is_archimedean() ? "inf" : v.p().str(); }

Place parse_place(std::string const& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return Place::archimedean();
  Rational const q = parse_rational(text);
  if (denominator(q) != 1) throw Error(ErrorCode::kParseError, "place must be 'inf' or a prime: " + text);
  return Place::prime(numerator(q));
}

std::vector<Place> parse_places(std::string const& text) {
  std::vector<Place> places;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) places.push_back(parse_place(item));
  }
  std::sort(places.begin(), places.end());
  if (std::adjacent_find(places.begin(), places.end()) != places.end()) {
    throw Error(ErrorCode::kInvalidArgument, "places must be distinct");
  }
  if (places.empty() || !places.front().is_archimedean()) {
    throw Error(ErrorCode::kInvalidArgument, "S must contain the archimedean place 'inf'");
  }
  return places;
}

Rational normalized_abs(Rational const& x, Place const& v) {
  if (v.is_archimedean()) return abs(x);
  if (x == 0) return Rational(0);
  return pow(Rational(v.p()), -valuation(x, v.p()));
}

Interval normalized_abs(Interval const& x) { return abs(x); }

Interval normalized_abs(ComplexInterval const& x) { return abs2(x); }

Rational normalized_abs(PAdic const& x) { return x.normalized_abs(); }

std::vector<Integer> finite_primes(std::vector<Place> const& places) {
  std::vector<Integer> out;
  for (auto const& v : places) {
    if (!v.is_archimedean()) out.push_back(v.p());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace normlab
