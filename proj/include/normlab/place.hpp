#pragma once

#include <string>
#include <vector>

#include "normlab/interval.hpp"
#include "normlab/padic.hpp"
#include "normlab/types.hpp"

namespace normlab {

// A place of Q: the archimedean one or a prime p.
class Place {
 public:
  Place() = default;  // archimedean
  static Place archimedean() { return Place(); }
  // Errors: NOT_PRIME.
  static Place prime(Integer p);

  bool is_archimedean() const { return p_ == 0; }
  // 0 for the archimedean place.
  Integer const& p() const { return p_; }

  friend bool operator==(Place const& a, Place const& b) { return a.p_ == b.p_; }
  // Archimedean first, then primes ascending.
  friend bool operator<(Place const& a, Place const& b) { return a.p_ < b.p_; }

 private:
  Integer p_ = 0;
};

std::string to_string(Place const& v);
// "inf" or a prime.
Place parse_place(std::string const& text);
// Comma-separated list; sorted, duplicates rejected, must contain "inf".
std::vector<Place> parse_places(std::string const& text);

// Normalized absolute values |x|_v. Complex values contribute the squared
// modulus, p-adic ones p^{-v_p(x)}.
Rational normalized_abs(Rational const& x, Place const& v);
Interval normalized_abs(Interval const& x);
Interval normalized_abs(ComplexInterval const& x);
Rational normalized_abs(PAdic const& x);

// Primes of S in ascending order.
std::vector<Integer> finite_primes(std::vector<Place> const& places);

}  // namespace normlab
