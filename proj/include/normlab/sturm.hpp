#pragma once

#include <utility>
#include <vector>

#include "normlab/upoly.hpp"

namespace normlab {

struct RealRootIsolation {
  int count = 0;
  // Sorted, disjoint. Each open interval (lo, hi) contains exactly one root,
  // except degenerate entries lo == hi, which are exact rational roots.
  std::vector<std::pair<Rational, Rational>> intervals;
};

std::vector<RatPolynomial> sturm_chain(RatPolynomial const& p);

// Number of sign changes of the chain at x.
int sign_variations(std::vector<RatPolynomial> const& chain, Rational const& x);

// Errors: NOT_SQUAREFREE.
RealRootIsolation sturm_real_roots(RatPolynomial const& p);

// Bisect an isolating interval until hi - lo <= 2^-bits.
std::pair<Rational, Rational> refine_root(RatPolynomial const& p,
                                          std::pair<Rational, Rational> interval,
                                          int bits);

}  // namespace normlab
