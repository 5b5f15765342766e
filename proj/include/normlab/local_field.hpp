#pragma once

#include <vector>

#include "normlab/number_field.hpp"
#include "normlab/padic.hpp"
#include "normlab/place.hpp"

namespace normlab {

// One factor g_i of the minimal polynomial over Q_p, i.e. one summand
// K_{v,i} = Q_p[t]/(g_i) of K (x) Q_p.
struct LocalFactor {
  Place place;
  int precision = kDefaultPadicDigits;    // coefficients known mod p^precision
  std::vector<Integer> factor_poly;       // ascending, monic, reduced mod p^precision
  int local_degree = 0;
};

// Factors of min_poly over Q_p for p not dividing disc(min_poly), sorted by
// (degree, residue mod p). Results are cached per (field, p, N).
// Errors: RAMIFIED_PRIME if p | disc; NOT_PRIME.
std::vector<LocalFactor> padic_factor_degrees(NumberField const& field, Integer const& p,
                                              int N = kDefaultPadicDigits);

// Matrix of multiplication by t^k on the local power basis {1, ..., t^{d-1}},
// entries mod p^precision.
std::vector<std::vector<Integer>> local_power_matrix(LocalFactor const& factor, int k);

// Coordinates of the image of a global element (power-basis coordinates of
// K) in the local power basis of K_{v,i}.
std::vector<PAdic> local_image(LocalFactor const& factor, RationalVector const& coords);

// N_{K_{v,i}/Q_p} of the element with the given local coordinates.
// Errors: DIMENSION_MISMATCH.
PAdic local_norm_eval(LocalFactor const& factor, std::vector<PAdic> const& coords);

}  // namespace normlab
