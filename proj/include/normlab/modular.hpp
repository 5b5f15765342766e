#pragma once

#include <cstdint>
#include <vector>

#include "normlab/types.hpp"

namespace normlab {

// Polynomial over Z/mZ, ascending coefficients reduced to [0, m); trailing
// zeros stripped.
using ModPoly = std::vector<Integer>;

namespace modp {

ModPoly reduce(std::vector<Integer> const& coefficients, Integer const& m);
int degree(ModPoly const& a);
ModPoly add(ModPoly const& a, ModPoly const& b, Integer const& m);
ModPoly sub(ModPoly const& a, ModPoly const& b, Integer const& m);
ModPoly mul(ModPoly const& a, ModPoly const& b, Integer const& m);
ModPoly scale(ModPoly const& a, Integer const& c, Integer const& m);

// Division by a polynomial whose leading coefficient is a unit mod m.
void divmod(ModPoly const& a, ModPoly const& b, Integer const& m, ModPoly& q,
            ModPoly& r);
ModPoly rem(ModPoly const& a, ModPoly const& b, Integer const& m);

// The following require m = p prime.
ModPoly monic(ModPoly const& a, Integer const& p);
ModPoly gcd(ModPoly a, ModPoly b, Integer const& p);
// s*a + t*b = gcd(a, b) (monic).
ModPoly extended_gcd(ModPoly const& a, ModPoly const& b, Integer const& p,
                     ModPoly& s, ModPoly& t);
// base^e mod f.
ModPoly powmod(ModPoly const& base, Integer e, ModPoly const& f,
               Integer const& p);

// Complete factorization of a monic polynomial that is squarefree mod p into
// monic irreducibles (distinct-degree, then equal-degree splitting). The
// result is sorted by (degree, coefficients) and independent of `seed`.
std::vector<ModPoly> factor_squarefree(ModPoly const& f, Integer const& p,
                                       std::uint64_t seed = 0x5eed);

// Degrees of the distinct-degree factorization only.
std::vector<int> factor_degrees(ModPoly const& f, Integer const& p);

// Lift f = prod(factors) mod p to mod p^precision. `f` monic over Z, the
// factors monic, pairwise coprime mod p.
std::vector<ModPoly> hensel_lift(std::vector<Integer> const& f,
                                 std::vector<ModPoly> const& factors,
                                 Integer const& p, int precision);

}  // namespace modp
}  // namespace normlab
