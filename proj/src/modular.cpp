#include "normlab/modular.hpp"

#include <algorithm>
#include <random>

#include "normlab/error.hpp"

namespace normlab::modp {
namespace {

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer random_below(std::mt19937_64& rng, Integer const& bound) {
  Integer x = 0;
  auto const bits = msb(bound) + 64;
  for (std::size_t produced = 0; produced < bits; produced += 64) {
    x <<= 64;
    x += Integer(static_cast<unsigned long long>(rng()));
  }
  return x % bound;
}

ModPoly x_poly() { return ModPoly{Integer(0), Integer(1)}; }

bool less(ModPoly const& a, ModPoly const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Split g, a product of distinct monic irreducibles of degree d, into them.
void equal_degree_split(ModPoly const& g, int d, Integer const& p,
                        std::mt19937_64& rng, std::vector<ModPoly>& out) {
  int const n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer const q_d = pow(p, static_cast<unsigned>(d));
  while (true) {
    ModPoly a(n);
    for (auto& c : a) c = random_below(rng, p);
    trim(a);
    if (degree(a) < 1) continue;
    ModPoly candidate = gcd(a, g, p);
    if (degree(candidate) == 0) {
      ModPoly b;
      if (p == 2) {
        // Absolute trace a + a^2 + ... + a^{2^{d-1}} of F_{2^d}.
        b = a;
        ModPoly power = a;
        for (int j = 1; j < d; ++j) {
          power = powmod(power, Integer(2), g, p);
          b = add(b, power, p);
        }
      } else {
        b = sub(powmod(a, (q_d - 1) / 2, g, p), ModPoly{Integer(1)}, p);
      }
      candidate = gcd(b, g, p);
    }
    int const k = degree(candidate);
    if (k > 0 && k < n) {
      ModPoly quotient, remainder;
      divmod(g, candidate, p, quotient, remainder);
      equal_degree_split(candidate, d, p, rng, out);
      equal_degree_split(monic(quotient, p), d, p, rng, out);
      return;
    }
  }
}

struct DistinctDegreePart {
  ModPoly product;
  int degree;
};

std::vector<DistinctDegreePart> distinct_degree(ModPoly const& f,
                                                Integer const& p) {
  std::vector<DistinctDegreePart> parts;
  ModPoly rest = monic(f, p);
  ModPoly h = x_poly();
  for (int i = 1; 2 * i <= degree(rest); ++i) {
    h = powmod(h, p, rest, p);
    ModPoly g = gcd(sub(h, x_poly(), p), rest, p);
    if (degree(g) > 0) {
      parts.push_back({g, i});
      ModPoly quotient, remainder;
      divmod(rest, g, p, quotient, remainder);
      rest = monic(quotient, p);
      h = rem(h, rest, p);
    }
  }
  if (degree(rest) > 0) parts.push_back({rest, degree(rest)});
  return parts;
}

}  // namespace

ModPoly reduce(std::vector<Integer> const& coefficients, Integer const& m) {
  ModPoly r;
  r.reserve(coefficients.size());
  for (auto const& c : coefficients) r.push_back(normlab::mod(c, m));
  trim(r);
  return r;
}

int degree(ModPoly const& a) { return static_cast<int>(a.size()) - 1; }

ModPoly add(ModPoly const& a, ModPoly const& b, Integer const& m) {
  ModPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r, m);
}

ModPoly sub(ModPoly const& a, ModPoly const& b, Integer const& m) {
  ModPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r, m);
}

ModPoly mul(ModPoly const& a, ModPoly const& b, Integer const& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r, m);
}

ModPoly scale(ModPoly const& a, Integer const& c, Integer const& m) {
  ModPoly r = a;
  for (auto& x : r) x *= c;
  return reduce(r, m);
}

void divmod(ModPoly const& a, ModPoly const& b, Integer const& m, ModPoly& q,
            ModPoly& r) {
  if (b.empty()) throw Error(ErrorCode::kInvalidArgument, "division by zero polynomial");
  r = reduce(a, m);
  int const db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  Integer const inv = inverse_mod(b.back(), m);
  q.assign(degree(r) - db + 1, Integer(0));
  for (int i = degree(r); i >= db; --i) {
    Integer const c = normlab::mod(r[i] * inv, m);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = normlab::mod(r[i - db + j] - c * b[j], m);
    }
  }
  r.resize(db);
  trim(r);
  trim(q);
}

ModPoly rem(ModPoly const& a, ModPoly const& b, Integer const& m) {
  ModPoly q, r;
  divmod(a, b, m, q, r);
  return r;
}

ModPoly monic(ModPoly const& a, Integer const& p) {
  if (a.empty()) return a;
  return scale(a, inverse_mod(a.back(), p), p);
}

ModPoly gcd(ModPoly a, ModPoly b, Integer const& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ModPoly extended_gcd(ModPoly const& a, ModPoly const& b, Integer const& p,
                     ModPoly& s, ModPoly& t) {
  ModPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ModPoly s0{Integer(1)}, s1{};
  ModPoly t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, q, r);
    ModPoly const s2 = sub(s0, mul(q, s1, p), p);
    ModPoly const t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = s2;
    t0 = std::move(t1);
    t1 = t2;
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  Integer const inv = inverse_mod(r0.back(), p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
  return scale(r0, inv, p);
}

ModPoly powmod(ModPoly const& base, Integer e, ModPoly const& f,
               Integer const& p) {
  ModPoly result{Integer(1)};
  result = rem(result, f, p);
  ModPoly b = rem(base, f, p);
  while (e > 0) {
    if (e % 2 == 1) result = rem(mul(result, b, p), f, p);
    e /= 2;
    if (e > 0) b = rem(mul(b, b, p), f, p);
  }
  return result;
}

std::vector<int> factor_degrees(ModPoly const& f, Integer const& p) {
  std::vector<int> degrees;
  for (auto const& part : distinct_degree(f, p)) {
    for (int k = 0; k < degree(part.product) / part.degree; ++k) {
      degrees.push_back(part.degree);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<ModPoly> factor_squarefree(ModPoly const& f, Integer const& p,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ModPoly> factors;
  for (auto const& part : distinct_degree(f, p)) {
    equal_degree_split(part.product, part.degree, p, rng, factors);
  }
  std::sort(factors.begin(), factors.end(), less);
  return factors;
}

std::vector<ModPoly> hensel_lift(std::vector<Integer> const& f,
                                 std::vector<ModPoly> const& factors,
                                 Integer const& p, int precision) {
  Integer const target = pow(p, static_cast<unsigned>(precision));
  if (factors.size() <= 1) return {reduce(f, target)};

  ModPoly g = factors.front();
  ModPoly h{Integer(1)};
  for (std::size_t i = 1; i < factors.size(); ++i) h = mul(h, factors[i], p);
  ModPoly s, t;
  ModPoly const one = extended_gcd(g, h, p, s, t);
  if (one != ModPoly{Integer(1)}) {
    throw Error(ErrorCode::kInvalidArgument, "Hensel factors are not coprime mod p");
  }

  Integer m = p;
  while (m < target) {
    Integer const m2 = m * m;
    ModPoly const e = sub(reduce(f, m2), mul(g, h, m2), m2);
    ModPoly q, r;
    divmod(mul(s, e, m2), h, m2, q, r);
    ModPoly const g_next = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
    ModPoly const h_next = add(h, r, m2);
    ModPoly const b = sub(add(mul(s, g_next, m2), mul(t, h_next, m2), m2),
                          ModPoly{Integer(1)}, m2);
    ModPoly c, d;
    divmod(mul(s, b, m2), h_next, m2, c, d);
    s = sub(s, d, m2);
    t = sub(sub(t, mul(t, b, m2), m2), mul(c, g_next, m2), m2);
    g = g_next;
    h = h_next;
    m = m2;
  }
  g = reduce(g, target);
  h = reduce(h, target);

  std::vector<ModPoly> lifted{g};
  std::vector<ModPoly> const rest(factors.begin() + 1, factors.end());
  auto tail = hensel_lift(h, rest, p, precision);
  lifted.insert(lifted.end(), tail.begin(), tail.end());
  return lifted;
}

}  // namespace normlab::modp
