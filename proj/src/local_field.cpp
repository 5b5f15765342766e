#include "normlab/local_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "normlab/error.hpp"
#include "normlab/linalg.hpp"
#include "normlab/modular.hpp"

namespace normlab {
namespace {

using CacheKey = std::tuple<std::vector<Integer>, Integer, int>;

std::shared_mutex cache_mutex;
std::map<CacheKey, std::vector<LocalFactor>> cache;

// t^k mod g over Z/m, as a coefficient vector of length d.
std::vector<Integer> power_mod(std::vector<Integer> const& g, int k, Integer const& m) {
  int const d = static_cast<int>(g.size()) - 1;
  std::vector<Integer> r(d, Integer(0));
  if (d == 0) return r;
  r[0] = 1;
  for (int step = 0; step < k; ++step) {
    // multiply by t, then reduce with t^d = -sum g_i t^i
    Integer const top = r[d - 1];
    for (int i = d - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    for (int i = 0; i < d; ++i) r[i] = mod(r[i] - top * g[i], m);
  }
  return r;
}

}  // namespace

std::vector<LocalFactor> padic_factor_degrees(NumberField const& field, Integer const& p, int N) {
  Place const place = Place::prime(p);
  if (N < 2) throw Error(ErrorCode::kInvalidArgument, "p-adic precision must be at least 2 digits");
  if (field.disc % p == 0) {
    throw Error(ErrorCode::kRamifiedPrime,
                p.str() + " divides the discriminant " + field.disc.str() +
                    "; choose a prime not dividing it");
  }
  CacheKey key{field.coefficients, p, N};
  {
    std::shared_lock lock(cache_mutex);
    auto const it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto const residues = modp::factor_squarefree(modp::reduce(field.coefficients, p), p);
  auto const lifted = modp::hensel_lift(field.coefficients, residues, p, N);
  Integer const modulus = pow(p, static_cast<unsigned>(N));
  std::vector<LocalFactor> out;
  for (auto const& g : lifted) {
    LocalFactor f;
    f.place = place;
    f.precision = N;
    f.factor_poly = modp::reduce(g, modulus);
    f.local_degree = static_cast<int>(f.factor_poly.size()) - 1;
    out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(), [](LocalFactor const& a, LocalFactor const& b) {
    return a.local_degree < b.local_degree;
  });
  std::unique_lock lock(cache_mutex);
  cache.emplace(std::move(key), out);
  return out;
}

std::vector<std::vector<Integer>> local_power_matrix(LocalFactor const& factor, int k) {
  Integer const m = pow(factor.place.p(), static_cast<unsigned>(factor.precision));
  int const d = factor.local_degree;
  std::vector<std::vector<Integer>> out(d, std::vector<Integer>(d));
  for (int j = 0; j < d; ++j) {
    auto const column = power_mod(factor.factor_poly, k + j, m);
    for (int i = 0; i < d; ++i) out[i][j] = column[i];
  }
  return out;
}

std::vector<PAdic> local_image(LocalFactor const& factor, RationalVector const& coords) {
  Integer const& p = factor.place.p();
  int const d = factor.local_degree;
  std::vector<PAdic> out(d, PAdic::exact_zero(p));
  Integer const m = pow(p, static_cast<unsigned>(factor.precision));
  for (int j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    auto const tj = power_mod(factor.factor_poly, j, m);
    PAdic const c = PAdic::from_rational(coords[j], p, factor.precision);
    for (int i = 0; i < d; ++i) {
      out[i] = out[i] + c * PAdic::from_residue(tj[i], p, factor.precision);
    }
  }
  return out;
}

PAdic local_norm_eval(LocalFactor const& factor, std::vector<PAdic> const& coords) {
  int const d = factor.local_degree;
  if (static_cast<int>(coords.size()) != d) {
    throw Error(ErrorCode::kDimensionMismatch, "local coordinates must have the local degree");
  }
  Integer const& p = factor.place.p();
  SquareArray<PAdic> m(d, std::vector<PAdic>(d, PAdic::exact_zero(p)));
  for (int k = 0; k < d; ++k) {
    if (coords[k].is_exact_zero()) continue;
    auto const tk = local_power_matrix(factor, k);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        m[i][j] = m[i][j] + coords[k] * PAdic::from_residue(tk[i][j], p, factor.precision);
      }
    }
  }
  return subset_determinant(m, PAdic::from_rational(1, p, factor.precision));
}

}  // namespace normlab
