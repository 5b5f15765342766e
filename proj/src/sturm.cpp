#include "normlab/sturm.hpp"

#include "normlab/error.hpp"

namespace normlab {
namespace {

int sign(Rational const& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations_at_infinity(std::vector<RatPolynomial> const& chain, bool positive) {
  int count = 0;
  int last = 0;
  for (auto const& q : chain) {
    int s = sign(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void isolate(RatPolynomial const& p, std::vector<RatPolynomial> const& chain,
             Rational const& lo, int v_lo, Rational const& hi, int v_hi,
             std::vector<std::pair<Rational, Rational>>& out) {
  int const count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  for (int j = 3; p(mid) == 0; ++j) {
    mid = (lo + hi) / 2 + (hi - lo) / pow(Rational(2), j);
  }
  int const v_mid = sign_variations(chain, mid);
  isolate(p, chain, lo, v_lo, mid, v_mid, out);
  isolate(p, chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

std::vector<RatPolynomial> sturm_chain(RatPolynomial const& p) {
  std::vector<RatPolynomial> chain{p};
  RatPolynomial next = derivative(p);
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -divmod(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

int sign_variations(std::vector<RatPolynomial> const& chain, Rational const& x) {
  int count = 0;
  int last = 0;
  for (auto const& q : chain) {
    int const s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

RealRootIsolation sturm_real_roots(RatPolynomial const& p) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "root isolation needs degree >= 1");
  }
  if (!is_squarefree(p)) {
    throw Error(ErrorCode::kNotSquarefree, to_string(p) + " is not squarefree");
  }
  auto const chain = sturm_chain(p);
  RealRootIsolation result;
  result.count = variations_at_infinity(chain, false) - variations_at_infinity(chain, true);

  Rational cauchy = 0;
  for (int i = 0; i < p.degree(); ++i) {
    cauchy = std::max(cauchy, Rational(abs(p.coefficients()[i] / p.leading())));
  }
  Rational bound = 1;
  while (bound <= cauchy + 1) bound *= 2;
  isolate(p, chain, -bound, sign_variations(chain, -bound), bound,
          sign_variations(chain, bound), result.intervals);
  return result;
}

std::pair<Rational, Rational> refine_root(RatPolynomial const& p,
                                          std::pair<Rational, Rational> interval,
                                          int bits) {
  auto [lo, hi] = interval;
  if (lo == hi) return interval;
  Rational const width = pow(Rational(2), -bits);
  int const s_lo = sign(p(lo));
  while (hi - lo > width) {
    Rational const mid = (lo + hi) / 2;
    int const s = sign(p(mid));
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace normlab
