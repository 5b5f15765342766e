#include "normlab/embeddings.hpp"

#include <algorithm>
#include <complex>

#include "normlab/error.hpp"
#include "normlab/sturm.hpp"

namespace normlab {
namespace {

using Approx = std::complex<long double>;

std::vector<Approx> durand_kerner(RatPolynomial const& p) {
  int const n = p.degree();
  std::vector<long double> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i] = static_cast<long double>(static_cast<double>(p.coefficients()[i] / p.leading()));
  }
  auto const eval = [&](Approx z) {
    Approx r = 1;
    for (int i = n - 1; i >= 0; --i) r = r * z + c[i];
    return r;
  };
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(c[i]));
  std::vector<Approx> z(n);
  Approx const seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[k] = std::pow(seed, k) * (radius / 2);
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      Approx denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (denom == Approx(0)) denom = Approx(1e-30L, 0);
      Approx const step = eval(z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L * radius) break;
  }
  return z;
}

// Complex rational point x + iy.
struct Point {
  Rational x;
  Rational y;
};

Point round_to_bits(Point const& z, int bits) {
  Integer const scale = Integer(1) << bits;
  auto const round = [&](Rational const& v) {
    Rational const s = v * Rational(scale);
    Integer q = numerator(s) / denominator(s);
    return Rational(q, scale);
  };
  return {round(z.x), round(z.y)};
}

std::pair<Point, Point> eval_with_derivative(RatPolynomial const& p, Point const& z) {
  Point v{0, 0};
  Point d{0, 0};
  for (int i = p.degree(); i >= 0; --i) {
    d = {d.x * z.x - d.y * z.y + v.x, d.x * z.y + d.y * z.x + v.y};
    v = {v.x * z.x - v.y * z.y + p.coefficients()[i], v.x * z.y + v.y * z.x};
  }
  return {v, d};
}

struct Disk {
  Point center;
  Interval radius;
};

// Newton refinement followed by the inclusion disk |z - root| <= n|p(z)/p'(z)|.
Disk refine_complex(RatPolynomial const& p, Approx start, int prec) {
  int const bits = prec + 32;
  Point z{Rational(static_cast<double>(start.real())), Rational(static_cast<double>(start.imag()))};
  z = round_to_bits(z, 64);
  Rational const target = pow(Rational(2), -prec);
  PrecisionGuard guard(2 * bits + 64);
  for (int iter = 0; iter < 64; ++iter) {
    auto const [v, d] = eval_with_derivative(p, z);
    Rational const dd = d.x * d.x + d.y * d.y;
    if (dd == 0) throw Error(ErrorCode::kPrecisionLoss, "derivative vanishes during Newton refinement");
    if (v.x == 0 && v.y == 0) return {z, Interval(0)};
    Interval const radius = Interval(p.degree()) *
                            sqrt(Interval((v.x * v.x + v.y * v.y)) / Interval(dd));
    if (radius.upper() <= target && iter > 0) return {z, radius};
    // z - v/d = z - v * conj(d) / |d|^2
    Point const step{(v.x * d.x + v.y * d.y) / dd, (v.y * d.x - v.x * d.y) / dd};
    z = round_to_bits({z.x - step.x, z.y - step.y}, bits);
  }
  throw Error(ErrorCode::kPrecisionLoss, "Newton refinement did not converge");
}

}  // namespace

RootSet polynomial_roots(RatPolynomial const& p, int prec) {
  if (prec < 16) throw Error(ErrorCode::kInvalidArgument, "embedding precision must be >= 16 bits");
  auto const iso = sturm_real_roots(p);
  int const n = p.degree();
  RootSet out;
  out.real_count = iso.count;
  out.complex_pairs = (n - iso.count) / 2;
  {
    PrecisionGuard guard(prec + 64);
    for (auto const& interval : iso.intervals) {
      auto const [lo, hi] = refine_root(p, interval, prec + 1);
      out.roots.push_back({ComplexInterval(Interval(lo, hi), Interval(0)), true});
    }
  }
  if (out.complex_pairs == 0) return out;

  auto approx = durand_kerner(p);
  std::sort(approx.begin(), approx.end(),
            [](Approx const& a, Approx const& b) { return a.imag() > b.imag(); });
  std::vector<Disk> disks;
  for (int k = 0; k < out.complex_pairs; ++k) disks.push_back(refine_complex(p, approx[k], prec));
  std::sort(disks.begin(), disks.end(), [](Disk const& a, Disk const& b) {
    return a.center.x != b.center.x ? a.center.x < b.center.x : a.center.y < b.center.y;
  });
  PrecisionGuard guard(2 * prec + 128);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    Interval const& r = disks[i].radius;
    if (!(Interval(disks[i].center.y) - r).certainly_positive()) {
      throw Error(ErrorCode::kPrecisionLoss, "cannot separate a complex root from the real axis");
    }
    for (std::size_t j = 0; j < i; ++j) {
      Point const& a = disks[i].center;
      Point const& b = disks[j].center;
      Interval const dist = sqrt(Interval((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)));
      if (!(r + disks[j].radius).certainly_less(dist)) {
        throw Error(ErrorCode::kPrecisionLoss, "complex root approximations are not separated");
      }
    }
  }
  for (auto const& disk : disks) {
    Rational const r = disk.radius.upper();
    Interval const re(disk.center.x - r, disk.center.x + r);
    Interval const im(disk.center.y - r, disk.center.y + r);
    out.roots.push_back({ComplexInterval(re, im), false});
    out.roots.push_back({ComplexInterval(re, -im), false});
  }
  return out;
}

RootSet real_embeddings(NumberField const& field, int prec) {
  return polynomial_roots(field.min_poly, prec);
}

bool is_totally_real(NumberField const& field) {
  return sturm_real_roots(field.min_poly).count == field.degree;
}

}  // namespace normlab
