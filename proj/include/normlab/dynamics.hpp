#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/forms.hpp"
#include "normlab/interval.hpp"
#include "normlab/sintegers.hpp"

namespace normlab {

// Certified enclosure of the inverse of an interval matrix.
// Errors: SINGULAR_MATRIX, PRECISION_LOSS when the enclosure is too wide.
IntervalMatrix enclose_inverse(IntervalMatrix const& m);

// Row-sum (sup) operator norm, as an upper-bounded enclosure.
Interval sup_norm(IntervalMatrix const& m);
Interval sup_norm(IntervalVector const& v);

enum class BlockKind { kReal, kComplex };

// Rows offset .. offset+dim-1 of P. A complex block holds (Re, Im) of one
// complex linear form and its norm is the Euclidean norm of the pair.
struct Block {
  BlockKind kind = BlockKind::kReal;
  int offset = 0;
  int dim = 1;
};

// phi(x) = c * prod_i ||(P x)_i||^{dim_i}: the form written in eigen
// coordinates of its stabilizer torus at the archimedean place.
struct SplitStructure {
  IntervalMatrix P;
  IntervalMatrix P_inv;
  std::vector<Block> blocks;
  Interval c;

  int dimension() const { return static_cast<int>(P.rows()); }
  IntervalVector eigen(IntervalVector const& x) const;
  Interval block_norm(IntervalVector const& y, std::size_t block) const;
  Interval phi(IntervalVector const& x) const;
  // Norm-equivalence constant k for the split_balance sandwich.
  Interval k_hat() const;
};

// Norm form of K in the power basis: one block per real embedding and per
// pair of complex embeddings.
SplitStructure split_structure(NumberField const& field, int prec = 128);
// Archimedean component of a quasi-norm form: one complex block per real
// embedding, built from the definite q_i.
SplitStructure quasi_split_structure(NumberField const& field, std::vector<BinaryQuadratic> const& q,
                                     int prec = 128);
// a x^2 + b x y + c y^2 with nonzero discriminant.
SplitStructure binary_split_structure(Interval const& a, Interval const& b, Interval const& c);
// The structure matching an SForm when one is known (norm, quasi, or a
// binary quadratic); nothing otherwise.
std::optional<SplitStructure> structure_for(SForm const& f, int prec = 128);

// t acts by lambda_i on archimedean block i and, at a prime p, multiplies
// the norm of local block i by p^{l_i}.
struct TorusElement {
  std::vector<Interval> lambda;
  std::optional<Integer> p;
  std::vector<int> l;
  std::vector<int> degrees;

  // prod lambda_i^{dim_i} contains 1 within tol, and sum n_i l_i = 0.
  bool determinant_one(SplitStructure const& st, double tol = 0x1p-24) const;
};

TorusElement identity_torus(SplitStructure const& st);
// P^{-1} diag(lambda) P x
IntervalVector apply(SplitStructure const& st, TorusElement const& t, IntervalVector const& x);
IntervalVector to_intervals(RationalVector const& x);

struct SplitBalanceResult {
  TorusElement t;
  Interval norm;      // ||t w||_inf in the original coordinates
  Interval target;    // |phi(w)|^{1/n}
  Interval ratio;     // norm / target, within [1/k_hat, k_hat]
  Interval k_hat;
  Interval residual;  // max_i | ||(t w)_i|| / m - 1 |, m the common block norm
};

// Errors: NULL_COMPONENT if a block norm is zero, PRECISION_LOSS if it
// cannot be separated from zero.
SplitBalanceResult split_balance(SplitStructure const& st, IntervalVector const& w);

struct PadicBalanceResult {
  std::vector<int> l;
  Rational excess;  // max_i (beta_i + l_i) - mu, ratio = p^excess
  Interval ratio;
  Interval k_hat;   // p^{n+1}
};

// Block norms b_i = p^{beta_i}. Minimizes the largest balanced block norm
// subject to sum n_i l_i = 0. Errors: INVALID_ARGUMENT for r < 1.
PadicBalanceResult padic_split_balance(std::vector<int> const& degrees,
                                       std::vector<int> const& beta, Integer const& p);

struct NullShrinkResult {
  TorusElement t;
  Rational s;      // contraction exponent: nonzero blocks scale by e^{-s}
  Interval norm;   // ||t w||_inf < eps
};

// Errors: ALL_BLOCKS_NONZERO, PRECISION_LOSS.
NullShrinkResult null_shrink(SplitStructure const& st, IntervalVector const& w, Rational const& eps);

struct FiniteBalance {
  Integer p;
  std::vector<int> degrees;
  std::vector<int> beta;
  PadicBalanceResult balance;
};

struct BalancedReduceResult {
  UnitBalanceResult unit;      // xi balancing |f(xi w)|_v across S
  SplitBalanceResult arch;     // at inf, applied to xi w
  std::vector<FiniteBalance> finite;
  Interval norm;               // ||t (xi w)||_S
  Interval target;             // cont(f(w))^{1/(n |S|)}
  Interval ratio;
  Interval bound;              // k_hat * kappa_hat
};

// Errors: ZERO_CONTENT, RAMIFIED_PRIME.
BalancedReduceResult balanced_reduce(Field const& field, std::vector<Place> const& places,
                                     RationalVector const& w, int prec = 128);

// Columns are the basis vectors.
struct LatticeBasis {
  IntervalMatrix basis;
  Interval det;

  int dimension() const { return static_cast<int>(basis.cols()); }
};

// Errors: SINGULAR_MATRIX, DIMENSION_MISMATCH.
LatticeBasis make_lattice(IntervalMatrix const& basis);
// Scaled to |det| = 1.
LatticeBasis normalized(LatticeBasis const& lattice);

// Euclidean norm of B z, evaluated in a fixed order so that equal inputs
// give identical enclosures.
Interval lattice_vector_norm(IntervalMatrix const& basis, std::vector<long> const& z);

struct ShortestVector {
  std::vector<long> coefficients;  // witness, first nonzero entry positive
  IntervalVector vector;
  Interval norm;  // [min of lower bounds, min of upper bounds] over candidates
  std::uint64_t candidates = 0;
};

struct EnumerationOptions {
  std::uint64_t max_candidates = 5000000;
};

// LLL in double precision, then certified enumeration of the coefficient box
// that contains every vector no longer than the shortest reduced basis
// vector. Errors: DIMENSION_TOO_LARGE (n > 4), ENUMERATION_TOO_LARGE.
ShortestVector shortest_vector(LatticeBasis const& lattice, EnumerationOptions const& options = {});
// Every coefficient vector in [-H, H]^n.
ShortestVector brute_force_shortest(LatticeBasis const& lattice, long H);

// Integer-valued LLL (delta = 0.99) on the midpoints; returns the unimodular
// transform U with reduced basis B U.
std::vector<std::vector<long>> lll_transform(IntervalMatrix const& basis);

enum class Verdict { kBoundedBelow, kDecays, kInconclusive };
std::string to_string(Verdict verdict);

struct TraceOptions {
  Rational t_min = -10;
  Rational t_max = 10;
  Rational step = Rational(1, 10);
  Rational threshold = Rational(1, 1000);
};

struct OrbitSample {
  Rational t;
  ShortestVector shortest;
};

struct OrbitTrace {
  std::vector<OrbitSample> samples;
  Verdict verdict = Verdict::kInconclusive;
  // BOUNDED_BELOW: the certified level c; DECAYS: the witness norm.
  std::optional<Interval> level;
  std::optional<std::size_t> witness_sample;
  TraceOptions window;
};

// Samples diag(e^{u_i t}) L0 on the grid t_min, t_min + step, ... <= t_max.
// Errors: INVALID_ARGUMENT for a non-positive step or sum u_i != 0.
OrbitTrace orbit_trace(LatticeBasis const& l0, std::vector<Rational> const& u,
                       TraceOptions const& options = {});

// Normalized lattice P Z^n of a split structure and a one-parameter flow
// inside its torus: +1/d_1 on the first block, -1/d_2 on the second (zero
// flow when there is a single block).
LatticeBasis structure_lattice(SplitStructure const& st);
std::vector<Rational> default_flow(SplitStructure const& st);

struct ReportOptions {
  ScanOptions scan;
  long zero_height = 20;
  TraceOptions trace;
  int precision_bits = 128;
};

struct CompactnessReport {
  ScanSummary scan;
  std::optional<RationalVector> zero;  // from rational_zero_search
  bool zero_search_run = false;
  std::optional<OrbitTrace> trace;
  std::string trace_note;
  std::string consistency;  // NORM_LIKE, ISOTROPIC or INCONCLUSIVE
};

CompactnessReport compactness_report(SForm const& f, ReportOptions const& options);

}  // namespace normlab
