#pragma once

// Evaluators for the explicit inequalities attached to F_E: the unit-cell
// trace-class criterion, trace-norm bounds, block estimates, the
// Hilbert-Schmidt majorization and the Nazarov-type contraction bound with
// its empirical constant estimation.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ftrunc/operators.hpp"

namespace ftrunc {

// Sum over unit cells of sqrt(mes E_j).  Finite for every finite union;
// criterion_sum(S)^2 >= measure(S) since every cell has measure <= 1.
double criterion_sum(const IntervalSet& s);

// (lower, upper) bounds on the nuclear norm of F_E in the given convention.
// lower realizes sum s_j >= sum s_j^2 (the corrected trace bound); upper is
// e^{1/4} criterion_sum^2, stated raw and divided by sqrt(2pi) for analyst.
// The raw lower (mes E)^2 reproduces the paper's printed bound; it holds
// numerically only for mes E <~ 1 (see bounds tests).
std::pair<double, double> trace_norm_bounds(const IntervalSet& s, Convention conv);

// sqrt(mes S1) sqrt(mes S2) e^{R^2} for S1, S2 contained in [-R, R].
double block_trace_bound(const IntervalSet& s1, const IntervalSet& s2, double R);

// Nuclear norm of the discretized block P_{S2} F P_{S1} with the bare e^{i t xi}
// kernel (the convention in which the block bound is stated).
double block_nuclear_raw(const IntervalSet& s1, const IntervalSet& s2,
                         int order = 8, double panels_per_unit = 8.0);

// 1 - A^{-1} e^{-A (mes E)^2}; requires A >= 1.
double nazarov_contraction_bound(const IntervalSet& s, double A);

// mes E (paper_raw) or mes E / sqrt(2pi) (analyst) as a bound on ||F_E||.
double hs_majorization_bound(const IntervalSet& s, Convention conv);

struct TestFunction {
  std::string kind;
  std::function<std::complex<double>(double)> eval;
};

struct NazarovFamilySpec {
  int members = 50;
  unsigned seed = 1;
  double window_inflate = 12.0;
  int order = 8;
  double panels_per_unit = 4.0;
};

// Deterministic family of smooth test functions: translated/modulated
// Gaussians over the window plus mollified indicators of E.
std::vector<TestFunction> nazarov_family(const IntervalSet& e, const IntervalSet& f,
                                         const NazarovFamilySpec& spec);

// Variant whose members are all supported inside E (the functions entering
// the contraction form of the uncertainty inequality).
std::vector<TestFunction> nazarov_family_supported(const IntervalSet& e,
                                                   const NazarovFamilySpec& spec);

struct NazarovEstimate {
  double max_ratio = 0.0;
  // Root of A e^{A mesE mesF} = max_ratio; every admissible constant must be
  // at least this large.
  double implied_lower_bound_A = 0.0;
  int argmax_member = -1;
};

// For each test x computes r(x) = ||x||^2 / (int_{R\E}|Fx|^2 + int_{R\F}|x|^2)
// on a windowed quadrature and returns the largest ratio with the implied
// lower bound on the absolute constant.
NazarovEstimate nazarov_empirical(const IntervalSet& e, const IntervalSet& f,
                                  const NazarovFamilySpec& spec);

// ||F_E x||^2 / ||x||^2 for a function supported in E, via the discretized
// operator on E's quadrature.
double concentration_ratio(const IntervalSet& e, const TestFunction& x,
                           int order = 8, double panels_per_unit = 8.0);

struct BlockBoundEntry {
  std::int64_t p = 0;
  std::int64_t q = 0;
  double bound = 0.0;
  double nuclear_raw = 0.0;
};

struct BoundsReport {
  double measure = 0.0;
  double criterion_sum = 0.0;
  double trace_lower_analyst = 0.0;
  double trace_upper_analyst = 0.0;
  double trace_lower_raw = 0.0;
  double trace_upper_raw = 0.0;
  double hs_majorization_analyst = 0.0;
  double hs_majorization_raw = 0.0;
  double nazarov_A = 0.0;
  double nazarov_bound = 0.0;
  std::vector<BlockBoundEntry> block_bounds;
};

// Assembles the full report; block bounds are checked on up to
// max_block_pairs random unit-cell pairs drawn deterministically from seed.
BoundsReport bounds_report(const IntervalSet& s, double A = 1.0, int max_block_pairs = 10,
                           unsigned seed = 1);

}  // namespace ftrunc
