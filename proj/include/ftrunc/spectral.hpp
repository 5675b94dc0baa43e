#pragma once

// Singular-value analysis of the discretized operators: norms, contraction
// and normality diagnostics, and the sinc-kernel eigenvalue study.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ftrunc/operators.hpp"

namespace ftrunc {

struct AnalyzeParams {
  int order = 8;
  double panels_per_unit = 4.0;
  int max_refinements = 6;
  Convention convention = Convention::analyst;
  bool auto_refine = true;
};

struct ResolutionInfo {
  int order = 0;
  double panels_per_unit = 0.0;
  int refinements = 0;
  std::size_t nodes = 0;
  bool converged = true;
};

struct SpectralReport {
  std::vector<double> singular_values;  // descending
  double operator_norm = 0.0;
  double hs_norm = 0.0;
  double nuclear_norm = 0.0;
  // ||M^H M - M M^H||_F / ||M^H M||_F; convention independent.
  double commutator_defect = 0.0;
  Convention convention = Convention::analyst;
  ResolutionInfo resolution;
};

struct SvdResult {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
};

// Full SVD with vectors; rejects non-finite entries.
SvdResult svd(const DiscreteOperator& op);

// Doubles panels_per_unit until the Frobenius norm of the kernel-built gram
// changes by less than 1e-8 (relative) between refinements.
Quadrature resolve_quadrature(const IntervalSet& s, const AnalyzeParams& params,
                              ResolutionInfo* info = nullptr);

SpectralReport analyze(const IntervalSet& s, const AnalyzeParams& params = {});

double commutator_defect(const IntervalSet& s, const AnalyzeParams& params = {});

// Independent spectral pipeline: square roots of the eigenvalues of
// gram_via_kernel, descending.  Oracle for svd-based singular values.
std::vector<double> singular_values_via_gram(const IntervalSet& s, const Quadrature& q,
                                             Convention conv = Convention::analyst);

// int_{S\(-S)} |y|^2 - int_{(-S)\S} |y|^2 for y = F_S x, with x given by its
// samples on the resolved quadrature of S.  Vanishes identically (for all x)
// exactly when the operator is normal; note it vanishes for every *real* x
// regardless of S, so meaningful probes are complex.
double asymmetry_functional(const IntervalSet& s, std::span<const std::complex<double>> x_samples,
                            const AnalyzeParams& params = {});

// Largest eigenvalue of (1/pi) int_{[-l,l]} sin(l(t-tau))/(t-tau) x(tau) dtau
// via a symmetrized Nystrom matrix with ~n nodes.  Equals the squared
// operator norm of F_{[-l,l]}.  Note the time-bandwidth product of this
// operator is l^2: lambda0(l) here corresponds to the classical prolate
// eigenvalue at bandwidth parameter c = l^2, so the Fuchs regime at
// parameter c is reached through sinc_lambda0(sqrt(c)).
double sinc_lambda0(double l, int n);

// 4 sqrt(pi) sqrt(l) e^{-2l}; identical to 2 sqrt(2pi) (mes E)^{1/2} e^{-mes E}
// at mes E = 2l.
double fuchs_prediction(double l);

}  // namespace ftrunc
