#pragma once

// The explicit vectors on the truncated periodic set: members of the
// isometric subspace (||F_E x|| = ||x||) and of the null space (F_E x1 = 0),
// built from a smooth bump, its Fourier density and its periodization.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ftrunc/quadrature.hpp"

namespace ftrunc {

// exp(-a^2 / (a^2 - t^2)) for |t| < a, zero outside; u(0) = 1/e.
double bump_u(double a, double t);

// v with u(t) = int e^{i t xi} v(xi) dxi, i.e. v(xi) = (1/2pi) int u e^{-i t xi} dt,
// evaluated by a fixed quadrature over [-a, a].  Real and even.
class SpectralDensity {
 public:
  explicit SpectralDensity(double a, int order = 16, double panels_per_unit = 32.0);

  double operator()(double xi) const;
  double half_width() const { return a_; }

 private:
  double a_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> weighted_u_;  // w_k * u(t_k)
};

// sqrt(2pi)-periodic periodization of the bump; within one period its support
// is [-a, a], so the support over R is exactly the periodic set.
double periodized_phi(double a, double xi);

// Fourier coefficient of phi against e^{i p xi sqrt(2pi)}: sqrt(2pi) v(p sqrt(2pi)).
double fourier_coeff_c(const SpectralDensity& v, int p);

// Same coefficient through an independent route: periodic trapezoid rule over
// one period of phi.  Dual-path oracle for fourier_coeff_c.
double fourier_coeff_c_trapezoid(double a, int p, int samples = 4096);

struct BumpSpec {
  double a = 0.5;
  int P = 6;  // periods kept: |p| <= P
  int order = 8;
  double panels_per_unit = 8.0;
};

struct ConstructedVector {
  Quadrature quad;           // on periodic_set(a, P)
  Eigen::VectorXcd samples;  // x at the nodes
  double certification_ratio = 0.0;  // ||F_{E_P} x|| / ||x||
  double a = 0.0;
  int P = 0;
  double h = 0.0;  // modulation shift; 0 for the isometric vector
};

// x(xi) = sqrt(2pi) v(xi) phi(xi) on the truncated periodic set; the
// certification ratio tends to 1 from below as P grows.
ConstructedVector build_isometric_vector(const BumpSpec& spec);

// x1(xi) = x(xi) e^{-i h xi}.  Requires translate(E_P, h) and E_P disjoint
// (guaranteed for a < sqrt(pi/2)/2 at the default h = sqrt(2pi)/2); the
// certification ratio tends to 0.
ConstructedVector build_null_vector(const BumpSpec& spec, double h);

// The two representations of y = F x for the un-truncated construction,
// evaluated at the given points: the lattice series sum_p c_p u(t + p sqrt(2pi))
// (series_periods terms each side) and the spectral integral
// int e^{i t xi} v(xi) phi(xi) dxi over |p| <= window_periods periods.
Eigen::VectorXcd y_bump_series(const SpectralDensity& v, double a, std::span<const double> t,
                               int series_periods);
Eigen::VectorXcd y_spectral_integral(const SpectralDensity& v, double a, std::span<const double> t,
                                     int window_periods, int order = 8,
                                     double panels_per_unit = 8.0);

}  // namespace ftrunc
