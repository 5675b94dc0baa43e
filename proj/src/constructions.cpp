#include "ftrunc/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftrunc/operators.hpp"

namespace ftrunc {

namespace {
const double period = std::sqrt(2.0 * std::numbers::pi);
const double sqrt_2pi = period;
}  // namespace

double bump_u(double a, double t) {
  if (!(a > 0.0)) throw std::invalid_argument("bump_u: half-width must be positive");
  if (std::abs(t) >= a) return 0.0;
  return std::exp(-a * a / (a * a - t * t));
}

SpectralDensity::SpectralDensity(double a, int order, double panels_per_unit) : a_(a) {
  const IntervalSet support = IntervalSet::normalized({{-a, a}});
  const Quadrature q = build_quadrature(support, order, panels_per_unit * std::max(1.0, 1.0 / (2.0 * a)));
  nodes_ = q.nodes;
  weighted_u_.resize(q.size());
  for (std::size_t k = 0; k < q.size(); ++k)
    weighted_u_[k] = q.weights[k] * bump_u(a, q.nodes[k]);
}

double SpectralDensity::operator()(double xi) const {
  // u is real and even, so only the cosine part survives.
  double acc = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    acc += weighted_u_[k] * std::cos(nodes_[k] * xi);
  return acc / (2.0 * std::numbers::pi);
}

double periodized_phi(double a, double xi) {
  const double folded = xi - std::round(xi / period) * period;
  return bump_u(a, folded);
}

double fourier_coeff_c(const SpectralDensity& v, int p) {
  return sqrt_2pi * v(static_cast<double>(p) * period);
}

double fourier_coeff_c_trapezoid(double a, int p, int samples) {
  // Periodic integrand, so the uniform trapezoid rule converges spectrally.
  double acc = 0.0;
  const double step = period / samples;
  for (int k = 0; k < samples; ++k) {
    const double xi = -0.5 * period + (k + 0.5) * step;
    acc += periodized_phi(a, xi) * std::cos(p * period * xi);
  }
  return acc * step / sqrt_2pi;
}

namespace {

ConstructedVector build_vector(const BumpSpec& spec, double h) {
  if (!(spec.a > 0.0 && spec.a < std::sqrt(std::numbers::pi / 2.0)))
    throw std::invalid_argument("bump half-width must satisfy 0 < a < sqrt(pi/2)");
  const IntervalSet e_p = periodic_set(spec.a, spec.P);
  ConstructedVector out;
  out.a = spec.a;
  out.P = spec.P;
  out.h = h;
  out.quad = build_quadrature(e_p, spec.order, spec.panels_per_unit);
  const SpectralDensity v(spec.a);
  const auto n = static_cast<Eigen::Index>(out.quad.size());
  out.samples.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double xi = out.quad.nodes[static_cast<std::size_t>(k)];
    const double x = sqrt_2pi * v(xi) * periodized_phi(spec.a, xi);
    out.samples(k) = x * std::complex<double>(std::cos(h * xi), -std::sin(h * xi));
  }
  const DiscreteOperator f = discretize_F(e_p, out.quad);
  Eigen::VectorXcd coeff(n);
  for (Eigen::Index k = 0; k < n; ++k)
    coeff(k) = std::sqrt(out.quad.weights[static_cast<std::size_t>(k)]) * out.samples(k);
  const double norm = coeff.norm();
  if (norm <= 0.0) throw std::logic_error("constructed vector has zero norm");
  out.certification_ratio = (f.matrix * coeff).norm() / norm;
  return out;
}

}  // namespace

ConstructedVector build_isometric_vector(const BumpSpec& spec) {
  return build_vector(spec, 0.0);
}

ConstructedVector build_null_vector(const BumpSpec& spec, double h) {
  const IntervalSet e_p = periodic_set(spec.a, spec.P);
  if (set_intersection(translate(e_p, h), e_p).measure() > 0.0)
    throw std::invalid_argument("null vector requires (E_P + h) and E_P disjoint");
  return build_vector(spec, h);
}

Eigen::VectorXcd y_bump_series(const SpectralDensity& v, double a, std::span<const double> t,
                               int series_periods) {
  Eigen::VectorXcd y(static_cast<Eigen::Index>(t.size()));
  for (std::size_t m = 0; m < t.size(); ++m) {
    double acc = 0.0;
    for (int p = -series_periods; p <= series_periods; ++p)
      acc += fourier_coeff_c(v, p) * bump_u(a, t[m] + p * period);
    y(static_cast<Eigen::Index>(m)) = acc;
  }
  return y;
}

Eigen::VectorXcd y_spectral_integral(const SpectralDensity& v, double a, std::span<const double> t,
                                     int window_periods, int order, double panels_per_unit) {
  const IntervalSet window = periodic_set(a, window_periods);
  const Quadrature q = build_quadrature(window, order, panels_per_unit);
  std::vector<double> vphi(q.size());
  for (std::size_t k = 0; k < q.size(); ++k)
    vphi[k] = q.weights[k] * v(q.nodes[k]) * periodized_phi(a, q.nodes[k]);
  Eigen::VectorXcd y(static_cast<Eigen::Index>(t.size()));
  for (std::size_t m = 0; m < t.size(); ++m) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double phase = t[m] * q.nodes[k];
      acc += vphi[k] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    y(static_cast<Eigen::Index>(m)) = acc;
  }
  return y;
}

}  // namespace ftrunc
