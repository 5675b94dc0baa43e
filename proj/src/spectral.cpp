#include "ftrunc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftrunc {

namespace {

const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);

double gram_frobenius(const IntervalSet& s, const Quadrature& q) {
  // ||G||_F for the analyst gram, accumulated without storing the matrix.
  double acc = 0.0;
  const auto n = q.size();
  const double k0 = kernel_K(s, 0.0, Convention::analyst).real();
  for (std::size_t m = 0; m < n; ++m) {
    acc += q.weights[m] * q.weights[m] * k0 * k0;
    for (std::size_t k = m + 1; k < n; ++k) {
      const double u = q.nodes[k] - q.nodes[m];
      acc += 2.0 * q.weights[m] * q.weights[k] * std::norm(kernel_K(s, u, Convention::analyst));
    }
  }
  return std::sqrt(acc);
}

Eigen::VectorXd singular_values_only(const Eigen::MatrixXcd& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(m);
  return dec.singularValues();
}

}  // namespace

SvdResult svd(const DiscreteOperator& op) {
  if (!op.matrix.allFinite())
    throw std::invalid_argument("svd: matrix has non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(op.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {dec.singularValues(), dec.matrixU(), dec.matrixV()};
}

Quadrature resolve_quadrature(const IntervalSet& s, const AnalyzeParams& params,
                              ResolutionInfo* info) {
  double ppu = params.panels_per_unit;
  Quadrature q = build_quadrature(s, params.order, ppu);
  ResolutionInfo res{params.order, ppu, 0, q.size(), true};
  if (params.auto_refine && !s.empty()) {
    double prev = gram_frobenius(s, q);
    res.converged = false;
    for (int r = 0; r < params.max_refinements; ++r) {
      ppu *= 2.0;
      Quadrature fine = build_quadrature(s, params.order, ppu);
      const double cur = gram_frobenius(s, fine);
      q = std::move(fine);
      res.panels_per_unit = ppu;
      res.refinements = r + 1;
      res.nodes = q.size();
      if (std::abs(cur - prev) <= 1e-8 * std::max(cur, 1e-300)) {
        res.converged = true;
        break;
      }
      prev = cur;
    }
  }
  if (info) *info = res;
  return q;
}

SpectralReport analyze(const IntervalSet& s, const AnalyzeParams& params) {
  if (s.empty() || s.measure() <= 0.0)
    throw std::invalid_argument("analyze: set must have positive measure");
  SpectralReport rep;
  rep.convention = params.convention;
  Quadrature q = resolve_quadrature(s, params, &rep.resolution);
  const DiscreteOperator f = discretize_F(s, q);

  Eigen::VectorXd sv = singular_values_only(f.matrix);
  const double scale = params.convention == Convention::paper_raw ? sqrt_2pi : 1.0;
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  for (double& v : rep.singular_values) v *= scale;
  rep.operator_norm = rep.singular_values.empty() ? 0.0 : rep.singular_values.front();
  double sum = 0.0, sum2 = 0.0;
  for (double v : rep.singular_values) {
    sum += v;
    sum2 += v * v;
  }
  rep.nuclear_norm = sum;
  rep.hs_norm = std::sqrt(sum2);

  const Eigen::MatrixXcd gram = f.matrix.adjoint() * f.matrix;
  const Eigen::MatrixXcd cogram = f.matrix * f.matrix.adjoint();
  rep.commutator_defect = (gram - cogram).norm() / gram.norm();
  return rep;
}

double commutator_defect(const IntervalSet& s, const AnalyzeParams& params) {
  if (s.empty() || s.measure() <= 0.0)
    throw std::invalid_argument("commutator_defect: set must have positive measure");
  Quadrature q = resolve_quadrature(s, params);
  const DiscreteOperator f = discretize_F(s, q);
  const Eigen::MatrixXcd gram = f.matrix.adjoint() * f.matrix;
  const Eigen::MatrixXcd cogram = f.matrix * f.matrix.adjoint();
  return (gram - cogram).norm() / gram.norm();
}

std::vector<double> singular_values_via_gram(const IntervalSet& s, const Quadrature& q,
                                             Convention conv) {
  const DiscreteOperator g = gram_via_kernel(s, q, Convention::analyst);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.matrix, Eigen::EigenvaluesOnly);
  const double scale = conv == Convention::paper_raw ? sqrt_2pi : 1.0;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i)
    out.push_back(scale * std::sqrt(std::max(0.0, es.eigenvalues()(i))));
  return out;
}

double asymmetry_functional(const IntervalSet& s, std::span<const std::complex<double>> x_samples,
                            const AnalyzeParams& params) {
  ResolutionInfo info;
  Quadrature q = resolve_quadrature(s, params, &info);
  if (x_samples.size() != q.size())
    throw std::invalid_argument("asymmetry_functional: sample count must match quadrature");
  const IntervalSet mirror = negate(s);
  const IntervalSet plus = set_difference(s, mirror);
  const IntervalSet minus = set_difference(mirror, s);
  const auto integrate = [&](const IntervalSet& region) {
    if (region.empty()) return 0.0;
    Quadrature rq = build_quadrature(region, params.order, info.panels_per_unit);
    double acc = 0.0;
    for (std::size_t m = 0; m < rq.size(); ++m) {
      std::complex<double> y = 0.0;
      for (std::size_t k = 0; k < q.size(); ++k) {
        const double phase = rq.nodes[m] * q.nodes[k];
        y += q.weights[k] * std::complex<double>(std::cos(phase), std::sin(phase)) * x_samples[k];
      }
      acc += rq.weights[m] * std::norm(y / sqrt_2pi);
    }
    return acc;
  };
  return integrate(plus) - integrate(minus);
}

double sinc_lambda0(double l, int n) {
  if (!(l > 0.0)) throw std::invalid_argument("sinc_lambda0: l must be positive");
  if (n < 64) throw std::invalid_argument("sinc_lambda0: need at least 64 nodes");
  const int order = 8;
  const double panels = std::ceil(static_cast<double>(n) / order);
  const IntervalSet domain = IntervalSet::normalized({{-l, l}});
  const Quadrature q = build_quadrature(domain, order, panels / (2.0 * l));
  const auto size = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXd g(size, size);
  for (Eigen::Index m = 0; m < size; ++m) {
    const double tm = q.nodes[static_cast<std::size_t>(m)];
    const double swm = std::sqrt(q.weights[static_cast<std::size_t>(m)]);
    for (Eigen::Index k = m; k < size; ++k) {
      const double u = tm - q.nodes[static_cast<std::size_t>(k)];
      const double swk = std::sqrt(q.weights[static_cast<std::size_t>(k)]);
      double kernel;
      if (std::abs(u) * l < 1e-8) {
        kernel = l / std::numbers::pi * (1.0 - (l * u) * (l * u) / 6.0);
      } else {
        kernel = std::sin(l * u) / (std::numbers::pi * u);
      }
      g(m, k) = swm * swk * kernel;
      g(k, m) = g(m, k);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(size - 1);
}

double fuchs_prediction(double l) {
  if (!(l > 0.0)) throw std::invalid_argument("fuchs_prediction: l must be positive");
  return 4.0 * std::sqrt(std::numbers::pi) * std::sqrt(l) * std::exp(-2.0 * l);
}

}  // namespace ftrunc
