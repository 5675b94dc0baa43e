#include "ftrunc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace ftrunc {

namespace {
const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
constexpr double two_pi_v = 2.0 * std::numbers::pi;
}  // namespace

double criterion_sum(const IntervalSet& s) {
  double total = 0.0;
  for (const auto& [j, cell] : unit_cells(s)) total += std::sqrt(cell.measure());
  return total;
}

std::pair<double, double> trace_norm_bounds(const IntervalSet& s, Convention conv) {
  const double m = s.measure();
  const double c2 = criterion_sum(s) * criterion_sum(s);
  const double upper_raw = std::exp(0.25) * c2;
  if (conv == Convention::paper_raw) return {m * m, upper_raw};
  return {m * m / two_pi_v, upper_raw / sqrt_2pi};
}

double block_trace_bound(const IntervalSet& s1, const IntervalSet& s2, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("block_trace_bound: R must be positive");
  const IntervalSet box = IntervalSet::normalized({{-R, R}});
  if (!set_difference(s1, box).empty() || !set_difference(s2, box).empty())
    throw std::invalid_argument("block_trace_bound: sets must lie inside [-R, R]");
  return std::sqrt(s1.measure()) * std::sqrt(s2.measure()) * std::exp(R * R);
}

double block_nuclear_raw(const IntervalSet& s1, const IntervalSet& s2, int order,
                         double panels_per_unit) {
  if (s1.empty() || s2.empty()) return 0.0;
  const Quadrature qc = build_quadrature(s1, order, panels_per_unit);  // input side
  const Quadrature qr = build_quadrature(s2, order, panels_per_unit);  // output side
  Eigen::MatrixXcd b(qr.size(), qc.size());
  for (std::size_t m = 0; m < qr.size(); ++m) {
    const double swm = std::sqrt(qr.weights[m]);
    for (std::size_t k = 0; k < qc.size(); ++k) {
      const double phase = qr.nodes[m] * qc.nodes[k];
      b(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
          swm * std::sqrt(qc.weights[k]) *
          std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(b);
  return dec.singularValues().sum();
}

double nazarov_contraction_bound(const IntervalSet& s, double A) {
  if (!(A >= 1.0)) throw std::invalid_argument("nazarov bound requires 1 <= A");
  const double m = s.measure();
  return 1.0 - std::exp(-A * m * m) / A;
}

double hs_majorization_bound(const IntervalSet& s, Convention conv) {
  return conv == Convention::paper_raw ? s.measure() : s.measure() / sqrt_2pi;
}

namespace {

// C-infinity step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

// Mollified indicator of S with edge width eta, supported strictly inside S.
double mollified_indicator(const IntervalSet& s, double eta, double xi) {
  for (const auto& iv : s.intervals()) {
    if (xi <= iv.lo || xi >= iv.hi) continue;
    const double w = std::min(eta, 0.45 * iv.length());
    return smooth_step((xi - iv.lo) / w) * smooth_step((iv.hi - xi) / w);
  }
  return 0.0;
}

}  // namespace

std::vector<TestFunction> nazarov_family(const IntervalSet& e, const IntervalSet& f,
                                         const NazarovFamilySpec& spec) {
  if (spec.members <= 0) throw std::invalid_argument("family must be nonempty");
  std::vector<TestFunction> family;
  family.reserve(static_cast<std::size_t>(spec.members));
  std::mt19937 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const IntervalSet joined = set_union(e, f);
  const double lo = joined.lo(), hi = joined.hi();
  const int n_indicator = spec.members / 2;
  const double eta_ladder[] = {0.02, 0.05, 0.1, 0.2, 0.35};
  for (int i = 0; i < n_indicator; ++i) {
    const double eta = eta_ladder[i % 5];
    const double c = -3.0 + 6.0 * unit(rng);
    IntervalSet target = e;
    family.push_back({"mollified_indicator",
                      [target, eta, c](double xi) {
                        return mollified_indicator(target, eta, xi) *
                               std::complex<double>(std::cos(c * xi), std::sin(c * xi));
                      }});
  }
  for (int i = n_indicator; i < spec.members; ++i) {
    const double mu = lo - 1.0 + (hi - lo + 2.0) * unit(rng);
    const double sigma = 0.15 * std::pow(10.0, unit(rng));  // 0.15 .. 1.5
    const double c = -3.0 + 6.0 * unit(rng);
    family.push_back({"gaussian",
                      [mu, sigma, c](double xi) {
                        const double g = std::exp(-(xi - mu) * (xi - mu) / (2.0 * sigma * sigma));
                        return g * std::complex<double>(std::cos(c * xi), std::sin(c * xi));
                      }});
  }
  return family;
}

std::vector<TestFunction> nazarov_family_supported(const IntervalSet& e,
                                                   const NazarovFamilySpec& spec) {
  if (spec.members <= 0) throw std::invalid_argument("family must be nonempty");
  std::vector<TestFunction> family;
  family.reserve(static_cast<std::size_t>(spec.members));
  std::mt19937 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lo = e.lo(), hi = e.hi();
  for (int i = 0; i < spec.members; ++i) {
    const double eta = 0.02 + 0.4 * unit(rng);
    const double c = -3.0 + 6.0 * unit(rng);
    if (i % 2 == 0) {
      IntervalSet target = e;
      family.push_back({"mollified_indicator",
                        [target, eta, c](double xi) {
                          return mollified_indicator(target, eta, xi) *
                                 std::complex<double>(std::cos(c * xi), std::sin(c * xi));
                        }});
    } else {
      // Gaussian profile times the mollified indicator keeps support in E.
      const double mu = lo + (hi - lo) * unit(rng);
      const double sigma = 0.1 + 1.4 * unit(rng);
      IntervalSet target = e;
      family.push_back({"clipped_gaussian",
                        [target, eta, c, mu, sigma](double xi) {
                          const double g =
                              std::exp(-(xi - mu) * (xi - mu) / (2.0 * sigma * sigma));
                          return g * mollified_indicator(target, eta, xi) *
                                 std::complex<double>(std::cos(c * xi), std::sin(c * xi));
                        }});
    }
  }
  return family;
}

NazarovEstimate nazarov_empirical(const IntervalSet& e, const IntervalSet& f,
                                  const NazarovFamilySpec& spec) {
  const auto family = nazarov_family(e, f, spec);
  const IntervalSet joined = set_union(e, f);
  const IntervalSet window = IntervalSet::normalized(
      {{joined.lo() - spec.window_inflate, joined.hi() + spec.window_inflate}});
  const Quadrature qw = build_quadrature(window, spec.order, spec.panels_per_unit);
  const Quadrature qe = build_quadrature(e, spec.order, 2.0 * spec.panels_per_unit);
  const Quadrature qf = build_quadrature(f, spec.order, 2.0 * spec.panels_per_unit);

  NazarovEstimate est;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& x = family[i].eval;
    double norm_sq = 0.0;
    std::vector<std::complex<double>> xw(qw.size());
    for (std::size_t k = 0; k < qw.size(); ++k) {
      xw[k] = x(qw.nodes[k]);
      norm_sq += qw.weights[k] * std::norm(xw[k]);
    }
    if (norm_sq <= 0.0) continue;
    double f_mass = 0.0;
    for (std::size_t k = 0; k < qf.size(); ++k)
      f_mass += qf.weights[k] * std::norm(x(qf.nodes[k]));
    double e_mass = 0.0;
    for (std::size_t m = 0; m < qe.size(); ++m) {
      std::complex<double> y = 0.0;
      for (std::size_t k = 0; k < qw.size(); ++k) {
        const double phase = qe.nodes[m] * qw.nodes[k];
        y += qw.weights[k] * std::complex<double>(std::cos(phase), std::sin(phase)) * xw[k];
      }
      e_mass += qe.weights[m] * std::norm(y / sqrt_2pi);
    }
    const double denom = std::max((norm_sq - e_mass) + (norm_sq - f_mass), 1e-14 * norm_sq);
    const double r = norm_sq / denom;
    if (r > est.max_ratio) {
      est.max_ratio = r;
      est.argmax_member = static_cast<int>(i);
    }
  }
  // Solve A e^{A mesE mesF} = max_ratio (strictly increasing in A).
  const double mm = e.measure() * f.measure();
  double lo = 0.0, hi = 1.0;
  auto value = [mm](double A) { return A * std::exp(A * mm); };
  while (value(hi) < est.max_ratio) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) < est.max_ratio ? lo : hi) = mid;
  }
  est.implied_lower_bound_A = 0.5 * (lo + hi);
  return est;
}

double concentration_ratio(const IntervalSet& e, const TestFunction& x, int order,
                           double panels_per_unit) {
  const Quadrature q = build_quadrature(e, order, panels_per_unit);
  const DiscreteOperator op = discretize_F(e, q);
  Eigen::VectorXcd coeff(static_cast<Eigen::Index>(q.size()));
  for (std::size_t k = 0; k < q.size(); ++k)
    coeff(static_cast<Eigen::Index>(k)) = std::sqrt(q.weights[k]) * x.eval(q.nodes[k]);
  const double denom = coeff.squaredNorm();
  if (denom <= 0.0) throw std::invalid_argument("test function vanishes on E");
  return (op.matrix * coeff).squaredNorm() / denom;
}

BoundsReport bounds_report(const IntervalSet& s, double A, int max_block_pairs, unsigned seed) {
  BoundsReport rep;
  rep.measure = s.measure();
  rep.criterion_sum = criterion_sum(s);
  std::tie(rep.trace_lower_analyst, rep.trace_upper_analyst) =
      trace_norm_bounds(s, Convention::analyst);
  std::tie(rep.trace_lower_raw, rep.trace_upper_raw) =
      trace_norm_bounds(s, Convention::paper_raw);
  rep.hs_majorization_analyst = hs_majorization_bound(s, Convention::analyst);
  rep.hs_majorization_raw = hs_majorization_bound(s, Convention::paper_raw);
  rep.nazarov_A = A;
  rep.nazarov_bound = nazarov_contraction_bound(s, A);

  const auto cells = unit_cells(s);
  if (!cells.empty() && max_block_pairs > 0) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    for (int i = 0; i < max_block_pairs; ++i) {
      const auto& [p, sp] = cells[pick(rng)];
      const auto& [q, sq] = cells[pick(rng)];
      BlockBoundEntry entry;
      entry.p = p;
      entry.q = q;
      entry.bound = std::exp(0.25) * std::sqrt(sp.measure()) * std::sqrt(sq.measure());
      entry.nuclear_raw = block_nuclear_raw(sp, sq);
      rep.block_bounds.push_back(entry);
    }
  }
  return rep;
}

}  // namespace ftrunc
