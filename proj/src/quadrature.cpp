#include "ftrunc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ftrunc {

namespace {

// P_n(x) and P_n'(x) via the three-term recurrence.
void legendre(int n, double x, double& pol, double& der) {
  double pk = 1.0, pkp1 = x;
  for (int k = 1; k < n; ++k) {
    const double pkm1 = pk;
    pk = pkp1;
    pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
  }
  pol = pkp1;
  der = n * (x * pkp1 - pk) / (x * x - 1.0);
}

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pol = 0.0, der = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, pol, der);
      const double dx = pol / der;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, pol, der);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * der * der);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 2) throw std::invalid_argument("Gauss-Legendre order must be >= 2");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

Quadrature build_quadrature(const IntervalSet& s, int order, double panels_per_unit) {
  if (panels_per_unit <= 0.0)
    throw std::invalid_argument("panels_per_unit must be positive");
  const GaussRule& rule = gauss_legendre(order);
  Quadrature q;
  q.domain = s;
  for (const auto& iv : s.intervals()) {
    const auto panels =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(iv.length() * panels_per_unit)));
    const double step = iv.length() / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = iv.lo + step * static_cast<double>(p);
      const double mid = lo + 0.5 * step;
      const double half = 0.5 * step;
      for (int k = 0; k < order; ++k) {
        q.nodes.push_back(mid + half * rule.nodes[k]);
        q.weights.push_back(half * rule.weights[k]);
      }
    }
  }
  return q;
}

}  // namespace ftrunc
