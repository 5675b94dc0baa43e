#pragma once

// Composite Gauss-Legendre quadrature tiling an interval set, used to
// discretize the L^2(E) inner product.

#include <cstddef>
#include <vector>

#include "ftrunc/interval_set.hpp"

namespace ftrunc {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Nodes/weights of the n-point rule, computed by Newton iteration on the
// Legendre recurrence and cached per order.
const GaussRule& gauss_legendre(int order);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  IntervalSet domain;

  std::size_t size() const { return nodes.size(); }
};

// Splits every interval of S into ceil(length * panels_per_unit) panels and
// places a Gauss-Legendre rule of the given order on each.  An empty set
// yields an empty quadrature.
Quadrature build_quadrature(const IntervalSet& s, int order, double panels_per_unit);

}  // namespace ftrunc
