#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "ftrunc/operators.hpp"
#include "ftrunc/quadrature.hpp"

using namespace ftrunc;

namespace {

std::complex<double> integrate_exp(const Quadrature& q, double omega) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k)
    acc += q.weights[k] * std::exp(std::complex<double>(0.0, omega * q.nodes[k]));
  return acc;
}

}  // namespace

TEST_CASE("gauss nodes reproduce known low orders") {
  const auto& r2 = gauss_legendre(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto& r3 = gauss_legendre(3);
  CHECK(r3.nodes[1] == doctest::Approx(0.0));
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(1), std::invalid_argument);
}

TEST_CASE("basic panel layout") {
  const auto s = IntervalSet::normalized({{0, 1}});
  const Quadrature q = build_quadrature(s, 4, 1.0);
  CHECK(q.size() == 4);
  double total = 0.0;
  for (double w : q.weights) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(build_quadrature(IntervalSet{}, 8, 4.0).size() == 0);
}

TEST_CASE("weights positive, nodes inside the set") {
  const auto s = IntervalSet::normalized({{-1.5, -0.25}, {0.5, 2}});
  const Quadrature q = build_quadrature(s, 8, 4.0);
  double total = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    CHECK(q.weights[k] > 0.0);
    CHECK(s.contains(q.nodes[k]));
    total += q.weights[k];
  }
  CHECK(total == doctest::Approx(s.measure()).epsilon(1e-14));
}

TEST_CASE("polynomial exactness up to degree 2*order-1") {
  const auto s = IntervalSet::normalized({{-0.3, 1.1}});
  const int order = 5;
  const Quadrature q = build_quadrature(s, order, 1.0);
  for (int deg = 0; deg <= 2 * order - 1; ++deg) {
    double acc = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) acc += q.weights[k] * std::pow(q.nodes[k], deg);
    const double exact = (std::pow(1.1, deg + 1) - std::pow(-0.3, deg + 1)) / (deg + 1);
    CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("odd integrand on symmetric set vanishes") {
  const auto s = IntervalSet::normalized({{-1, 1}});
  const Quadrature q = build_quadrature(s, 4, 1.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) acc += q.weights[k] * q.nodes[k];
  CHECK(std::abs(acc) < 1e-15);
}

TEST_CASE("oscillatory integral against closed-form antiderivative") {
  const auto s = IntervalSet::normalized({{0.0, 2.0 * std::numbers::pi}});
  const Quadrature q = build_quadrature(s, 8, 4.0);
  CHECK(std::abs(integrate_exp(q, 1.0)) < 1e-10);  // exact value 0
}

TEST_CASE("resolution contract against kernel closed form") {
  // At the refined default resolution (order 8, 8 panels per unit after one
  // doubling), e^{i omega t} integrates to the closed form well below 1e-10
  // throughout the operating band |omega| <= diameter of the sets used here.
  const auto s = IntervalSet::normalized({{-1.0, 0.2}, {0.7, 2.0}});
  const Quadrature q = build_quadrature(s, 8, 8.0);
  for (double omega : {0.0, 0.5, 1.0, 3.0, 7.0, 12.0, 16.0}) {
    const std::complex<double> exact = kernel_K(s, omega, Convention::paper_raw);
    CHECK(std::abs(integrate_exp(q, omega) - exact) < 1e-10);
  }
}

TEST_CASE("quadrature error grows past the resolved band") {
  // Sanity on the contract direction: a deliberately coarse rule misses a
  // frequency far beyond its band.
  const auto s = IntervalSet::normalized({{0, 4}});
  const Quadrature coarse = build_quadrature(s, 2, 0.5);
  const std::complex<double> exact = kernel_K(s, 40.0, Convention::paper_raw);
  CHECK(std::abs(integrate_exp(coarse, 40.0) - exact) > 1e-3);
}
