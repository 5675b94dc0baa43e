#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"

#include "ftrunc/operators.hpp"
#include "ftrunc/spectral.hpp"

using namespace ftrunc;

namespace {
const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("kernel closed form") {
  const auto sym = IntervalSet::normalized({{-1.5, 1.5}});
  SUBCASE("analyst kernel of [-l,l] is sin(l u)/(pi u)") {
    for (double u : {0.3, 1.0, 2.7, -4.2}) {
      const auto k = kernel_K(sym, u, Convention::analyst);
      CHECK(k.real() == doctest::Approx(std::sin(1.5 * u) / (std::numbers::pi * u)).epsilon(1e-13));
      CHECK(std::abs(k.imag()) < 1e-15);
    }
  }
  SUBCASE("u = 0 gives the measure in the raw convention") {
    const auto s = IntervalSet::normalized({{0, 1}, {2, 3.5}});
    CHECK(kernel_K(s, 0.0, Convention::paper_raw).real() == doctest::Approx(2.5));
    CHECK(kernel_K(s, 0.0, Convention::analyst).real() == doctest::Approx(2.5 / two_pi));
  }
  SUBCASE("zero of sin at u = pi for [-1,1]") {
    const auto s = IntervalSet::normalized({{-1, 1}});
    CHECK(std::abs(kernel_K(s, std::numbers::pi, Convention::paper_raw)) < 1e-14);
  }
  SUBCASE("hermitian in u") {
    const auto s = IntervalSet::normalized({{0.2, 0.9}, {1.4, 2.0}});
    for (double u : {0.1, 0.77, 3.3}) {
      const auto k1 = kernel_K(s, u, Convention::analyst);
      const auto k2 = kernel_K(s, -u, Convention::analyst);
      CHECK(std::abs(k1 - std::conj(k2)) < 1e-15);
    }
  }
  SUBCASE("raw equals 2 pi times analyst") {
    const auto s = IntervalSet::normalized({{-0.7, 0.1}, {0.5, 1.1}});
    for (double u : {0.0, 1e-8, 0.4, 9.0}) {
      const auto raw = kernel_K(s, u, Convention::paper_raw);
      const auto an = kernel_K(s, u, Convention::analyst);
      CHECK(std::abs(raw - two_pi * an) <= 1e-14 * std::abs(raw));
    }
  }
  SUBCASE("taylor branch joins the exact formula continuously") {
    const auto s = IntervalSet::normalized({{-2, 3}});
    for (double u : {1e-7, 3e-7, 9e-7}) {
      const std::complex<double> iu(0.0, u);
      const auto exact = (std::exp(iu * 3.0) - std::exp(iu * -2.0)) / iu;
      CHECK(std::abs(kernel_K(s, u, Convention::paper_raw) - exact) < 1e-12);
    }
  }
}

TEST_CASE("convolution kernel h_E") {
  const auto unit = IntervalSet::normalized({{0, 1}});
  CHECK(convolution_kernel_h(unit, 0.0).real() == doctest::Approx(1.0 / two_pi));

  const auto sym = IntervalSet::normalized({{-2, 2}});
  for (double t : {0.5, 1.7, -3.0}) {
    CHECK(convolution_kernel_h(sym, t).real() ==
          doctest::Approx(std::sin(2.0 * t) / (std::numbers::pi * t)).epsilon(1e-13));
    CHECK(std::abs(convolution_kernel_h(sym, -t) - std::conj(convolution_kernel_h(sym, t))) <
          1e-15);
  }
  // O(1/t) decay for a bounded set
  CHECK(std::abs(convolution_kernel_h(unit, 200.0)) < 2.0 / 200.0);
}

TEST_CASE("discretize_F basics") {
  const auto s = IntervalSet::normalized({{-1, 1}});
  const Quadrature q = build_quadrature(s, 8, 4.0);
  const DiscreteOperator f = discretize_F(s, q);

  SUBCASE("complex symmetric since the kernel is symmetric in (t, xi)") {
    CHECK((f.matrix - f.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("frobenius norm equals mes E / sqrt(2 pi) by the weight identity") {
    CHECK(f.matrix.norm() == doctest::Approx(2.0 / sqrt_2pi).epsilon(1e-13));
  }
  SUBCASE("empty set gives an empty operator") {
    const Quadrature empty = build_quadrature(IntervalSet{}, 8, 4.0);
    CHECK(discretize_F(IntervalSet{}, empty).matrix.size() == 0);
  }
  SUBCASE("matvec approximates the integral transform at nodes") {
    // x(xi) = exp(-xi^2): (F x)(t) = closed form via direct fine quadrature
    Eigen::VectorXcd coeff(static_cast<Eigen::Index>(q.size()));
    for (std::size_t k = 0; k < q.size(); ++k)
      coeff(static_cast<Eigen::Index>(k)) =
          std::sqrt(q.weights[k]) * std::exp(-q.nodes[k] * q.nodes[k]);
    const Eigen::VectorXcd out = f.matrix * coeff;
    const Quadrature fine = build_quadrature(s, 12, 16.0);
    for (std::size_t m : {std::size_t{0}, q.size() / 2, q.size() - 1}) {
      std::complex<double> direct = 0.0;
      for (std::size_t k = 0; k < fine.size(); ++k)
        direct += fine.weights[k] * std::exp(-fine.nodes[k] * fine.nodes[k]) *
                  std::exp(std::complex<double>(0.0, q.nodes[m] * fine.nodes[k]));
      direct /= sqrt_2pi;
      const auto got = out(static_cast<Eigen::Index>(m)) / std::sqrt(q.weights[m]);
      CHECK(std::abs(got - direct) < 1e-10);
    }
  }
}

TEST_CASE("adjoint is the conjugate transpose exactly") {
  const auto s = IntervalSet::normalized({{0, 0.8}, {1.2, 2.1}});
  const Quadrature q = build_quadrature(s, 6, 3.0);
  const DiscreteOperator f = discretize_F(s, q);
  const DiscreteOperator fa = discretize_F_adjoint(s, q);
  CHECK((fa.matrix - f.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  // real even input on a symmetric set: F and F* agree on it
  const auto sym = IntervalSet::normalized({{-1, 1}});
  const Quadrature qs = build_quadrature(sym, 8, 4.0);
  Eigen::VectorXcd coeff(static_cast<Eigen::Index>(qs.size()));
  for (std::size_t k = 0; k < qs.size(); ++k)
    coeff(static_cast<Eigen::Index>(k)) =
        std::sqrt(qs.weights[k]) * std::cos(qs.nodes[k]);
  const DiscreteOperator fs = discretize_F(sym, qs);
  const DiscreteOperator fsa = discretize_F_adjoint(sym, qs);
  CHECK((fs.matrix * coeff - fsa.matrix * coeff).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gram via kernel matches the product pipeline") {
  const auto s = IntervalSet::normalized({{0, 1}});
  const Quadrature q = build_quadrature(s, 8, 4.0);
  const DiscreteOperator f = discretize_F(s, q);
  const DiscreteOperator g = gram_via_kernel(s, q, Convention::analyst);

  CHECK((g.matrix - f.matrix.adjoint() * f.matrix).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((g.matrix - g.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("trace reproduces (mes E)^2 / 2 pi exactly in the analyst convention") {
    CHECK(g.matrix.trace().real() == doctest::Approx(1.0 / two_pi).epsilon(1e-13));
    const DiscreteOperator raw = gram_via_kernel(s, q, Convention::paper_raw);
    CHECK(raw.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("path equivalence across a small family") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> point(-2.0, 2.0);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Interval> parts;
    for (int i = 0; i < 1 + trial % 3; ++i) {
      const double lo = point(rng);
      parts.push_back({lo, lo + 0.3 + 0.5 * std::abs(point(rng)) / 2.0});
    }
    const auto s = IntervalSet::normalized(std::move(parts));
    if (s.measure() > 4.0) continue;
    const Quadrature q = build_quadrature(s, 8, 4.0);
    const DiscreteOperator f = discretize_F(s, q);
    const DiscreteOperator g = gram_via_kernel(s, q, Convention::analyst);
    CHECK((g.matrix - f.matrix.adjoint() * f.matrix).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("gram of an interval matches the sinc kernel matrix") {
  const double l = 1.25;
  const auto s = IntervalSet::normalized({{-l, l}});
  const Quadrature q = build_quadrature(s, 8, 4.0);
  const DiscreteOperator g = gram_via_kernel(s, q, Convention::analyst);
  for (std::size_t m = 0; m < q.size(); m += 7) {
    for (std::size_t k = 0; k < q.size(); k += 5) {
      const double u = q.nodes[m] - q.nodes[k];
      const double sinc = m == k ? l / std::numbers::pi
                                 : std::sin(l * u) / (std::numbers::pi * u);
      const double expected = std::sqrt(q.weights[m] * q.weights[k]) * sinc;
      CHECK(g.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)).real() ==
            doctest::Approx(expected).epsilon(1e-12));
      CHECK(std::abs(g.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)).imag()) <
            1e-15);
    }
  }
}

TEST_CASE("windowed convolution operator") {
  const auto s = IntervalSet::normalized({{-1, 1}});
  const Interval window{-9.0, 9.0};
  const Quadrature wq = build_quadrature(IntervalSet::normalized({{window.lo, window.hi}}), 8, 4.0);
  const DiscreteOperator c = discretize_C(s, window, wq);

  SUBCASE("columns at nodes outside the set vanish") {
    for (std::size_t k = 0; k < wq.size(); ++k) {
      if (!s.contains(wq.nodes[k]))
        CHECK(c.matrix.col(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("row kernel samples sin(xi)/(pi xi) at t = 0") {
    // locate the row whose node is closest to zero
    std::size_t row = 0;
    for (std::size_t m = 1; m < wq.size(); ++m)
      if (std::abs(wq.nodes[m]) < std::abs(wq.nodes[row])) row = m;
    const double t0 = wq.nodes[row];
    for (std::size_t k = 0; k < wq.size(); k += 11) {
      if (!s.contains(wq.nodes[k])) continue;
      const double u = t0 - wq.nodes[k];
      const double expected = std::sin(u) / (std::numbers::pi * u) *
                              std::sqrt(wq.weights[row] * wq.weights[k]);
      CHECK(c.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(k)).real() ==
            doctest::Approx(expected).epsilon(1e-10));
    }
  }
  SUBCASE("window smaller than the set is rejected") {
    CHECK_THROWS_AS(discretize_C(s, Interval{-0.5, 9.0}, wq), std::invalid_argument);
  }
}

TEST_CASE("windowed C_E nuclear norm approaches the F_E nuclear norm") {
  // The window is a convergence parameter; at bbox +/- 32 the two unitarily
  // equivalent pipelines agree to within 2 percent.
  const auto s = IntervalSet::normalized({{0, 1}});
  const Quadrature q = build_quadrature(s, 8, 8.0);
  const SvdResult f_svd = svd(discretize_F(s, q));
  const double nuc_f = f_svd.singular_values.sum();

  const Interval window{s.lo() - 32.0, s.hi() + 32.0};
  const Quadrature wq =
      build_quadrature(IntervalSet::normalized({{window.lo, window.hi}}), 8, 4.0);
  const DiscreteOperator c = discretize_C(s, window, wq);
  // drop the zero columns before the SVD; they carry no singular mass
  std::vector<Eigen::Index> keep;
  for (std::size_t k = 0; k < wq.size(); ++k)
    if (s.contains(wq.nodes[k])) keep.push_back(static_cast<Eigen::Index>(k));
  Eigen::MatrixXcd thin(c.matrix.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) thin.col(static_cast<Eigen::Index>(k)) = c.matrix.col(keep[k]);
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(thin);
  const double nuc_c = dec.singularValues().sum();
  CHECK(std::abs(nuc_c - nuc_f) / nuc_f < 0.02);
}

TEST_CASE("operator serialization round trip") {
  const auto s = IntervalSet::normalized({{0, 0.5}, {0.75, 1.0}});
  const Quadrature q = build_quadrature(s, 4, 2.0);
  const DiscreteOperator f = discretize_F(s, q);

  SUBCASE("json") {
    std::stringstream buf;
    save_operator_json(f, buf);
    const DiscreteOperator back = load_operator_json(buf);
    CHECK((back.matrix - f.matrix).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.row.nodes == f.row.nodes);
    CHECK(back.col.weights == f.col.weights);
  }
  SUBCASE("binary") {
    std::stringstream buf;
    save_operator_binary(f, buf);
    const DiscreteOperator back = load_operator_binary(buf);
    CHECK((back.matrix - f.matrix).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.row.weights == f.row.weights);
    CHECK(back.col.nodes == f.col.nodes);
  }
}
