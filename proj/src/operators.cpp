#include "ftrunc/operators.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ftrunc {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
const double inv_sqrt_2pi = 1.0 / std::sqrt(two_pi);
}  // namespace

const char* to_string(Convention c) {
  return c == Convention::analyst ? "analyst" : "paper-raw";
}

Convention convention_from_string(std::string_view name) {
  if (name == "analyst") return Convention::analyst;
  if (name == "paper-raw" || name == "paper_raw") return Convention::paper_raw;
  throw std::invalid_argument("unknown convention: " + std::string(name));
}

std::complex<double> kernel_K(const IntervalSet& s, double u, Convention conv) {
  std::complex<double> sum = 0.0;
  const double scale = s.empty() ? 1.0 : std::max({1.0, std::abs(s.lo()), std::abs(s.hi())});
  if (std::abs(u) * scale < 1e-6) {
    for (const auto& iv : s.intervals()) {
      const double a = iv.lo, b = iv.hi;
      sum += std::complex<double>((b - a) - u * u * (b * b * b - a * a * a) / 6.0,
                                  u * (b * b - a * a) / 2.0);
    }
  } else {
    const std::complex<double> iu(0.0, u);
    for (const auto& iv : s.intervals())
      sum += (std::exp(iu * iv.hi) - std::exp(iu * iv.lo)) / iu;
  }
  return conv == Convention::analyst ? sum / two_pi : sum;
}

std::complex<double> convolution_kernel_h(const IntervalSet& s, double t) {
  return std::conj(kernel_K(s, t, Convention::analyst));
}

DiscreteOperator discretize_F(const IntervalSet& s, const Quadrature& q) {
  const auto n = static_cast<Eigen::Index>(q.size());
  DiscreteOperator op;
  op.row = q;
  op.col = q;
  op.matrix.resize(n, n);
  Eigen::VectorXd sw(n);
  for (Eigen::Index i = 0; i < n; ++i) sw(i) = std::sqrt(q.weights[static_cast<std::size_t>(i)]);
  for (Eigen::Index m = 0; m < n; ++m) {
    const double tm = q.nodes[static_cast<std::size_t>(m)];
    for (Eigen::Index k = 0; k < n; ++k) {
      const double phase = tm * q.nodes[static_cast<std::size_t>(k)];
      op.matrix(m, k) = sw(m) * sw(k) * inv_sqrt_2pi *
                        std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  return op;
}

DiscreteOperator discretize_F_adjoint(const IntervalSet& s, const Quadrature& q) {
  DiscreteOperator op = discretize_F(s, q);
  op.matrix = op.matrix.adjoint().eval();
  return op;
}

DiscreteOperator gram_via_kernel(const IntervalSet& s, const Quadrature& q, Convention conv) {
  const auto n = static_cast<Eigen::Index>(q.size());
  DiscreteOperator op;
  op.row = q;
  op.col = q;
  op.matrix.resize(n, n);
  Eigen::VectorXd sw(n);
  for (Eigen::Index i = 0; i < n; ++i) sw(i) = std::sqrt(q.weights[static_cast<std::size_t>(i)]);
  // The kernel of F_E* F_E is K_E(s - t); with the i/j orientation below the
  // matrix matches M^H M entrywise, and it is Hermitian since K(-u) = conj K(u).
  for (Eigen::Index m = 0; m < n; ++m) {
    op.matrix(m, m) = sw(m) * sw(m) * kernel_K(s, 0.0, conv).real();
    for (Eigen::Index k = m + 1; k < n; ++k) {
      const double u = q.nodes[static_cast<std::size_t>(k)] - q.nodes[static_cast<std::size_t>(m)];
      const std::complex<double> val = sw(m) * sw(k) * kernel_K(s, u, conv);
      op.matrix(m, k) = val;
      op.matrix(k, m) = std::conj(val);
    }
  }
  return op;
}

DiscreteOperator discretize_C(const IntervalSet& s, Interval window,
                              const Quadrature& window_quad) {
  if (s.empty()) throw std::invalid_argument("discretize_C needs a non-empty set");
  if (window.lo > s.lo() || window.hi < s.hi())
    throw std::invalid_argument("window must contain the bounding box of the set");
  const auto n = static_cast<Eigen::Index>(window_quad.size());
  DiscreteOperator op;
  op.row = window_quad;
  op.col = window_quad;
  op.matrix.resize(n, n);
  Eigen::VectorXd sw(n);
  std::vector<bool> in_set(window_quad.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    sw(i) = std::sqrt(window_quad.weights[static_cast<std::size_t>(i)]);
    in_set[static_cast<std::size_t>(i)] = s.contains(window_quad.nodes[static_cast<std::size_t>(i)]);
  }
  for (Eigen::Index m = 0; m < n; ++m) {
    const double tm = window_quad.nodes[static_cast<std::size_t>(m)];
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!in_set[static_cast<std::size_t>(k)]) {
        op.matrix(m, k) = 0.0;
        continue;
      }
      const double xi = window_quad.nodes[static_cast<std::size_t>(k)];
      op.matrix(m, k) = sw(m) * sw(k) * convolution_kernel_h(s, tm - xi);
    }
  }
  return op;
}

namespace {

nlohmann::json quad_to_json(const Quadrature& q) {
  nlohmann::json j;
  j["set"] = to_literal(q.domain);
  j["nodes"] = q.nodes;
  j["weights"] = q.weights;
  return j;
}

Quadrature quad_from_json(const nlohmann::json& j) {
  Quadrature q;
  q.domain = parse_literal(j.at("set").get<std::string>());
  q.nodes = j.at("nodes").get<std::vector<double>>();
  q.weights = j.at("weights").get<std::vector<double>>();
  if (q.nodes.size() != q.weights.size())
    throw std::invalid_argument("node/weight length mismatch");
  return q;
}

}  // namespace

void save_operator_json(const DiscreteOperator& op, std::ostream& out) {
  nlohmann::json j;
  j["rows"] = op.matrix.rows();
  j["cols"] = op.matrix.cols();
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(2 * op.matrix.size()));
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) {
      data.push_back(op.matrix(r, c).real());
      data.push_back(op.matrix(r, c).imag());
    }
  j["data"] = std::move(data);
  j["quad_row"] = quad_to_json(op.row);
  j["quad_col"] = quad_to_json(op.col);
  out << j.dump();
}

DiscreteOperator load_operator_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  DiscreteOperator op;
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (data.size() != static_cast<std::size_t>(2 * rows * cols))
    throw std::invalid_argument("operator data length mismatch");
  op.matrix.resize(rows, cols);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      op.matrix(r, c) = {data[i], data[i + 1]};
      i += 2;
    }
  op.row = quad_from_json(j.at("quad_row"));
  op.col = quad_from_json(j.at("quad_col"));
  return op;
}

namespace {
constexpr char binary_magic[8] = {'f', 't', 'o', 'p', 'd', 'u', 'm', 'p'};

void write_doubles(std::ostream& out, const double* p, std::size_t n) {
  out.write(reinterpret_cast<const char*>(p), static_cast<std::streamsize>(n * sizeof(double)));
}

void read_doubles(std::istream& in, double* p, std::size_t n) {
  in.read(reinterpret_cast<char*>(p), static_cast<std::streamsize>(n * sizeof(double)));
  if (!in) throw std::runtime_error("truncated operator dump");
}
}  // namespace

void save_operator_binary(const DiscreteOperator& op, std::ostream& out) {
  out.write(binary_magic, sizeof(binary_magic));
  const std::uint64_t dims[2] = {static_cast<std::uint64_t>(op.matrix.rows()),
                                 static_cast<std::uint64_t>(op.matrix.cols())};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) {
      const double re_im[2] = {op.matrix(r, c).real(), op.matrix(r, c).imag()};
      write_doubles(out, re_im, 2);
    }
  const std::uint64_t nq[2] = {op.row.size(), op.col.size()};
  out.write(reinterpret_cast<const char*>(nq), sizeof(nq));
  write_doubles(out, op.row.nodes.data(), op.row.size());
  write_doubles(out, op.row.weights.data(), op.row.size());
  write_doubles(out, op.col.nodes.data(), op.col.size());
  write_doubles(out, op.col.weights.data(), op.col.size());
}

DiscreteOperator load_operator_binary(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, binary_magic, sizeof(magic)) != 0)
    throw std::runtime_error("not an operator dump");
  std::uint64_t dims[2];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  DiscreteOperator op;
  op.matrix.resize(static_cast<Eigen::Index>(dims[0]), static_cast<Eigen::Index>(dims[1]));
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) {
      double re_im[2];
      read_doubles(in, re_im, 2);
      op.matrix(r, c) = {re_im[0], re_im[1]};
    }
  std::uint64_t nq[2];
  in.read(reinterpret_cast<char*>(nq), sizeof(nq));
  op.row.nodes.resize(nq[0]);
  op.row.weights.resize(nq[0]);
  op.col.nodes.resize(nq[1]);
  op.col.weights.resize(nq[1]);
  read_doubles(in, op.row.nodes.data(), nq[0]);
  read_doubles(in, op.row.weights.data(), nq[0]);
  read_doubles(in, op.col.nodes.data(), nq[1]);
  read_doubles(in, op.col.weights.data(), nq[1]);
  return op;
}

}  // namespace ftrunc
