#pragma once

// Dense Nystrom discretizations of the truncated Fourier operator F_E, its
// adjoint, the gram operator F_E* F_E, and the convolution form C_E, together
// with the closed-form kernels they are built from.
//
// Two kernel conventions are first class:
//   analyst   - carries the 1/(2pi) that the composition of F_E and F_E*
//               produces, so singular values sit in [0, 1].
//   paper_raw - the bare kernel integral, 2pi times the analyst one; it
//               reproduces the literal values trace = (mes E)^2 and
//               ||F_E||_S2 = mes E.

#include <complex>
#include <iosfwd>

#include <Eigen/Dense>

#include "ftrunc/interval_set.hpp"
#include "ftrunc/quadrature.hpp"

namespace ftrunc {

enum class Convention { analyst, paper_raw };

const char* to_string(Convention c);
Convention convention_from_string(std::string_view name);

struct DiscreteOperator {
  Eigen::MatrixXcd matrix;  // rows follow `row` nodes, columns follow `col`
  Quadrature row;
  Quadrature col;
};

// K_E(u) = int_E e^{i xi u} dxi (paper_raw), divided by 2pi for analyst.
// Near u = 0 a 3-term Taylor expansion per interval avoids the 0/0.
std::complex<double> kernel_K(const IntervalSet& s, double u, Convention conv);

// h_E(t) = (1/2pi) int_E e^{-i xi t} dxi.
std::complex<double> convolution_kernel_h(const IntervalSet& s, double t);

// M[m,n] = sqrt(w_m) e^{i t_m t_n} sqrt(w_n) / sqrt(2pi).  The symmetric
// sqrt(w) weighting makes Euclidean norms of coefficient vectors match the
// discretized L^2(E) norm, so matrix singular values approximate s_j(F_E).
DiscreteOperator discretize_F(const IntervalSet& s, const Quadrature& q);

// Conjugate transpose of discretize_F by construction.
DiscreteOperator discretize_F_adjoint(const IntervalSet& s, const Quadrature& q);

// Gram of F_E built directly from the closed-form kernel; Hermitian PSD and
// entrywise equal to M^H M up to quadrature error (the dual-pipeline oracle).
DiscreteOperator gram_via_kernel(const IntervalSet& s, const Quadrature& q, Convention conv);

// C_E = F^{-1} P_E F P_E windowed to `window`; entries
// sqrt(w_m) h_E(t_m - xi_n) chi_E(xi_n) sqrt(w_n) on the window quadrature.
// The window must contain the bounding box of S.
DiscreteOperator discretize_C(const IntervalSet& s, Interval window,
                              const Quadrature& window_quad);

// Row-major dump with interleaved re/im, for cross-checks against other
// implementations.  JSON carries the quadrature; binary is a bare header
// plus little-endian doubles.
void save_operator_json(const DiscreteOperator& op, std::ostream& out);
DiscreteOperator load_operator_json(std::istream& in);
void save_operator_binary(const DiscreteOperator& op, std::ostream& out);
DiscreteOperator load_operator_binary(std::istream& in);

}  // namespace ftrunc
