// SPDX-License-Identifier: Apache-2.0
//
// Single-layer boundary integral formulation on a closed analytic curve,
// discretized by the periodic trapezoidal rule with the logarithmic
// singularity split off and integrated exactly (Kress weights).

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tev/geometry.hpp"
#include "tev/types.hpp"

namespace tev::bem
{

using geometry::Vec2;

struct Discretization
{
  explicit Discretization(geometry::BoundaryCurve curve, int nodes = 120);

  geometry::BoundaryCurve curve;
  int nodes;
  std::vector<double> t;
  std::vector<Vec2> position;
  std::vector<Vec2> normal;
  std::vector<Vec2> velocity;
  std::vector<Vec2> acceleration;
  std::vector<double> speed;
  // R_m and ln(4 sin^2(t_m/2)) for parameter offset t_m = 2 pi m / nodes
  std::vector<double> log_weight;
  std::vector<double> log_kernel;
};

// Phi_tau(x, y) = (i/4) H_0(tau |x - y|)
Complex kernel_single_layer(Complex tau, const Vec2& x, const Vec2& y);

// d/dnu(x) Phi_tau(x, y)
Complex kernel_adjoint_double_layer(Complex tau, const Vec2& x, const Vec2& normal_x, const Vec2& y);

enum class OperatorKind
{
  single_layer,
  adjoint_double_layer,
};

struct OperatorBlock
{
  OperatorKind kind;
  Complex tau;
  Eigen::MatrixXcd matrix;
};

OperatorBlock assemble_block(OperatorKind kind, Complex tau, const Discretization& disc);

// S and D^T at one wavenumber; the Bessel evaluations are shared.
struct OperatorPair
{
  OperatorBlock single_layer;
  OperatorBlock adjoint_double_layer;
};
OperatorPair assemble_pair(Complex tau, const Discretization& disc);

// Rows: Dirichlet, Neumann, Laplacian and normal derivative of the Laplacian
// matching; columns: densities at the wavenumbers k q, i k q, k, i k with
// q = n^{1/4}.
struct BlockSystem
{
  Complex k;
  double n;
  int nodes;
  Eigen::MatrixXcd matrix;  // 4 nodes x 4 nodes
};

BlockSystem assemble_system(const Discretization& disc, const WaveContext& ctx, int threads = 1);

// Orthonormal trigonometric basis e^{i m t_j}/sqrt(N), |m| <= max_mode. The
// block system restricted to it drops the highest Fourier modes, on which the
// discrete operator is nearly singular for every k.
class ModalBasis
{
public:
  ModalBasis(int nodes, int max_mode);

  int nodes() const { return static_cast<int>(q_.rows()); }
  int max_mode() const { return max_mode_; }
  int size() const { return static_cast<int>(q_.cols()); }
  const Eigen::MatrixXcd& matrix() const { return q_; }

private:
  int max_mode_;
  Eigen::MatrixXcd q_;
};

// Q^H B Q blockwise; 4(2 max_mode + 1) square.
Eigen::MatrixXcd compress(const BlockSystem& system, const ModalBasis& basis);

}  // namespace tev::bem
