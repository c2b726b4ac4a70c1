// SPDX-License-Identifier: Apache-2.0
//
// Contour-integral eigensolver for holomorphic matrix functions M(z): all z
// inside a circle with M(z) singular, from two moments of M^{-1} V.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tev/types.hpp"

namespace tev::beyn
{

using MatrixFunction = std::function<Eigen::MatrixXcd(Complex)>;

struct ContourConfig
{
  Complex center{0.0, 0.0};
  double radius = 1.0;
  int quad_points = 96;
  int probe_cols = 24;  // clipped to the matrix dimension
  double rank_tol = 1e-4;
  double residual_tol = 1e-6;
  std::uint64_t rng_seed = 1;
  double cluster_radius = 1e-6;
  // Divide row i of M(z) by max_j |M_ij(center)|; the scales do not depend on
  // z, so the scaled function stays holomorphic.
  bool equilibrate_rows = true;
  double max_condition = 1e14;
  int threads = 1;

  void validate() const;
};

class BeynError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Moments
{
  Eigen::MatrixXcd a0;
  Eigen::MatrixXcd a1;
  std::vector<Complex> nodes;
  std::vector<double> condition;  // 1-norm condition estimate of M at each node
};

// Seeded complex Gaussian probe block, rows x cols.
Eigen::MatrixXcd probe_matrix(int rows, int cols, std::uint64_t seed);

// A_p = (1/N) sum_j z_j^p (z_j - mu) M(z_j)^{-1} V, p = 0, 1.
Moments moments(const MatrixFunction& m, const ContourConfig& cfg);

struct Candidate
{
  Complex value;
  Eigen::VectorXcd vector;
  double residual;  // ||M(z) v|| / (||M(z)||_F ||v||)
  bool inside;
};

// All eigenvalues of the reduced pencil with their residuals; the filters of
// solve() are recorded in the `inside` flag and the residual only.
std::vector<Candidate> extract(const Moments& mom, const MatrixFunction& m, const ContourConfig& cfg);

// moments + extract, keep candidates inside the contour with residual below
// residual_tol, cluster within cluster_radius, sort by real part.
std::vector<EigenResult> solve(const MatrixFunction& m, const ContourConfig& cfg);

// Row-scaled copy of m using its scales at cfg.center; identity if disabled.
MatrixFunction equilibrated(const MatrixFunction& m, const ContourConfig& cfg);

}  // namespace tev::beyn
