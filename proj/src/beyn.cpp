// SPDX-License-Identifier: Apache-2.0

#include "tev/beyn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "tev/parallel.hpp"

namespace tev::beyn
{

void ContourConfig::validate() const
{
  if (!(radius > 0.0) || !std::isfinite(radius))
  {
    throw std::invalid_argument("contour radius must be positive");
  }
  if (quad_points < 2 || probe_cols < 1)
  {
    throw std::invalid_argument("need at least 2 quadrature points and 1 probe column");
  }
  if (!(rank_tol > 0.0 && rank_tol < 1.0) || !(residual_tol > 0.0) || !(cluster_radius >= 0.0))
  {
    throw std::invalid_argument("rank_tol must lie in (0, 1); residual_tol and cluster_radius must be positive");
  }
}

Eigen::MatrixXcd probe_matrix(int rows, int cols, std::uint64_t seed)
{
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd v(rows, cols);
  for (int c = 0; c < cols; ++c)
  {
    for (int r = 0; r < rows; ++r)
    {
      const double re = normal(gen);
      const double im = normal(gen);
      v(r, c) = Complex(re, im);
    }
  }
  return v;
}

Moments moments(const MatrixFunction& m, const ContourConfig& cfg)
{
  cfg.validate();
  const int count = cfg.quad_points;
  Moments out;
  for (int j = 0; j < count; ++j)
  {
    out.nodes.push_back(cfg.center + std::polar(cfg.radius, 2.0 * std::numbers::pi * j / count));
  }
  // dimension from the first node; the probe block is fixed before any solve
  const Eigen::MatrixXcd first = m(out.nodes[0]);
  if (first.rows() != first.cols() || first.rows() == 0)
  {
    throw BeynError("matrix function must return a nonempty square matrix");
  }
  const int dim = static_cast<int>(first.rows());
  const Eigen::MatrixXcd v = probe_matrix(dim, std::min(cfg.probe_cols, dim), cfg.rng_seed);

  std::vector<Eigen::MatrixXcd> solves(count);
  out.condition.assign(count, 0.0);
  parallel_for(static_cast<std::size_t>(count), cfg.threads, [&](std::size_t j) {
    const Eigen::MatrixXcd mj = j == 0 ? first : m(out.nodes[j]);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mj);
    const double rcond = lu.rcond();
    out.condition[j] = rcond > 0.0 ? 1.0 / rcond : INFINITY;
    if (!(out.condition[j] <= cfg.max_condition))
    {
      std::ostringstream msg;
      msg << "M(z) is numerically singular at contour node " << j << ", z = " << out.nodes[j]
          << " (condition estimate " << out.condition[j] << ")";
      throw BeynError(msg.str());
    }
    solves[j] = lu.solve(v);
  });
  out.a0 = Eigen::MatrixXcd::Zero(dim, v.cols());
  out.a1 = Eigen::MatrixXcd::Zero(dim, v.cols());
  for (int j = 0; j < count; ++j)
  {
    const Complex z = out.nodes[j];
    const Complex w = (z - cfg.center) / static_cast<double>(count);
    out.a0 += w * solves[j];
    out.a1 += (w * z) * solves[j];
  }
  return out;
}

std::vector<Candidate> extract(const Moments& mom, const MatrixFunction& m, const ContourConfig& cfg)
{
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(mom.a0, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma.size() == 0 || !(sigma(0) > 0.0))
  {
    return {};
  }
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > cfg.rank_tol * sigma(0))
  {
    ++rank;
  }
  const Eigen::MatrixXcd u = svd.matrixU().leftCols(rank);
  const Eigen::MatrixXcd w = svd.matrixV().leftCols(rank);
  const Eigen::MatrixXcd b = u.adjoint() * mom.a1 * w * sigma.head(rank).cwiseInverse().asDiagonal();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(b);
  if (eig.info() != Eigen::Success)
  {
    throw BeynError("eigen-decomposition of the reduced matrix failed");
  }
  std::vector<Candidate> out;
  for (int i = 0; i < rank; ++i)
  {
    Candidate c;
    c.value = eig.eigenvalues()(i);
    c.vector = u * eig.eigenvectors().col(i);
    c.inside = std::abs(c.value - cfg.center) < cfg.radius * (1.0 + 1e-8);
    c.residual = INFINITY;
    if (c.inside)
    {
      const Eigen::MatrixXcd mz = m(c.value);
      const double scale = mz.norm() * c.vector.norm();
      c.residual = scale > 0.0 ? (mz * c.vector).norm() / scale : 0.0;
    }
    out.push_back(std::move(c));
  }
  return out;
}

MatrixFunction equilibrated(const MatrixFunction& m, const ContourConfig& cfg)
{
  if (!cfg.equilibrate_rows)
  {
    return m;
  }
  const Eigen::MatrixXcd at_center = m(cfg.center);
  Eigen::VectorXd inv(at_center.rows());
  for (Eigen::Index r = 0; r < at_center.rows(); ++r)
  {
    const double big = at_center.row(r).cwiseAbs().maxCoeff();
    inv(r) = big > 0.0 ? 1.0 / big : 1.0;
  }
  return [m, inv](Complex z) -> Eigen::MatrixXcd { return inv.asDiagonal() * m(z); };
}

std::vector<EigenResult> solve(const MatrixFunction& m, const ContourConfig& cfg)
{
  const MatrixFunction scaled = equilibrated(m, cfg);
  const Moments mom = moments(scaled, cfg);
  std::vector<Candidate> found;
  for (auto& c : extract(mom, scaled, cfg))
  {
    if (c.inside && c.residual <= cfg.residual_tol)
    {
      found.push_back(std::move(c));
    }
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return a.value.real() != b.value.real() ? a.value.real() < b.value.real() : a.value.imag() < b.value.imag();
  });
  // single-linkage clusters; members are within cluster_radius of a neighbour
  std::vector<EigenResult> out;
  std::vector<bool> used(found.size(), false);
  for (std::size_t i = 0; i < found.size(); ++i)
  {
    if (used[i])
    {
      continue;
    }
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t pos = 0; pos < members.size(); ++pos)
    {
      for (std::size_t j = 0; j < found.size(); ++j)
      {
        if (!used[j] && std::abs(found[j].value - found[members[pos]].value) <= cfg.cluster_radius)
        {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    EigenResult r;
    Complex sum = 0.0;
    r.residual = 0.0;
    for (std::size_t idx : members)
    {
      sum += found[idx].value;
      r.residual = std::max(r.residual, found[idx].residual);
    }
    r.k = sum / static_cast<double>(members.size());
    r.multiplicity = static_cast<int>(members.size());
    r.method = "beyn";
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const EigenResult& a, const EigenResult& b) {
    return a.k.real() != b.k.real() ? a.k.real() < b.k.real() : a.k.imag() < b.k.imag();
  });
  return out;
}

}  // namespace tev::beyn
