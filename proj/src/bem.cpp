// SPDX-License-Identifier: Apache-2.0

#include "tev/bem.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tev/parallel.hpp"
#include "tev/specfun.hpp"

namespace tev::bem
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
const Complex kI(0.0, 1.0);

std::size_t offset(int i, int j, int nodes)
{
  return static_cast<std::size_t>(((i - j) % nodes + nodes) % nodes);
}

void check_tau(Complex tau)
{
  if (tau == Complex(0.0, 0.0))
  {
    throw std::invalid_argument("wavenumber tau must be nonzero");
  }
}

}  // namespace

Discretization::Discretization(geometry::BoundaryCurve c, int n_nodes) : curve(std::move(c)), nodes(n_nodes)
{
  if (nodes < 4 || nodes % 2 != 0)
  {
    throw std::invalid_argument("node count must be even and at least 4");
  }
  const int half = nodes / 2;
  for (int j = 0; j < nodes; ++j)
  {
    const double tj = 2.0 * kPi * j / nodes;
    t.push_back(tj);
    position.push_back(curve.position(tj));
    velocity.push_back(curve.velocity(tj));
    acceleration.push_back(curve.acceleration(tj));
    normal.push_back(curve.normal(tj));
    speed.push_back(curve.speed(tj));
    double r = 0.0;
    for (int m = 1; m < half; ++m)
    {
      r += std::cos(m * tj) / m;
    }
    log_weight.push_back(-(2.0 * kPi / half) * r - (kPi / (half * static_cast<double>(half))) * std::cos(half * tj));
    const double s = std::sin(0.5 * tj);
    log_kernel.push_back(j == 0 ? 0.0 : std::log(4.0 * s * s));
  }
}

Complex kernel_single_layer(Complex tau, const Vec2& x, const Vec2& y)
{
  check_tau(tau);
  const double r = (x - y).norm();
  if (r == 0.0)
  {
    throw std::invalid_argument("kernel evaluated at coincident points");
  }
  return 0.25 * kI * specfun::hankel1(0, tau * r);
}

Complex kernel_adjoint_double_layer(Complex tau, const Vec2& x, const Vec2& normal_x, const Vec2& y)
{
  check_tau(tau);
  const Vec2 d = x - y;
  const double r = d.norm();
  if (r == 0.0)
  {
    throw std::invalid_argument("kernel evaluated at coincident points");
  }
  return -0.25 * kI * tau * specfun::hankel1(1, tau * r) * normal_x.dot(d) / r;
}

OperatorPair assemble_pair(Complex tau, const Discretization& disc)
{
  check_tau(tau);
  const int nn = disc.nodes;
  const double trap = kPi / (nn / 2);
  Eigen::MatrixXcd s(nn, nn), d(nn, nn);
  for (int i = 0; i < nn; ++i)
  {
    const double sp = disc.speed[i];
    const std::size_t m0 = offset(i, i, nn);
    const Complex smooth = (0.25 * kI - kEuler / (2.0 * kPi) - std::log(0.5 * tau * sp) / (2.0 * kPi)) * sp;
    s(i, i) = disc.log_weight[m0] * (-sp / (4.0 * kPi)) + trap * smooth;
    const Vec2& v = disc.velocity[i];
    const Vec2& a = disc.acceleration[i];
    d(i, i) = trap * (v.y() * a.x() - v.x() * a.y()) / (4.0 * kPi * sp * sp);
    for (int j = i + 1; j < nn; ++j)
    {
      const Vec2 diff = disc.position[i] - disc.position[j];
      const double r = diff.norm();
      const auto f = specfun::kernel_functions(tau * r);
      const std::size_t mij = offset(i, j, nn), mji = offset(j, i, nn);
      // both offsets share the same log kernel and weight (even in t)
      const double lk = disc.log_kernel[mij];
      const double w_ij = disc.log_weight[mij], w_ji = disc.log_weight[mji];

      const Complex single = 0.25 * kI * f.h0;
      const Complex single_log = -f.j0 / (4.0 * kPi);
      const double sp_i = disc.speed[i], sp_j = disc.speed[j];
      s(i, j) = (w_ij * single_log + trap * (single - single_log * lk)) * sp_j;
      s(j, i) = (w_ji * single_log + trap * (single - single_log * lk)) * sp_i;

      const Complex dbl = -0.25 * kI * tau * f.h1 / r;
      const Complex dbl_log = tau * f.j1 / (4.0 * kPi * r);
      const double nd_ij = disc.normal[i].dot(diff);
      const double nd_ji = -disc.normal[j].dot(diff);
      d(i, j) = (w_ij * dbl_log + trap * (dbl - dbl_log * lk)) * nd_ij * sp_j;
      d(j, i) = (w_ji * dbl_log + trap * (dbl - dbl_log * lk)) * nd_ji * sp_i;
    }
  }
  return {{OperatorKind::single_layer, tau, std::move(s)}, {OperatorKind::adjoint_double_layer, tau, std::move(d)}};
}

OperatorBlock assemble_block(OperatorKind kind, Complex tau, const Discretization& disc)
{
  OperatorPair pair = assemble_pair(tau, disc);
  return kind == OperatorKind::single_layer ? std::move(pair.single_layer) : std::move(pair.adjoint_double_layer);
}

BlockSystem assemble_system(const Discretization& disc, const WaveContext& ctx, int threads)
{
  const Complex k = ctx.k();
  const double n = ctx.n();
  const double q = std::pow(n, 0.25);
  const double sn = std::sqrt(n);
  const std::array<Complex, 4> taus{k * q, kI * k * q, k, kI * k};
  std::array<Eigen::MatrixXcd, 4> s, d;
  parallel_for(4, threads, [&](std::size_t b) {
    OperatorPair pair = assemble_pair(taus[b], disc);
    s[b] = std::move(pair.single_layer.matrix);
    d[b] = std::move(pair.adjoint_double_layer.matrix);
  });
  const int nn = disc.nodes;
  const Eigen::MatrixXcd half = 0.5 * Eigen::MatrixXcd::Identity(nn, nn);
  Eigen::MatrixXcd m(4 * nn, 4 * nn);
  m << s[0], s[1], -s[2], -s[3],
      d[0] + half, d[1] + half, -d[2] - half, -d[3] - half,
      sn * s[0], -sn * s[1], -s[2], s[3],
      sn * (d[0] + half), -sn * (d[1] + half), -d[2] - half, d[3] + half;
  return {k, n, nn, std::move(m)};
}

ModalBasis::ModalBasis(int nodes, int max_mode) : max_mode_(max_mode)
{
  if (max_mode < 0 || 2 * max_mode + 1 > nodes)
  {
    throw std::invalid_argument("modal basis needs 0 <= max_mode and 2 max_mode + 1 <= nodes");
  }
  q_.resize(nodes, 2 * max_mode + 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(nodes));
  for (int j = 0; j < nodes; ++j)
  {
    for (int m = -max_mode; m <= max_mode; ++m)
    {
      // reduce m j mod nodes so large products keep full accuracy
      const int phase = ((m * j) % nodes + nodes) % nodes;
      q_(j, m + max_mode) = std::polar(norm, 2.0 * kPi * phase / nodes);
    }
  }
}

Eigen::MatrixXcd compress(const BlockSystem& system, const ModalBasis& basis)
{
  const int nn = system.nodes;
  if (basis.nodes() != nn)
  {
    throw std::invalid_argument("modal basis and block system disagree on the node count");
  }
  const int m = basis.size();
  const Eigen::MatrixXcd& q = basis.matrix();
  const Eigen::MatrixXcd qh = q.adjoint();
  Eigen::MatrixXcd out(4 * m, 4 * m);
  for (int a = 0; a < 4; ++a)
  {
    for (int b = 0; b < 4; ++b)
    {
      out.block(a * m, b * m, m, m).noalias() = qh * system.matrix.block(a * nn, b * nn, nn, nn) * q;
    }
  }
  return out;
}

}  // namespace tev::bem
