// SPDX-License-Identifier: Apache-2.0

#include "tev/diskdet.hpp"

#include <cmath>

#include "tev/specfun.hpp"

namespace tev::diskdet
{

namespace
{

constexpr double kEquilibrationThreshold = 20.0;

void check_real_args(double k, double n)
{
  if (!(k > 0.0) || !std::isfinite(k))
  {
    throw std::invalid_argument("det_real_axis: k must be real and positive");
  }
  if (!(n > 0.0) || !std::isfinite(n))
  {
    throw std::invalid_argument("det_real_axis: n must be real and positive");
  }
}

// Columns 2 and 4 carry e^{-qk}, e^{-k}.
Eigen::Matrix4d real_matrix(int p, double k, double n)
{
  const double q = std::pow(n, 0.25);
  const double sn = std::sqrt(n);
  const double n34 = q * sn;
  const auto jq_pair = specfun::bessel_j_with_derivative(p, q * k);
  const auto iq_pair = specfun::bessel_i_scaled_with_derivative(p, q * k);
  const auto j1_pair = specfun::bessel_j_with_derivative(p, k);
  const auto i1_pair = specfun::bessel_i_scaled_with_derivative(p, k);
  const double jq = jq_pair.value.real(), djq = jq_pair.derivative.real();
  const double iq = iq_pair.value, diq = iq_pair.derivative;
  const double j1 = j1_pair.value.real(), dj1 = j1_pair.derivative.real();
  const double i1 = i1_pair.value, di1 = i1_pair.derivative;
  Eigen::Matrix4d m;
  m << jq, iq, -j1, -i1,
      q * djq, q * diq, -dj1, -di1,
      -sn * jq, sn * iq, j1, -i1,
      -n34 * djq, n34 * diq, dj1, -di1;
  return m;
}

}  // namespace

DiskMatrix assemble(int p, const WaveContext& ctx)
{
  const Complex k = ctx.k();
  const double n = ctx.n();
  const Complex i(0.0, 1.0);
  const double q = std::pow(n, 0.25);
  const double sn = std::sqrt(n);
  const double n34 = q * sn;
  const auto a = specfun::bessel_j_with_derivative(p, q * k);
  const auto b = specfun::bessel_j_with_derivative(p, i * q * k);
  const auto c = specfun::bessel_j_with_derivative(p, k);
  const auto d = specfun::bessel_j_with_derivative(p, i * k);
  Eigen::Matrix4cd m;
  m << a.value, b.value, -c.value, -d.value,
      q * a.derivative, q * i * b.derivative, -c.derivative, -i * d.derivative,
      -sn * a.value, sn * b.value, c.value, -d.value,
      -n34 * a.derivative, n34 * i * b.derivative, c.derivative, -i * d.derivative;
  return {p, m, ctx};
}

Complex det(int p, const WaveContext& ctx)
{
  return assemble(p, ctx).entries.determinant();
}

double det_real_axis(int p, double k, double n)
{
  check_real_args(k, n);
  const double q = std::pow(n, 0.25);
  const double growth = q * k + k;
  if (growth > 700.0)
  {
    throw std::overflow_error("det_real_axis: determinant overflows; use det_real_axis_scaled");
  }
  return real_matrix(p, k, n).determinant() * std::exp(growth);
}

Eigen::Matrix4d real_axis_matrix_scaled(int p, double k, double n)
{
  check_real_args(k, n);
  Eigen::Matrix4d m = real_matrix(p, k, n);
  if (k > kEquilibrationThreshold)
  {
    for (int r = 0; r < 4; ++r)
    {
      const double big = m.row(r).cwiseAbs().maxCoeff();
      if (big > 0.0)
      {
        m.row(r) /= big;
      }
    }
  }
  return m;
}

double det_real_axis_scaled(int p, double k, double n)
{
  return real_axis_matrix_scaled(p, k, n).determinant();
}

}  // namespace tev::diskdet
