// SPDX-License-Identifier: Apache-2.0

#include "tev/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace tev::specfun
{

namespace
{

using LComplex = std::complex<long double>;

constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kEulerL = std::numbers::egamma_v<long double>;

// Inside the series disk H_p^{(1)} is formed as J_p + i Y_p from the series
// when |z| is below this radius or Im z below the cancellation limit, where
// |J|/|H| is at most about e^{2 Im z}.
constexpr double kSmallHankelRadius = 2.0;
constexpr double kHankelCancellationLimit = 1.5;

// Modified Bessel I_p: power series up to here, Miller recurrence beyond.
constexpr double kModifiedSeriesLimit = 25.0;

// exp() overflows just above 709.78.
constexpr double kOverflowExponent = 700.0;

void check_order(int p, int max_order, const char* who)
{
  if (p < 0 || p > max_order)
  {
    throw SpecfunError(std::string(who) + ": order " + std::to_string(p) +
                       " outside [0, " + std::to_string(max_order) + "]");
  }
}

void check_growth(Complex z, const char* who)
{
  if (std::abs(z.imag()) > kOverflowExponent)
  {
    throw SpecfunError(std::string(who) + ": |Im z| too large, result overflows");
  }
}

void check_hankel_sector(Complex z, const char* who)
{
  if (z == Complex(0.0, 0.0))
  {
    throw SpecfunError(std::string(who) + ": logarithmic singularity at z = 0");
  }
  if (std::abs(std::arg(z)) > 0.75 * kPi + 1e-12)
  {
    throw SpecfunError(std::string(who) + ": argument outside the sector |arg z| <= 3pi/4");
  }
}

// Ascending series for J_p in extended precision.
LComplex series_j(int p, LComplex z)
{
  const LComplex half = z / 2.0L;
  const LComplex q = -half * half;
  LComplex term = 1.0L;
  for (int i = 1; i <= p; ++i)
  {
    term *= half / static_cast<long double>(i);
  }
  LComplex sum = term;
  const long double peak = std::abs(half);
  for (int m = 1; m < 400; ++m)
  {
    term *= q / static_cast<long double>(m * (m + p));
    sum += term;
    const long double t = std::abs(term);
    if (m > peak && (t <= 1e-21L * std::abs(sum) || t == 0.0L))
    {
      break;
    }
  }
  return sum;
}

// J_0 and J_1 from one pass over the series.
std::array<LComplex, 2> series_j01(LComplex z)
{
  const LComplex half = z / 2.0L;
  const LComplex q = -half * half;
  const long double peak = std::abs(half);
  LComplex t0 = 1.0L, t1 = half;
  LComplex j0 = t0, j1 = t1;
  for (int m = 1; m < 400; ++m)
  {
    t0 *= q / static_cast<long double>(m * m);
    t1 = t0 * half / static_cast<long double>(m + 1);
    j0 += t0;
    j1 += t1;
    const long double t = std::abs(t0) + std::abs(t1);
    if (m > peak && (t <= 1e-21L * (std::abs(j0) + std::abs(j1)) || t == 0.0L))
    {
      break;
    }
  }
  return {j0, j1};
}

struct SeriesJY
{
  LComplex j0, j1, y0, y1;
};

// J_0, J_1, Y_0, Y_1 from their ascending series (principal log).
SeriesJY series_jy01(LComplex z)
{
  const LComplex half = z / 2.0L;
  const LComplex q = -half * half;
  const LComplex log_half = std::log(half);
  const long double peak = std::abs(half);

  // m-th terms: q^m/(m!)^2 for order 0 and half*q^m/(m!(m+1)!) for order 1.
  LComplex t0 = 1.0L;
  LComplex t1 = half;
  LComplex j0 = t0, j1 = t1;
  LComplex s0 = 0.0L;                   // sum_{m>=1} H_m q^m/(m!)^2
  LComplex s1 = t1 * (1.0L - 2 * kEulerL);  // sum (psi(m+1)+psi(m+2)) half q^m/(m!(m+1)!)
  long double harmonic = 0.0L;          // H_m
  for (int m = 1; m < 400; ++m)
  {
    t0 *= q / static_cast<long double>(m * m);
    t1 *= q / static_cast<long double>(m * (m + 1));
    harmonic += 1.0L / m;
    const long double harmonic_next = harmonic + 1.0L / (m + 1);
    j0 += t0;
    j1 += t1;
    s0 += harmonic * t0;
    s1 += (harmonic + harmonic_next - 2 * kEulerL) * t1;
    const long double t = std::abs(t0) + std::abs(t1);
    if (m > peak && (t <= 1e-21L * (std::abs(j0) + std::abs(j1)) || t == 0.0L))
    {
      break;
    }
  }
  SeriesJY out;
  out.j0 = j0;
  out.j1 = j1;
  out.y0 = (2.0L / kPiL) * ((log_half + kEulerL) * j0 - s0);
  out.y1 = -2.0L / (kPiL * z) + (2.0L / kPiL) * log_half * j1 - s1 / kPiL;
  return out;
}

struct Asymptotic
{
  Complex j, y, h;
};

// Hankel large-argument expansion for order nu in {0, 1}.
Asymptotic asymptotic_jyh(int nu, Complex z)
{
  const double mu = 4.0 * nu * nu;
  const Complex inv_z = 1.0 / z;
  Complex p_sum = 1.0, q_sum = 0.0;
  Complex term = 1.0;
  double previous = 1.0;
  for (int k = 1; k < 200; ++k)
  {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k) * inv_z;
    const double magnitude = std::abs(term);
    if (magnitude > previous)
    {
      break;  // past the smallest term of the divergent expansion
    }
    previous = magnitude;
    // i^k a_k / z^k split into P (even k) and Q (odd k).
    switch (k % 4)
    {
      case 0: p_sum += term; break;
      case 1: q_sum += term; break;
      case 2: p_sum -= term; break;
      default: q_sum -= term; break;
    }
    if (magnitude < 1e-17 * std::abs(p_sum))
    {
      break;
    }
  }
  const Complex chi = z - (0.5 * nu + 0.25) * kPi;
  const Complex amp = std::sqrt(2.0 / (kPi * z));
  const Complex c = std::cos(chi), s = std::sin(chi);
  Asymptotic out;
  out.j = amp * (p_sum * c - q_sum * s);
  out.y = amp * (p_sum * s + q_sum * c);
  out.h = amp * (p_sum + Complex(0.0, 1.0) * q_sum) * std::exp(Complex(0.0, 1.0) * chi);
  return out;
}

// Steed's continued fraction CF2 for K_0(w), K_1(w), |w| >= 2, |arg w| < pi.
std::array<Complex, 2> steed_k01(Complex w)
{
  const double a1 = 0.25;
  Complex b = 2.0 * (1.0 + w);
  Complex d = 1.0 / b;
  Complex h = d, delh = d;
  Complex q1 = 0.0, q2 = 1.0;
  double q_real_c = a1;
  Complex q = a1;
  double a = -a1;
  Complex s = 1.0 + q * delh;
  int i = 1;
  for (; i < 100000; ++i)
  {
    a -= 2 * i;
    q_real_c = -a * q_real_c / (i + 1.0);
    const Complex qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += q_real_c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const Complex dels = q * delh;
    s += dels;
    if (std::abs(dels) < 1e-17 * std::abs(s))
    {
      break;
    }
  }
  if (i >= 100000)
  {
    throw SpecfunError("hankel1: continued fraction failed to converge");
  }
  h = a1 * h;
  const Complex k0 = std::sqrt(kPi / (2.0 * w)) * std::exp(-w) / s;
  const Complex k1 = k0 * (w + 0.5 - h) / w;
  return {k0, k1};
}

// H_0^{(1)}, H_1^{(1)} for z in the supported sector, given J_0, J_1 and the
// series Y values when |z| <= kSeriesRadius.
std::array<Complex, 2> hankel01(Complex z)
{
  const double r = std::abs(z);
  if (r > kSeriesRadius)
  {
    return {asymptotic_jyh(0, z).h, asymptotic_jyh(1, z).h};
  }
  const bool cancellation_free = r < kSmallHankelRadius || z.imag() < kHankelCancellationLimit;
  if (cancellation_free)
  {
    const SeriesJY s = series_jy01(LComplex(z));
    const LComplex i(0.0L, 1.0L);
    return {Complex(s.j0 + i * s.y0), Complex(s.j1 + i * s.y1)};
  }
  // H_nu(z) = (2/pi) i^{-nu-1} K_nu(-i z)
  const auto k = steed_k01(Complex(0.0, -1.0) * z);
  return {Complex(0.0, -2.0 / kPi) * k[0], (-2.0 / kPi) * k[1]};
}

// J_p(z) for Re z >= 0 and min_order <= p <= max_order; out is indexed by p.
void j_orders_right_half(int min_order, int max_order, Complex z, Complex* out)
{
  const double r = std::abs(z);
  if (r <= kSeriesRadius)
  {
    for (int p = min_order; p <= max_order; ++p)
    {
      out[p] = Complex(series_j(p, LComplex(z)));
    }
    return;
  }
  const Complex j0 = asymptotic_jyh(0, z).j;
  const Complex j1 = asymptotic_jyh(1, z).j;
  out[0] = j0;
  if (max_order >= 1)
  {
    out[1] = j1;
  }
  if (max_order < 2)
  {
    return;
  }
  // Miller: backward recurrence from far above the transition region,
  // normalized by whichever of J_0, J_1 is larger.
  int start = max_order + static_cast<int>(std::ceil(r)) + 20 +
              static_cast<int>(std::ceil(15.0 * std::cbrt(r)));
  std::vector<Complex> f(max_order + 1);
  Complex upper = 0.0, current = 1.0;
  const Complex two_over_z = 2.0 / z;
  for (int k = start; k >= 1; --k)
  {
    if (k <= max_order)
    {
      f[k] = current;
    }
    const Complex lower = static_cast<double>(k) * two_over_z * current - upper;
    upper = current;
    current = lower;
    if (std::abs(current) > 1e200)
    {
      current *= 1e-200;
      upper *= 1e-200;
      for (int j = k; j <= max_order; ++j)
      {
        f[j] *= 1e-200;
      }
    }
  }
  f[0] = current;
  const Complex scale = std::abs(j0) >= std::abs(j1) ? j0 / f[0] : j1 / f[1];
  for (int p = 2; p <= max_order; ++p)
  {
    out[p] = scale * f[p];
  }
}

void j_orders(int min_order, int max_order, Complex z, Complex* out)
{
  check_growth(z, "bessel_j");
  if (z.real() < 0.0)
  {
    j_orders_right_half(min_order, max_order, -z, out);
    for (int p = 1; p <= max_order; p += 2)
    {
      out[p] = -out[p];
    }
    return;
  }
  j_orders_right_half(min_order, max_order, z, out);
}

// e^{-x} I_p(x) for x >= 0 and min_order <= p <= max_order; out is indexed by p.
void i_scaled_orders(int min_order, int max_order, double x, double* out)
{
  if (x == 0.0)
  {
    out[0] = 1.0;
    for (int p = 1; p <= max_order; ++p)
    {
      out[p] = 0.0;
    }
    return;
  }
  if (x <= kModifiedSeriesLimit)
  {
    const long double half = x / 2.0L;
    const long double q = half * half;
    const long double damp = std::exp(-static_cast<long double>(x));
    long double lead = 1.0L;
    for (int p = 0; p <= max_order; ++p)
    {
      if (p > 0)
      {
        lead *= half / p;
      }
      if (p < min_order)
      {
        continue;
      }
      long double term = lead, sum = lead;
      for (int m = 1; m < 400; ++m)
      {
        term *= q / static_cast<long double>(m * (m + p));
        sum += term;
        if (m > half && term <= 1e-21L * sum)
        {
          break;
        }
      }
      out[p] = static_cast<double>(sum * damp);
    }
    return;
  }
  const int start = max_order + 20 + static_cast<int>(std::ceil(10.0 * std::sqrt(x)));
  std::vector<double> f(max_order + 1);
  double upper = 0.0, current = 1.0, norm = 0.0;
  for (int k = start; k >= 1; --k)
  {
    if (k <= max_order)
    {
      f[k] = current;
    }
    norm += 2.0 * current;
    const double lower = (2.0 * k / x) * current + upper;
    upper = current;
    current = lower;
    if (current > 1e200)
    {
      current *= 1e-200;
      upper *= 1e-200;
      norm *= 1e-200;
      for (int j = k; j <= max_order; ++j)
      {
        f[j] *= 1e-200;
      }
    }
  }
  norm += current;
  f[0] = current;
  for (int p = 0; p <= max_order; ++p)
  {
    out[p] = f[p] / norm;
  }
}

double unscale(double scaled, double x, const char* who)
{
  if (x > kOverflowExponent)
  {
    throw SpecfunError(std::string(who) + ": result overflows; use the scaled variant");
  }
  return scaled * std::exp(x);
}

void check_modified_arg(double x, const char* who)
{
  if (!(x >= 0.0) || !std::isfinite(x))
  {
    throw SpecfunError(std::string(who) + ": argument must be real and >= 0");
  }
  if (x > kDefaultMaxArg)
  {
    throw SpecfunError(std::string(who) + ": argument exceeds the accuracy cap");
  }
}

}  // namespace

ComplexArg::ComplexArg(Complex z, double max_abs) : z_(z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
  {
    throw SpecfunError("special function argument is not finite");
  }
  if (std::abs(z) > max_abs)
  {
    throw SpecfunError("|z| = " + std::to_string(std::abs(z)) +
                       " exceeds the accuracy cap " + std::to_string(max_abs));
  }
}

Complex bessel_j(int p, ComplexArg z)
{
  check_order(p, kMaxOrder, "bessel_j");
  std::array<Complex, kMaxOrder + 2> values{};
  j_orders(p, p, z.value(), values.data());
  return values[p];
}

double bessel_j(int p, double x)
{
  return bessel_j(p, ComplexArg(x)).real();
}

ValueAndDerivative bessel_j_with_derivative(int p, ComplexArg z)
{
  check_order(p, kMaxOrder, "bessel_j_prime");
  std::array<Complex, kMaxOrder + 2> values{};
  j_orders(std::max(p - 1, 0), p + 1, z.value(), values.data());
  const Complex derivative = p == 0 ? -values[1] : 0.5 * (values[p - 1] - values[p + 1]);
  return {values[p], derivative};
}

Complex bessel_j_prime(int p, ComplexArg z)
{
  return bessel_j_with_derivative(p, z).derivative;
}

double bessel_j_prime(int p, double x)
{
  return bessel_j_prime(p, ComplexArg(x)).real();
}

double bessel_i_scaled(int p, double x)
{
  check_order(p, kMaxOrder, "bessel_i");
  check_modified_arg(x, "bessel_i");
  std::array<double, kMaxOrder + 2> values{};
  i_scaled_orders(p, p, x, values.data());
  return values[p];
}

double bessel_i(int p, double x)
{
  return unscale(bessel_i_scaled(p, x), x, "bessel_i");
}

ScaledValueAndDerivative bessel_i_scaled_with_derivative(int p, double x)
{
  check_order(p, kMaxOrder, "bessel_i_prime");
  check_modified_arg(x, "bessel_i_prime");
  std::array<double, kMaxOrder + 2> values{};
  i_scaled_orders(std::max(p - 1, 0), p + 1, x, values.data());
  return {values[p], p == 0 ? values[1] : 0.5 * (values[p - 1] + values[p + 1])};
}

double bessel_i_prime_scaled(int p, double x)
{
  check_order(p, kMaxOrder, "bessel_i_prime");
  check_modified_arg(x, "bessel_i_prime");
  std::array<double, kMaxOrder + 2> values{};
  i_scaled_orders(std::max(p - 1, 0), p + 1, x, values.data());
  return p == 0 ? values[1] : 0.5 * (values[p - 1] + values[p + 1]);
}

double bessel_i_prime(int p, double x)
{
  return unscale(bessel_i_prime_scaled(p, x), x, "bessel_i_prime");
}

Complex bessel_y(int p, ComplexArg arg)
{
  check_order(p, 1, "bessel_y");
  const Complex z = arg.value();
  check_hankel_sector(z, "bessel_y");
  check_growth(z, "bessel_y");
  if (std::abs(z) > kSeriesRadius)
  {
    return asymptotic_jyh(p, z).y;
  }
  const SeriesJY s = series_jy01(LComplex(z));
  return Complex(p == 0 ? s.y0 : s.y1);
}

Complex hankel1(int p, ComplexArg arg)
{
  check_order(p, 1, "hankel1");
  const Complex z = arg.value();
  check_hankel_sector(z, "hankel1");
  check_growth(z, "hankel1");
  return hankel01(z)[p];
}

KernelFunctions kernel_functions(ComplexArg arg)
{
  const Complex z = arg.value();
  check_hankel_sector(z, "kernel_functions");
  check_growth(z, "kernel_functions");
  const double r = std::abs(z);
  if (r <= kSeriesRadius && (r < kSmallHankelRadius || z.imag() < kHankelCancellationLimit))
  {
    const SeriesJY s = series_jy01(LComplex(z));
    const LComplex i(0.0L, 1.0L);
    return {Complex(s.j0), Complex(s.j1), Complex(s.j0 + i * s.y0), Complex(s.j1 + i * s.y1)};
  }
  std::array<Complex, 2> j{};
  if (r <= kSeriesRadius)
  {
    const auto j01 = series_j01(LComplex(z.real() < 0.0 ? -z : z));
    const double odd = z.real() < 0.0 ? -1.0 : 1.0;
    j = {Complex(j01[0]), odd * Complex(j01[1])};
  }
  else
  {
    j_orders(0, 1, z, j.data());
  }
  const auto h = hankel01(z);
  return {j[0], j[1], h[0], h[1]};
}

}  // namespace tev::specfun
