// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracle/hp_bessel.hpp"
#include "tev/specfun.hpp"

using tev::specfun::Complex;
namespace sf = tev::specfun;
namespace oracle = tev::oracle;

namespace
{

const Complex I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

std::vector<Complex> j_grid()
{
  std::vector<Complex> zs;
  for (double r : {0.3, 1.0, 2.5, 6.0, 11.0, 14.5, 16.9, 17.1, 20.0, 27.0, 35.0, 49.0})
  {
    for (double angle : {0.0, 0.2, 0.7, 1.2, 1.5707963267948966})
    {
      // keep e^{|Im z|} modest so the mixed tolerance below stays meaningful
      if (r * std::sin(angle) > 30.0)
      {
        continue;
      }
      zs.push_back(std::polar(r, angle));
    }
  }
  return zs;
}

}  // namespace

TEST_CASE("J at the origin and the first J0 zero")
{
  CHECK(sf::bessel_j(0, 0.0) == doctest::Approx(1.0));
  CHECK(sf::bessel_j(1, 0.0) == 0.0);
  CHECK(sf::bessel_j_prime(1, 0.0) == doctest::Approx(0.5));
  CHECK(sf::bessel_j_prime(0, 1.0) == doctest::Approx(-sf::bessel_j(1, 1.0)).epsilon(1e-15));

  const double zero = oracle::first_j0_zero();
  CHECK(zero == doctest::Approx(2.4048255576957728).epsilon(1e-15));
  CHECK(std::abs(sf::bessel_j(0, zero)) < 1e-12);
}

TEST_CASE("J_p against the 50-digit series")
{
  for (const Complex z : j_grid())
  {
    for (int p = 0; p <= sf::kMaxOrder; ++p)
    {
      const Complex ref = oracle::bessel_j(p, z);
      const Complex got = sf::bessel_j(p, z);
      const double allowance = 1e-10 * std::abs(ref) + 1e-15 * std::exp(std::abs(z.imag()));
      INFO("p=" << p << " z=" << z << " got=" << got << " ref=" << ref);
      CHECK(std::abs(got - ref) <= allowance);
    }
  }
}

TEST_CASE("J_p in the left half-plane")
{
  for (const Complex z : {Complex(-3.0, 0.5), Complex(-20.0, -4.0), Complex(-0.2, 7.0)})
  {
    for (int p : {0, 1, 5, 12})
    {
      const Complex ref = oracle::bessel_j(p, z);
      INFO("p=" << p << " z=" << z);
      CHECK(std::abs(sf::bessel_j(p, z) - ref) <= 1e-10 * std::abs(ref) + 1e-15 * std::exp(std::abs(z.imag())));
    }
  }
}

TEST_CASE("series and asymptotic branches agree across the crossover band")
{
  for (double r = 13.0; r <= 21.0; r += 0.25)
  {
    for (double angle : {0.0, 0.4, 1.0})
    {
      const Complex z = std::polar(r, angle);
      for (int p : {0, 1, 3, 8, 16})
      {
        const Complex ref = oracle::bessel_j(p, z);
        INFO("p=" << p << " z=" << z);
        CHECK(std::abs(sf::bessel_j(p, z) - ref) <= 1e-10 * std::abs(ref) + 1e-15 * std::exp(std::abs(z.imag())));
      }
      for (int p : {0, 1})
      {
        const Complex ref = oracle::hankel1(p, z);
        CHECK(std::abs(sf::hankel1(p, z) - ref) <= 1e-9 * std::abs(ref));
      }
    }
  }
  const double below = 17.0 - 1e-9, above = 17.0 + 1e-9;
  const Complex jump_j = sf::bessel_j(4, above) - sf::bessel_j(4, below) - 2e-9 * sf::bessel_j_prime(4, 17.0);
  CHECK(std::abs(jump_j) < 1e-12);
  const Complex h1_slope = sf::hankel1(0, 17.0) - sf::hankel1(1, 17.0) / 17.0;
  CHECK(std::abs(sf::hankel1(1, above) - sf::hankel1(1, below) - 2e-9 * h1_slope) < 1e-12);
}

TEST_CASE("modified Bessel I_p")
{
  CHECK(sf::bessel_i(0, 1e-300) == doctest::Approx(1.0));
  CHECK(std::abs(sf::bessel_i(0, 10.0) / oracle::bessel_i(0, 10.0) - 1.0) < 1e-11);
  for (double x : {0.5, 3.0, 10.0, 24.0, 26.0, 40.0, 80.0})
  {
    for (int p : {0, 1, 2, 7, 16})
    {
      const double ref = oracle::bessel_i(p, x);
      INFO("p=" << p << " x=" << x);
      CHECK(std::abs(sf::bessel_i(p, x) / ref - 1.0) < 1e-11);
      CHECK(std::abs(sf::bessel_i_scaled(p, x) / (ref * std::exp(-x)) - 1.0) < 1e-11);
    }
  }
  // I_2(1.5) = J_2(1.5 i) / i^2
  CHECK(std::abs(sf::bessel_i(2, 1.5) - (sf::bessel_j(2, Complex(0.0, 1.5)) / (I * I)).real()) < 1e-12);

  const double x = 7.3, h = 1e-6;
  for (int p : {0, 3})
  {
    const double fd = (sf::bessel_i(p, x + h) - sf::bessel_i(p, x - h)) / (2 * h);
    CHECK(std::abs(sf::bessel_i_prime(p, x) / fd - 1.0) < 1e-7);
    CHECK(sf::bessel_i_prime_scaled(p, x) == doctest::Approx(sf::bessel_i_prime(p, x) * std::exp(-x)));
  }
  CHECK(sf::bessel_i_scaled(3, 5000.0) > 0.0);
}

TEST_CASE("Y and H^{(1)} against the 50-digit series")
{
  CHECK(std::abs(sf::bessel_y(0, 1.0) - 0.08825696421567696) < 1e-12);
  CHECK(std::abs(static_cast<double>(oracle::bessel_y(0, 1.0).real()) - 0.0882569642) < 1e-10);

  std::vector<Complex> zs;
  for (double r : {1e-6, 1e-3, 0.1, 0.9, 1.99, 2.01, 4.0, 8.0, 12.0, 16.0, 18.0, 25.0, 40.0, 50.0})
  {
    for (double angle : {-0.7, -0.3, 0.0, 0.3, 0.8, 1.3, 1.5707963267948966})
    {
      // imaginary-direction decay: keep the oracle's cancellation within its digits
      if (r * std::abs(std::sin(angle)) > 30.0)
      {
        continue;
      }
      zs.push_back(std::polar(r, angle));
    }
  }
  // second quadrant, reached by contour points on imaginary wavenumbers
  zs.push_back(Complex(-0.5, 3.0));
  zs.push_back(Complex(-2.0, 4.0));
  zs.push_back(Complex(-0.05, 6.0));
  for (const Complex z : zs)
  {
    for (int p : {0, 1})
    {
      const Complex ref = oracle::hankel1(p, z);
      const Complex got = sf::hankel1(p, z);
      INFO("p=" << p << " z=" << z << " got=" << got << " ref=" << ref);
      CHECK(std::abs(got - ref) <= 1e-9 * std::abs(ref));
    }
  }
  const Complex z(3.0, 0.3);
  const Complex h = sf::hankel1(0, z);
  CHECK(std::abs(h - (sf::bessel_j(0, z) + I * sf::bessel_y(0, z))) <= 1e-15 * std::abs(h));
  const Complex small(0.5, 0.2);
  const Complex y_ref = oracle::bessel_y(1, small);
  CHECK(std::abs(sf::bessel_y(1, small) - y_ref) <= 1e-12 * std::abs(y_ref));
}

TEST_CASE("H^{(1)}_0(i) closed form")
{
  // H_0(i) = (2/(pi i)) K_0(1), K_0(1) = 0.42102443824070834
  const Complex ref = oracle::hankel1(0, I);
  CHECK(std::abs(ref.real()) < 1e-40);
  CHECK(ref.imag() == doctest::Approx(-2.0 / kPi * 0.42102443824070834).epsilon(1e-14));
  CHECK(std::abs(sf::hankel1(0, I) - ref) < 1e-12 * std::abs(ref));
}

TEST_CASE("Wronskian")
{
  for (double x = 0.1; x <= 50.0; x += 0.35)
  {
    const double lhs = (sf::bessel_j(1, x) * sf::bessel_y(0, x) - sf::bessel_j(0, x) * sf::bessel_y(1, x)).real();
    INFO("x=" << x);
    CHECK(std::abs(lhs - 2.0 / (kPi * x)) <= 1e-10 * 2.0 / (kPi * x));
  }
}

TEST_CASE("reflection J_p(ix) = i^p I_p(x)")
{
  for (double x = 0.25; x <= 50.0; x += 0.75)
  {
    for (int p = 0; p <= sf::kMaxOrder; ++p)
    {
      const double ip = sf::bessel_i(p, x);
      const Complex lhs = sf::bessel_j(p, Complex(0.0, x));
      INFO("p=" << p << " x=" << x);
      CHECK(std::abs(lhs - std::pow(I, p) * ip) <= 1e-10 * ip);
    }
  }
}

TEST_CASE("three-term recurrence closure")
{
  for (const Complex z : j_grid())
  {
    for (int p = 1; p < sf::kMaxOrder; ++p)
    {
      const Complex lhs = sf::bessel_j(p - 1, z) + sf::bessel_j(p + 1, z);
      const Complex rhs = 2.0 * p / z * sf::bessel_j(p, z);
      const double scale = std::abs(sf::bessel_j(p - 1, z)) + std::abs(sf::bessel_j(p + 1, z));
      INFO("p=" << p << " z=" << z);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("derivative matches central differences")
{
  const Complex z0(2.0, 0.5);
  const double h0 = 1e-6 * std::max(1.0, std::abs(z0));
  const Complex fd0 = (sf::bessel_j(3, z0 + h0) - sf::bessel_j(3, z0 - h0)) / (2.0 * h0);
  CHECK(std::abs(sf::bessel_j_prime(3, z0) - fd0) < 1e-7);

  for (const Complex z : j_grid())
  {
    if (std::abs(z.imag()) > 12.0)
    {
      continue;
    }
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    for (int p : {0, 1, 2, 6, 15})
    {
      const Complex fd = (sf::bessel_j(p, z + h) - sf::bessel_j(p, z - h)) / (2.0 * h);
      const auto both = sf::bessel_j_with_derivative(p, z);
      INFO("p=" << p << " z=" << z);
      CHECK(std::abs(both.derivative - fd) < 1e-6);
      CHECK(std::abs(both.value - sf::bessel_j(p, z)) <= 1e-14 * std::abs(both.value) + 1e-16);
    }
  }
}

TEST_CASE("conjugate symmetry")
{
  for (const Complex z : j_grid())
  {
    for (int p : {0, 1, 4, 9, 16})
    {
      const Complex a = sf::bessel_j(p, std::conj(z));
      const Complex b = std::conj(sf::bessel_j(p, z));
      CHECK(std::abs(a - b) <= 4e-16 * std::abs(b) + 1e-300);
    }
    if (std::abs(z.imag()) > 0.0)
    {
      const Complex a = sf::bessel_y(0, std::conj(z));
      const Complex b = std::conj(sf::bessel_y(0, z));
      CHECK(std::abs(a - b) <= 1e-15 * std::abs(b));
    }
  }
}

TEST_CASE("kernel bundle equals the individual evaluations")
{
  for (const Complex z : {Complex(0.3, 0.0), Complex(5.0, 1.0), Complex(0.0, 9.0), Complex(30.0, 0.1)})
  {
    const auto k = sf::kernel_functions(z);
    CHECK(k.j0 == sf::bessel_j(0, z));
    CHECK(k.j1 == sf::bessel_j(1, z));
    CHECK(k.h0 == sf::hankel1(0, z));
    CHECK(k.h1 == sf::hankel1(1, z));
  }
}

TEST_CASE("domain refusals")
{
  CHECK_THROWS_AS(sf::bessel_j(-1, 1.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_j(sf::kMaxOrder + 1, 1.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_j(0, Complex(2e4, 0.0)), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_j(0, sf::ComplexArg(Complex(60.0, 0.0), 50.0)), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_j(0, Complex(std::nan(""), 0.0)), sf::SpecfunError);
  CHECK_THROWS_AS(sf::hankel1(0, 0.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::hankel1(2, 1.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::hankel1(0, Complex(-1.0, -0.1)), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_y(0, Complex(-3.0, 0.5)), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_i(0, -1.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_i(0, 800.0), sf::SpecfunError);
  CHECK_THROWS_AS(sf::bessel_j(0, Complex(1.0, 800.0)), sf::SpecfunError);
}
