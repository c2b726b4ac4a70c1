// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include "tev/geometry.hpp"

using tev::geometry::BoundaryCurve;
using tev::geometry::Vec2;

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<BoundaryCurve> families()
{
  return {BoundaryCurve::circle(1.0), BoundaryCurve::circle(0.4), BoundaryCurve::ellipse(1.0, 0.8),
          BoundaryCurve::ellipse(2.0, 0.5), BoundaryCurve::deformed_ellipse(0.0),
          BoundaryCurve::deformed_ellipse(0.1), BoundaryCurve::deformed_ellipse(0.3),
          BoundaryCurve::deformed_ellipse(0.49)};
}

double adaptive_arc_length(const BoundaryCurve& c)
{
  auto speed = [&](double t) { return c.speed(t); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(speed, 0.0, kTwoPi, 15, 1e-14);
}

}  // namespace

TEST_CASE("closed-form points")
{
  const auto circle = BoundaryCurve::circle(1.0);
  for (double t = 0.0; t < kTwoPi; t += 0.1)
  {
    CHECK(circle.position(t).norm() == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(circle.arc_length() == doctest::Approx(kTwoPi).epsilon(1e-14));

  const auto ell = BoundaryCurve::ellipse(1.0, 0.8);
  CHECK((ell.position(0.0) - Vec2(1.0, 0.0)).norm() < 1e-15);
  CHECK((ell.position(0.5 * std::numbers::pi) - Vec2(0.0, 0.8)).norm() < 1e-15);

  const auto kite = BoundaryCurve::deformed_ellipse(0.3);
  CHECK((kite.position(0.0) - Vec2(1.05, 0.0)).norm() < 1e-15);
  CHECK(kite.name() == "kite");
}

TEST_CASE("normals")
{
  const auto circle = BoundaryCurve::circle(1.0);
  CHECK((circle.normal(0.0) - Vec2(1.0, 0.0)).norm() < 1e-15);
  const auto ell = BoundaryCurve::ellipse(1.0, 0.8);
  CHECK((ell.normal(0.5 * std::numbers::pi) - Vec2(0.0, 1.0)).norm() < 1e-15);

  for (const auto& c : families())
  {
    for (int j = 0; j < 97; ++j)
    {
      const double t = kTwoPi * j / 97.0;
      const Vec2 nu = c.normal(t);
      CHECK(std::abs(nu.norm() - 1.0) < 1e-14);
      CHECK(std::abs(nu.dot(c.velocity(t))) < 1e-13);
      CHECK(c.speed(t) == doctest::Approx(c.velocity(t).norm()));
      if (c.kind() != tev::geometry::CurveKind::deformed_ellipse)
      {
        CHECK(nu.dot(c.position(t)) > 0.0);
      }
    }
  }
}

TEST_CASE("derivatives against finite differences")
{
  const double h = 1e-5;
  for (const auto& c : families())
  {
    for (double t : {0.0, 0.4, 1.7, 3.0, 5.9})
    {
      const Vec2 fd_v = (c.position(t + h) - c.position(t - h)) / (2 * h);
      const Vec2 fd_a = (c.velocity(t + h) - c.velocity(t - h)) / (2 * h);
      CHECK((fd_v - c.velocity(t)).norm() < 1e-7);
      CHECK((fd_a - c.acceleration(t)).norm() < 1e-7);
    }
    CHECK((c.position(0.0) - c.position(kTwoPi)).norm() < 1e-14);
    CHECK((c.velocity(0.0) - c.velocity(kTwoPi)).norm() < 1e-14);
  }
}

TEST_CASE("arc length and area")
{
  // deformed ellipse eps = 0.1, frozen from the adaptive Gauss-Kronrod oracle
  const double fixture = 5.5683581001854012;
  const auto kite = BoundaryCurve::deformed_ellipse(0.1);
  CHECK(adaptive_arc_length(kite) == doctest::Approx(fixture).epsilon(1e-14));
  CHECK(kite.arc_length() == doctest::Approx(fixture).epsilon(1e-13));

  // ellipse perimeter 4 a E(e)
  const auto ell = BoundaryCurve::ellipse(1.0, 0.8);
  const double e = std::sqrt(1.0 - 0.64);
  CHECK(ell.arc_length() == doctest::Approx(4.0 * boost::math::ellint_2(e)).epsilon(1e-13));

  for (const auto& c : families())
  {
    CHECK(c.area() > 0.0);
    CHECK(c.arc_length() == doctest::Approx(adaptive_arc_length(c)).epsilon(1e-12));
  }
  CHECK(ell.area() == doctest::Approx(std::numbers::pi * 0.8).epsilon(1e-14));
  // the deformation term does not change the enclosed area
  CHECK(BoundaryCurve::deformed_ellipse(0.3).area() == doctest::Approx(0.75 * std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("parameter validation")
{
  CHECK_THROWS(BoundaryCurve::circle(0.0));
  CHECK_THROWS(BoundaryCurve::ellipse(1.0, -0.5));
  CHECK_THROWS(BoundaryCurve::deformed_ellipse(0.5));
  CHECK_THROWS(BoundaryCurve::deformed_ellipse(-0.1));
  CHECK(BoundaryCurve::ellipse(1.0, 0.9).parameter_string() == "a=1;b=0.9");
}
