// SPDX-License-Identifier: Apache-2.0

#include "tev/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tev::geometry
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxEpsilon = 0.5;

// Trapezoidal rule on a periodic analytic integrand converges geometrically.
template <typename F>
double periodic_integral(F f)
{
  constexpr int points = 2048;
  // compensated sum
  double sum = 0.0, carry = 0.0;
  for (int j = 0; j < points; ++j)
  {
    const double term = f(kTwoPi * j / points);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return (sum + carry) * kTwoPi / points;
}

void require_positive(double v, const char* what)
{
  if (!(v > 0.0) || !std::isfinite(v))
  {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

}  // namespace

BoundaryCurve::BoundaryCurve(CurveKind kind, std::string name, double a, double b, double eps)
    : kind_(kind), name_(std::move(name)), a_(a), b_(b), eps_(eps)
{
}

BoundaryCurve BoundaryCurve::circle(double radius)
{
  require_positive(radius, "radius");
  return {CurveKind::circle, "circle", radius, radius, 0.0};
}

BoundaryCurve BoundaryCurve::ellipse(double a, double b)
{
  require_positive(a, "half-axis a");
  require_positive(b, "half-axis b");
  return {CurveKind::ellipse, "ellipse", a, b, 0.0};
}

BoundaryCurve BoundaryCurve::deformed_ellipse(double epsilon)
{
  if (!(epsilon >= 0.0) || !(epsilon < kMaxEpsilon))
  {
    throw std::invalid_argument("deformation epsilon must lie in [0, 0.5)");
  }
  return {CurveKind::deformed_ellipse, "kite", 0.75, 1.0, epsilon};
}

Vec2 BoundaryCurve::position(double t) const
{
  return {a_ * std::cos(t) + eps_ * std::cos(2.0 * t), b_ * std::sin(t)};
}

Vec2 BoundaryCurve::velocity(double t) const
{
  return {-a_ * std::sin(t) - 2.0 * eps_ * std::sin(2.0 * t), b_ * std::cos(t)};
}

Vec2 BoundaryCurve::acceleration(double t) const
{
  return {-a_ * std::cos(t) - 4.0 * eps_ * std::cos(2.0 * t), -b_ * std::sin(t)};
}

double BoundaryCurve::speed(double t) const
{
  return velocity(t).norm();
}

Vec2 BoundaryCurve::normal(double t) const
{
  const Vec2 v = velocity(t);
  return Vec2(v.y(), -v.x()) / v.norm();
}

double BoundaryCurve::arc_length() const
{
  return periodic_integral([this](double t) { return speed(t); });
}

double BoundaryCurve::area() const
{
  return 0.5 * periodic_integral([this](double t) {
    const Vec2 x = position(t), v = velocity(t);
    return x.x() * v.y() - x.y() * v.x();
  });
}

std::string BoundaryCurve::parameter_string() const
{
  std::ostringstream out;
  out.precision(12);
  switch (kind_)
  {
    case CurveKind::circle: out << "r=" << a_; break;
    case CurveKind::ellipse: out << "a=" << a_ << ";b=" << b_; break;
    case CurveKind::deformed_ellipse: out << "eps=" << eps_; break;
  }
  return out.str();
}

}  // namespace tev::geometry
