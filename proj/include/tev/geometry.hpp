// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <Eigen/Dense>

namespace tev::geometry
{

using Vec2 = Eigen::Vector2d;

enum class CurveKind
{
  circle,
  ellipse,
  deformed_ellipse,
};

// Closed analytic curve t in [0, 2pi), counterclockwise.
class BoundaryCurve
{
public:
  static BoundaryCurve circle(double radius);
  static BoundaryCurve ellipse(double a, double b);
  // (0.75 cos t + eps cos 2t, sin t), eps in [0, 0.5)
  static BoundaryCurve deformed_ellipse(double epsilon);

  Vec2 position(double t) const;
  Vec2 velocity(double t) const;
  Vec2 acceleration(double t) const;
  Vec2 normal(double t) const;  // outward unit normal (y', -x')/|x'|
  double speed(double t) const;

  double arc_length() const;
  double area() const;  // Green's theorem; positive for counterclockwise curves

  CurveKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::string parameter_string() const;

private:
  BoundaryCurve(CurveKind kind, std::string name, double a, double b, double eps);

  CurveKind kind_;
  std::string name_;
  double a_;
  double b_;
  double eps_;
};

}  // namespace tev::geometry
