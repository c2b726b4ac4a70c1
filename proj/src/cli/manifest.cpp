// SPDX-License-Identifier: Apache-2.0

#include "tev/cli/manifest.hpp"

#include <cstdio>

#include "tev/geometry.hpp"

namespace tev::cli
{

std::string RunManifest::geometry_params() const
{
  if (geometry == "circle")
  {
    return geometry::BoundaryCurve::circle(radius).parameter_string();
  }
  if (geometry == "ellipse")
  {
    return geometry::BoundaryCurve::ellipse(a, b).parameter_string();
  }
  if (geometry == "kite")
  {
    return geometry::BoundaryCurve::deformed_ellipse(eps).parameter_string();
  }
  return "";
}

nlohmann::ordered_json RunManifest::to_json() const
{
  nlohmann::ordered_json j;
  j["command"] = command;
  j["method"] = method;
  j["geometry"] = geometry;
  j["params"] = geometry_params();
  j["n"] = n_values;
  if (method == "sov")
  {
    j["p_max"] = p_max;
    j["k_min"] = k_min;
    j["k_max"] = k_max;
    j["grid_step"] = grid_step;
    j["tol_root"] = tol_root;
    j["max_refine_iters"] = max_refine_iters;
  }
  else
  {
    if (method == "beyn")
    {
      j["p"] = p;
    }
    auto& cs = j["contours"] = nlohmann::ordered_json::array();
    for (const auto& c : contours)
    {
      cs.push_back({{"center_re", c.center.real()}, {"center_im", c.center.imag()}, {"radius", c.radius}});
    }
    if (method == "bem")
    {
      j["nodes"] = nodes;
      j["modes"] = modes;
      j["real_only"] = real_only;
      j["imag_tol"] = imag_tol;
    }
    j["quad_points"] = quad_points;
    j["probe_cols"] = probe_cols;
    j["rank_tol"] = rank_tol;
    j["residual_tol"] = residual_tol;
    j["rng_seed"] = rng_seed;
  }
  j["threads"] = threads;
  j["out"] = out;
  j["format"] = format == Format::csv ? "csv" : "json";
  return j;
}

std::string fnv1a_hex(const std::string& text)
{
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text)
  {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string RunManifest::hash() const
{
  return fnv1a_hex(to_json().dump());
}

}  // namespace tev::cli
