// SPDX-License-Identifier: Apache-2.0
//
// Everything needed to rerun a command; embedded in every result file.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tev/types.hpp"

namespace tev::cli
{

enum class Format
{
  csv,
  json,
};

struct Contour
{
  Complex center;
  double radius;
};

struct RunManifest
{
  std::string command;  // disk-sov, disk-beyn, bem, scan-n
  std::string method;   // sov, beyn, bem

  // geometry: disk for the determinant commands, else circle|ellipse|kite
  std::string geometry = "disk";
  double radius = 1.0;
  double a = 1.0;
  double b = 1.0;
  double eps = 0.0;

  std::vector<double> n_values;  // one entry except for scan-n

  // separation of variables
  int p_max = 10;
  int p = 0;  // disk-beyn only
  double k_min = 0.5;
  double k_max = 10.0;
  double grid_step = 1e-3;
  double tol_root = 1e-12;
  int max_refine_iters = 200;

  // contour solver and boundary discretization
  std::vector<Contour> contours;
  int nodes = 120;
  int quad_points = 96;
  int modes = 20;
  int probe_cols = 24;
  double rank_tol = 1e-4;
  double residual_tol = 1e-6;
  std::uint64_t rng_seed = 1;
  bool real_only = true;
  double imag_tol = 1e-3;

  int threads = 1;
  std::string out;  // empty: standard output
  Format format = Format::csv;

  // "r=1", "a=1;b=0.9", "eps=0.2", or "" for the disk
  std::string geometry_params() const;
  nlohmann::ordered_json to_json() const;
  // FNV-1a 64 of the compact JSON, 16 hex digits
  std::string hash() const;
};

std::string fnv1a_hex(const std::string& text);

}  // namespace tev::cli
