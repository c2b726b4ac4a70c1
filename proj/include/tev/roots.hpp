// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tev/types.hpp"

namespace tev::roots
{

using RealFunction = std::function<double(double)>;

struct ScanConfig
{
  double k_min = 0.5;
  double k_max = 10.0;
  double grid_step = 1e-3;
  double tol_root = 1e-12;  // bracket width relative to max(1, |k|)
  int max_refine_iters = 200;

  void validate() const;
};

struct Bracket
{
  double lo;
  double hi;
  // |f| fell below 1e-14 at a node without a sign change: a possible double
  // root or near miss, left for manual review.
  bool suspected = false;
};

class RootError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Sign-change cells of f on the grid k_min, k_min + h, ..., k_max, followed by
// the suspected cells. A node where f is exactly zero yields a degenerate
// [k, k] bracket.
std::vector<Bracket> bracket_roots(const RealFunction& f, const ScanConfig& cfg);

// Bracketing refinement (TOMS 748, a Brent-class method). Returns the midpoint
// of the final bracket.
double refine(const RealFunction& f, const Bracket& interval, const ScanConfig& cfg);

// All real eigenvalues of the unit disk in the window, for Bessel orders
// 0..p_max, sorted by k. Orders p >= 1 carry multiplicity 2.
std::vector<EigenResult> collect_disk_spectrum(double n, int p_max, const ScanConfig& cfg, int threads = 1);

// Smallest real eigenvalue in the window over orders 0..p_max, scanning
// upward and stopping at the first sign change.
std::optional<EigenResult> first_disk_eigenvalue(double n, int p_max, const ScanConfig& cfg);

}  // namespace tev::roots
