// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tev/cli/manifest.hpp"
#include "tev/types.hpp"

namespace tev::cli
{

struct ResultRow
{
  double n;
  EigenResult value;
};

struct Verdict
{
  bool pass;
  std::string direction;  // increasing | decreasing
  std::string detail;     // the violating pair on FAIL
};

struct CommandOutput
{
  RunManifest manifest;
  std::vector<ResultRow> rows;
  std::optional<Verdict> verdict;  // scan-n only
};

CommandOutput run_disk_sov(const RunManifest& m);
CommandOutput run_disk_beyn(const RunManifest& m);
CommandOutput run_bem(const RunManifest& m);
// First eigenvalue per n: smallest SoV root, or smallest real eigenvalue
// inside the contours for bem.
CommandOutput run_scan_n(const RunManifest& m);

// Strict monotonicity of the first eigenvalue: decreasing over n > 1,
// increasing over n < 1. Input need not be sorted.
Verdict monotonicity_verdict(std::vector<std::pair<double, double>> first_by_n);

std::string render(const CommandOutput& out);

// Quick identity checks, the linear contour toy and the circle cross-method
// comparison; one line per group. True if all pass.
bool selftest(std::ostream& log, int threads);

}  // namespace tev::cli
