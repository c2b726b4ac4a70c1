// SPDX-License-Identifier: Apache-2.0
//
// Fourier-Bessel matching matrix on the unit disk. Unknowns are the
// coefficients (a_w, b_w, a_v, b_v) of J_p(qkr), J_p(iqkr), J_p(kr), J_p(ikr)
// with q = n^{1/4}; rows are the traces w = v, dw/dr = dv/dr, Lw = Lv and
// dLw/dr = dLv/dr at r = 1, divided by k, k^2, k^3.

#pragma once

#include <Eigen/Dense>

#include "tev/types.hpp"

namespace tev::diskdet
{

struct DiskMatrix
{
  int order;
  Eigen::Matrix4cd entries;
  WaveContext context;
};

DiskMatrix assemble(int p, const WaveContext& ctx);

Complex det(int p, const WaveContext& ctx);

// For real k > 0 columns 2 and 4 equal i^p times real columns built from I_p,
// so det = i^{2p} det_real_axis.
double det_real_axis(int p, double k, double n);

// Same sign as det_real_axis, but with e^{qk} and e^{k} divided out of columns
// 2 and 4 and, for k > 20, each row divided by its largest entry. Finite for
// every admissible argument; this is what the root scan evaluates.
double det_real_axis_scaled(int p, double k, double n);

// The real matrix behind det_real_axis_scaled.
Eigen::Matrix4d real_axis_matrix_scaled(int p, double k, double n);

}  // namespace tev::diskdet
