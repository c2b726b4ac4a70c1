// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace tev
{

using Complex = std::complex<double>;

// Wavenumber k and constant refractive index n of the obstacle.
class WaveContext
{
public:
  WaveContext(Complex k, double n);

  Complex k() const { return k_; }
  double n() const { return n_; }

  // n = 1 makes the two factor problems coincide and every k is an eigenvalue.
  bool degenerate() const { return n_ == 1.0; }
  void require_nondegenerate() const;

private:
  Complex k_;
  double n_;
};

struct EigenResult
{
  Complex k;
  int multiplicity = 1;
  std::optional<int> bessel_order;  // separation of variables only
  double residual = 0.0;
  std::string method;
};

}  // namespace tev
