// SPDX-License-Identifier: Apache-2.0

#include "tev/types.hpp"

#include <cmath>

namespace tev
{

WaveContext::WaveContext(Complex k, double n) : k_(k), n_(n)
{
  if (!(n > 0.0) || !std::isfinite(n))
  {
    throw std::invalid_argument("refractive index n must be a positive finite number");
  }
  if (k == Complex(0.0, 0.0) || !std::isfinite(k.real()) || !std::isfinite(k.imag()))
  {
    throw std::invalid_argument("wavenumber k must be finite and nonzero");
  }
}

void WaveContext::require_nondegenerate() const
{
  if (degenerate())
  {
    throw std::invalid_argument("n = 1 is degenerate: every k is an eigenvalue");
  }
}

}  // namespace tev
