// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>

namespace tev::specfun
{

using Complex = std::complex<double>;

// Largest integer order accepted by the J_p / I_p routines.
inline constexpr int kMaxOrder = 16;

// Default cap on |z|; larger arguments are refused.
inline constexpr double kDefaultMaxArg = 1.0e4;

// Below this modulus J_p and Y_p use ascending series (evaluated in extended
// precision); above it they use the Hankel large-argument expansion.
inline constexpr double kSeriesRadius = 17.0;

class SpecfunError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// A special-function argument with its accuracy cap. Implicitly constructible
// from a complex number using the default cap.
class ComplexArg
{
public:
  ComplexArg(Complex z, double max_abs = kDefaultMaxArg);  // NOLINT(google-explicit-constructor)
  ComplexArg(double x) : ComplexArg(Complex(x, 0.0)) {}     // NOLINT(google-explicit-constructor)

  Complex value() const { return z_; }

private:
  Complex z_;
};

// Bessel function of the first kind J_p(z), 0 <= p <= kMaxOrder. J_p is entire;
// arguments with Re z < 0 are handled through J_p(-z) = (-1)^p J_p(z).
Complex bessel_j(int p, ComplexArg z);
double bessel_j(int p, double x);

// J_p'(z) from J_p' = (J_{p-1} - J_{p+1})/2 and J_0' = -J_1.
Complex bessel_j_prime(int p, ComplexArg z);
double bessel_j_prime(int p, double x);

// Value and derivative together (one sweep over orders p-1..p+1).
struct ValueAndDerivative
{
  Complex value;
  Complex derivative;
};
ValueAndDerivative bessel_j_with_derivative(int p, ComplexArg z);

// Modified Bessel I_p(x) for real x >= 0. The unscaled variants refuse
// arguments where the result would overflow; the scaled variants return
// e^{-x} I_p(x) and I_p'(x) e^{-x}.
double bessel_i(int p, double x);
double bessel_i_scaled(int p, double x);
double bessel_i_prime(int p, double x);
double bessel_i_prime_scaled(int p, double x);

struct ScaledValueAndDerivative
{
  double value;       // e^{-x} I_p(x)
  double derivative;  // e^{-x} I_p'(x)
};
ScaledValueAndDerivative bessel_i_scaled_with_derivative(int p, double x);

// Y_p(z) and H^{(1)}_p(z) = J_p(z) + i Y_p(z) for p in {0, 1}, principal
// branch. Supported sector: |arg z| <= 3pi/4, z != 0.
Complex bessel_y(int p, ComplexArg z);
Complex hankel1(int p, ComplexArg z);

// J_0, J_1, H_0^{(1)}, H_1^{(1)} at one argument; the boundary kernels need all
// four and share most of the work.
struct KernelFunctions
{
  Complex j0, j1, h0, h1;
};
KernelFunctions kernel_functions(ComplexArg z);

}  // namespace tev::specfun
