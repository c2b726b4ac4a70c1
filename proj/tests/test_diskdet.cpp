// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/SVD>

#include "oracle/hp_disk.hpp"
#include "tev/diskdet.hpp"
#include "tev/specfun.hpp"

using tev::Complex;
using tev::WaveContext;
namespace dd = tev::diskdet;
namespace oracle = tev::oracle;

namespace
{

const Complex I(0.0, 1.0);

double oracle_det(int p, double k, double n)
{
  return static_cast<double>(oracle::physical_disk_determinant(p, k, n)) / std::pow(k, 6);
}

// sign-change cells of the oracle determinant on a uniform grid
std::vector<double> oracle_sign_changes(int p, double n, double lo, double hi, double step)
{
  std::vector<double> cells;
  double k_prev = lo, f_prev = oracle_det(p, lo, n);
  for (double k = lo + step; k <= hi + 1e-12; k += step)
  {
    const double f = oracle_det(p, k, n);
    if ((f > 0) != (f_prev > 0))
    {
      cells.push_back(k_prev);
    }
    k_prev = k;
    f_prev = f;
  }
  return cells;
}

}  // namespace

TEST_CASE("matrix layout follows the four matching conditions")
{
  const WaveContext ctx(4.2, 10.0);
  const auto m = dd::assemble(2, ctx).entries;
  const double q = std::pow(10.0, 0.25);
  const Complex jq = tev::specfun::bessel_j(2, q * 4.2);
  const Complex jk = tev::specfun::bessel_j(2, 4.2);
  const Complex jik = tev::specfun::bessel_j(2, I * 4.2);
  CHECK(std::abs(m(0, 0) - jq) < 1e-15);
  CHECK(std::abs(m(0, 2) + jk) < 1e-15);
  CHECK(std::abs(m(2, 0) + std::sqrt(10.0) * jq) < 1e-14);
  CHECK(std::abs(m(2, 3) + jik) < 1e-14);
  CHECK(std::abs(m(3, 2) - tev::specfun::bessel_j_prime(2, 4.2)) < 1e-15);
}

TEST_CASE("real-axis determinant against the physical-trace oracle")
{
  for (const auto& [p, k, n] : std::vector<std::tuple<int, double, double>>{
           {0, 1.3, 10.0}, {1, 4.43, 10.0}, {3, 2.2, 100.0}, {2, 8.9, 0.125}, {6, 7.0, 1.0 / 128}, {0, 12.0, 1000.0}})
  {
    const double ref = oracle_det(p, k, n);
    INFO("p=" << p << " k=" << k << " n=" << n);
    CHECK(std::abs(dd::det_real_axis(p, k, n) - ref) <= 1e-9 * std::abs(ref));
  }
}

TEST_CASE("complex determinant equals i^{2p} times the real-axis determinant")
{
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<int> order(0, 12);
  std::uniform_real_distribution<double> wave(0.5, 15.0);
  std::uniform_real_distribution<double> log_n(std::log(1.0 / 128), std::log(1000.0));
  for (int trial = 0; trial < 20; ++trial)
  {
    const int p = order(gen);
    const double k = wave(gen);
    const double n = std::exp(log_n(gen));
    const Complex full = dd::det(p, WaveContext(k, n));
    const double real = dd::det_real_axis(p, k, n);
    const Complex expect = std::pow(I, 2 * p) * real;
    INFO("p=" << p << " k=" << k << " n=" << n);
    if (std::abs(real) < 1e-12 && std::abs(full) < 1e-12)
    {
      continue;
    }
    CHECK(std::abs(full - expect) <= 1e-9 * std::abs(real));
  }
}

TEST_CASE("scaled determinant keeps the sign")
{
  for (double k : {0.7, 4.43, 19.0, 21.0, 24.5})
  {
    for (int p : {0, 3, 9})
    {
      const double a = dd::det_real_axis(p, k, 10.0);
      const double b = dd::det_real_axis_scaled(p, k, 10.0);
      CHECK((a > 0) == (b > 0));
    }
  }
  // large-k arguments that overflow the unscaled form stay finite
  CHECK(std::isfinite(dd::det_real_axis_scaled(4, 200.0, 1000.0)));
  CHECK_THROWS(dd::det_real_axis(4, 200.0, 1000.0));
}

TEST_CASE("tabulated roots make the determinant vanish")
{
  struct Root
  {
    int p;
    double k, n;
  };
  for (const Root& r : {Root{0, 4.907103277141769, 10.0}, Root{1, 4.429820190009274, 10.0},
                        Root{0, 1.889337846549858, 100.0}})
  {
    // the determinant cancels down to its rounding floor at a root: require a
    // sign change within 1e-9 and a value far below the nearby magnitude
    const double lo = dd::det_real_axis(r.p, r.k - 1e-9, r.n), hi = dd::det_real_axis(r.p, r.k + 1e-9, r.n);
    const double near = std::max(std::abs(dd::det_real_axis(r.p, r.k - 1e-3, r.n)),
                                 std::abs(dd::det_real_axis(r.p, r.k + 1e-3, r.n)));
    INFO("p=" << r.p << " k=" << r.k);
    CHECK(lo * hi < 0.0);
    CHECK(std::abs(dd::det_real_axis(r.p, r.k, r.n)) <= 1e-8 * near);
    const Complex full = dd::det(r.p, WaveContext(r.k, r.n));
    CHECK(std::abs(full) <= 1e-8 * near);
  }
  CHECK(dd::det_real_axis(1, 4.42, 10.0) * dd::det_real_axis(1, 4.44, 10.0) < 0.0);
}

TEST_CASE("dense oracle scan: no p = 1 root near k = 4")
{
  const auto cells = oracle_sign_changes(1, 10.0, 0.5, 10.0, 0.01);
  REQUIRE(!cells.empty());
  CHECK(cells.front() == doctest::Approx(4.42).epsilon(1e-9));
  for (double c : cells)
  {
    CHECK(std::abs(c - 4.0) > 0.4);
    // every oracle cell is also a sign change for the library
    CHECK(dd::det_real_axis_scaled(1, c, 10.0) * dd::det_real_axis_scaled(1, c + 0.01, 10.0) < 0.0);
  }
  CHECK(std::abs(dd::det(1, WaveContext(4.0, 10.0))) > 0.0);
}

TEST_CASE("n = 1 makes the determinant vanish identically")
{
  for (int s = 0; s < 50; ++s)
  {
    const double k = 0.5 + 0.37 * s;
    for (int p : {0, 2, 7})
    {
      const auto m = dd::assemble(p, WaveContext(k, 1.0)).entries;
      CHECK((m.col(0) + m.col(2)).norm() == 0.0);
      const double scale = m.col(0).norm() * m.col(1).norm() * m.col(2).norm() * m.col(3).norm();
      CHECK(std::abs(m.determinant()) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("null vector at a root reproduces the matching conditions")
{
  const int p = 1;
  const double n = 10.0, k = 4.429820190009274;
  const double q = std::pow(n, 0.25);
  const auto m = dd::assemble(p, WaveContext(k, n)).entries;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  CHECK(s(3) <= 1e-8 * s(0));
  const Eigen::Vector4cd c = svd.matrixV().col(3);

  // traces from the oracle radial functions, independent of the matrix code
  auto j = [&](double x) { return oracle::bessel_j(p, Complex(x, 0.0)); };
  auto jd = [&](double x) { return 0.5 * (oracle::bessel_j(p - 1, x) - oracle::bessel_j(p + 1, x)); };
  auto ji = [&](double x) { return oracle::bessel_j(p, Complex(0.0, x)); };
  auto jid = [&](double x) {
    return 0.5 * (oracle::bessel_j(p - 1, Complex(0.0, x)) - oracle::bessel_j(p + 1, Complex(0.0, x)));
  };
  const double a = q * k;
  const Complex w0 = c(0) * j(a) + c(1) * ji(a);
  const Complex v0 = c(2) * j(k) + c(3) * ji(k);
  const Complex w1 = c(0) * a * jd(a) + c(1) * I * a * jid(a);
  const Complex v1 = c(2) * k * jd(k) + c(3) * I * k * jid(k);
  const Complex w2 = -a * a * (c(0) * j(a) - c(1) * ji(a));
  const Complex v2 = -k * k * (c(2) * j(k) - c(3) * ji(k));
  const Complex w3 = -a * a * a * (c(0) * jd(a) - c(1) * I * jid(a));
  const Complex v3 = -k * k * k * (c(2) * jd(k) - c(3) * I * jid(k));
  CHECK(std::abs(w0 - v0) <= 1e-7 * std::abs(c(1) * ji(a)));
  CHECK(std::abs(w1 - v1) <= 1e-7 * std::abs(c(1) * a * jid(a)));
  CHECK(std::abs(w2 - v2) <= 1e-7 * std::abs(a * a * c(1) * ji(a)));
  CHECK(std::abs(w3 - v3) <= 1e-7 * std::abs(a * a * a * c(1) * jid(a)));
}

TEST_CASE("argument validation")
{
  CHECK_THROWS(WaveContext(0.0, 10.0));
  CHECK_THROWS(WaveContext(1.0, 0.0));
  CHECK_THROWS(WaveContext(1.0, -2.0));
  CHECK_NOTHROW(WaveContext(1.0, 1.0));
  CHECK(WaveContext(1.0, 1.0).degenerate());
  CHECK_THROWS(WaveContext(1.0, 1.0).require_nondegenerate());
  CHECK_THROWS(dd::det_real_axis(0, -1.0, 10.0));
  CHECK_THROWS(dd::assemble(17, WaveContext(1.0, 10.0)));
}
