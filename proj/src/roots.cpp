// SPDX-License-Identifier: Apache-2.0

#include "tev/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

#include "tev/diskdet.hpp"
#include "tev/parallel.hpp"
#include "tev/specfun.hpp"

namespace tev::roots
{

namespace
{

constexpr double kSuspectLevel = 1e-14;
constexpr double kDuplicateTol = 1e-8;

std::size_t node_count(const ScanConfig& cfg)
{
  return static_cast<std::size_t>(std::ceil((cfg.k_max - cfg.k_min) / cfg.grid_step - 1e-9)) + 1;
}

double node(const ScanConfig& cfg, std::size_t i, std::size_t count)
{
  return i + 1 == count ? cfg.k_max : cfg.k_min + static_cast<double>(i) * cfg.grid_step;
}

double checked(const RealFunction& f, double k)
{
  const double v = f(k);
  if (!std::isfinite(v))
  {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite function value at k = " << k;
    throw RootError(msg.str());
  }
  return v;
}

int sign(double v)
{
  return (v > 0.0) - (v < 0.0);
}

EigenResult make_result(int p, double k, double residual)
{
  EigenResult r;
  r.k = Complex(k, 0.0);
  r.bessel_order = p;
  r.multiplicity = p == 0 ? 1 : 2;
  r.residual = residual;
  r.method = "sov";
  return r;
}

// |f(root)| relative to the larger endpoint value of the bracketing cell.
double relative_residual(const RealFunction& f, const Bracket& b, double root)
{
  const double scale = std::max(std::abs(f(b.lo)), std::abs(f(b.hi)));
  const double value = std::abs(f(root));
  return scale > 0.0 ? value / scale : value;
}

void check_order_range(int p_max)
{
  if (p_max < 0 || p_max > specfun::kMaxOrder - 1)
  {
    throw std::invalid_argument("p_max must lie in [0, " + std::to_string(specfun::kMaxOrder - 1) + "]");
  }
}

}  // namespace

void ScanConfig::validate() const
{
  if (!(k_min > 0.0) || !(k_max > k_min))
  {
    throw std::invalid_argument("scan window must satisfy 0 < k_min < k_max");
  }
  if (!(grid_step > 0.0) || !(grid_step < (k_max - k_min) / 10.0))
  {
    throw std::invalid_argument("grid_step must be positive and below (k_max - k_min)/10");
  }
  if (!(tol_root > 0.0) || max_refine_iters < 1)
  {
    throw std::invalid_argument("tol_root and max_refine_iters must be positive");
  }
}

std::vector<Bracket> bracket_roots(const RealFunction& f, const ScanConfig& cfg)
{
  cfg.validate();
  const std::size_t count = node_count(cfg);
  std::vector<double> ks(count), fs(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    ks[i] = node(cfg, i, count);
    fs[i] = checked(f, ks[i]);
  }
  std::vector<Bracket> out, suspects;
  for (std::size_t i = 0; i < count; ++i)
  {
    if (fs[i] == 0.0)
    {
      out.push_back({ks[i], ks[i], false});
      continue;
    }
    if (i + 1 < count && fs[i + 1] != 0.0 && sign(fs[i]) != sign(fs[i + 1]))
    {
      out.push_back({ks[i], ks[i + 1], false});
    }
    if (std::abs(fs[i]) < kSuspectLevel)
    {
      const bool left_change = i > 0 && sign(fs[i - 1]) != sign(fs[i]);
      const bool right_change = i + 1 < count && sign(fs[i + 1]) != sign(fs[i]);
      if (!left_change && !right_change)
      {
        suspects.push_back({ks[i > 0 ? i - 1 : i], ks[i + 1 < count ? i + 1 : i], true});
      }
    }
  }
  out.insert(out.end(), suspects.begin(), suspects.end());
  return out;
}

double refine(const RealFunction& f, const Bracket& interval, const ScanConfig& cfg)
{
  if (interval.lo == interval.hi)
  {
    return interval.lo;
  }
  const double flo = checked(f, interval.lo);
  const double fhi = checked(f, interval.hi);
  if (flo == 0.0)
  {
    return interval.lo;
  }
  if (fhi == 0.0)
  {
    return interval.hi;
  }
  if (sign(flo) == sign(fhi))
  {
    throw RootError("refine: no sign change across the interval");
  }
  const double tol = cfg.tol_root;
  auto done = [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1.0, std::abs(0.5 * (a + b))); };
  std::uintmax_t iters = static_cast<std::uintmax_t>(cfg.max_refine_iters);
  const auto [a, b] = boost::math::tools::toms748_solve(f, interval.lo, interval.hi, flo, fhi, done, iters);
  if (!done(a, b))
  {
    throw RootError("refine: iteration cap exceeded");
  }
  return 0.5 * (a + b);
}

std::vector<EigenResult> collect_disk_spectrum(double n, int p_max, const ScanConfig& cfg, int threads)
{
  WaveContext(1.0, n).require_nondegenerate();
  check_order_range(p_max);
  cfg.validate();
  std::vector<std::vector<EigenResult>> per_order(static_cast<std::size_t>(p_max) + 1);
  parallel_for(per_order.size(), threads, [&](std::size_t idx) {
    const int p = static_cast<int>(idx);
    const RealFunction f = [p, n](double k) { return diskdet::det_real_axis_scaled(p, k, n); };
    for (const Bracket& b : bracket_roots(f, cfg))
    {
      if (b.suspected)
      {
        continue;
      }
      const double root = refine(f, b, cfg);
      per_order[idx].push_back(make_result(p, root, relative_residual(f, b, root)));
    }
  });
  std::vector<EigenResult> all;
  for (auto& v : per_order)
  {
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end(), [](const EigenResult& a, const EigenResult& b) {
    return a.k.real() != b.k.real() ? a.k.real() < b.k.real() : *a.bessel_order < *b.bessel_order;
  });
  // a root on a grid node can be reported by two adjacent cells
  std::vector<EigenResult> unique;
  for (const auto& r : all)
  {
    const bool repeat = std::any_of(unique.begin(), unique.end(), [&](const EigenResult& u) {
      return u.bessel_order == r.bessel_order && std::abs(u.k.real() - r.k.real()) <= kDuplicateTol;
    });
    if (!repeat)
    {
      unique.push_back(r);
    }
  }
  return unique;
}

std::optional<EigenResult> first_disk_eigenvalue(double n, int p_max, const ScanConfig& cfg)
{
  WaveContext(1.0, n).require_nondegenerate();
  check_order_range(p_max);
  cfg.validate();
  const std::size_t count = node_count(cfg);
  std::vector<RealFunction> fs;
  for (int p = 0; p <= p_max; ++p)
  {
    fs.push_back([p, n](double k) { return diskdet::det_real_axis_scaled(p, k, n); });
  }
  std::vector<double> previous(fs.size());
  double k_prev = node(cfg, 0, count);
  for (std::size_t p = 0; p < fs.size(); ++p)
  {
    previous[p] = checked(fs[p], k_prev);
  }
  for (std::size_t i = 1; i < count; ++i)
  {
    const double k = node(cfg, i, count);
    std::optional<EigenResult> best;
    for (std::size_t p = 0; p < fs.size(); ++p)
    {
      const double v = checked(fs[p], k);
      if (previous[p] == 0.0 || sign(previous[p]) != sign(v))
      {
        const Bracket b{k_prev, k, false};
        const double root = refine(fs[p], b, cfg);
        if (!best || root < best->k.real())
        {
          best = make_result(static_cast<int>(p), root, relative_residual(fs[p], b, root));
        }
      }
      previous[p] = v;
    }
    if (best)
    {
      return best;
    }
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace tev::roots
