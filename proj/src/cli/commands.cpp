// SPDX-License-Identifier: Apache-2.0

#include "tev/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tev/bem.hpp"
#include "tev/beyn.hpp"
#include "tev/diskdet.hpp"
#include "tev/roots.hpp"
#include "tev/specfun.hpp"

namespace tev::cli
{

namespace
{

roots::ScanConfig scan_config(const RunManifest& m)
{
  roots::ScanConfig cfg;
  cfg.k_min = m.k_min;
  cfg.k_max = m.k_max;
  cfg.grid_step = m.grid_step;
  cfg.tol_root = m.tol_root;
  cfg.max_refine_iters = m.max_refine_iters;
  cfg.validate();
  return cfg;
}

beyn::ContourConfig contour_config(const RunManifest& m, const Contour& c)
{
  beyn::ContourConfig cfg;
  cfg.center = c.center;
  cfg.radius = c.radius;
  cfg.quad_points = m.quad_points;
  cfg.probe_cols = m.probe_cols;
  cfg.rank_tol = m.rank_tol;
  cfg.residual_tol = m.residual_tol;
  cfg.rng_seed = m.rng_seed;
  cfg.threads = m.threads;
  cfg.validate();
  return cfg;
}

double single_n(const RunManifest& m)
{
  if (m.n_values.size() != 1)
  {
    throw std::invalid_argument("expected exactly one value of n");
  }
  return m.n_values.front();
}

geometry::BoundaryCurve make_curve(const RunManifest& m)
{
  if (m.geometry == "circle")
  {
    return geometry::BoundaryCurve::circle(m.radius);
  }
  if (m.geometry == "ellipse")
  {
    return geometry::BoundaryCurve::ellipse(m.a, m.b);
  }
  if (m.geometry == "kite")
  {
    return geometry::BoundaryCurve::deformed_ellipse(m.eps);
  }
  throw std::invalid_argument("unknown geometry '" + m.geometry + "'");
}

// Contour results merged over all contours, duplicates from overlapping
// contours dropped.
std::vector<EigenResult> solve_contours(const RunManifest& m, const beyn::MatrixFunction& f)
{
  if (m.contours.empty())
  {
    throw std::invalid_argument("at least one contour (--center, --radius) is required");
  }
  std::vector<EigenResult> all;
  for (const auto& c : m.contours)
  {
    const auto cfg = contour_config(m, c);
    for (auto& r : beyn::solve(f, cfg))
    {
      const bool seen = std::any_of(all.begin(), all.end(), [&](const EigenResult& e) {
        return std::abs(e.k - r.k) <= std::max(cfg.cluster_radius, 1e-8) * std::max(1.0, std::abs(r.k));
      });
      if (!seen)
      {
        all.push_back(std::move(r));
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const EigenResult& x, const EigenResult& y) {
    return x.k.real() != y.k.real() ? x.k.real() < y.k.real() : x.k.imag() < y.k.imag();
  });
  return all;
}

std::vector<EigenResult> bem_eigenvalues(const RunManifest& m, double n)
{
  WaveContext(1.0, n).require_nondegenerate();
  const bem::Discretization disc(make_curve(m), m.nodes);
  const bem::ModalBasis basis(m.nodes, m.modes);
  const beyn::MatrixFunction f = [&](Complex k) {
    return bem::compress(bem::assemble_system(disc, WaveContext(k, n)), basis);
  };
  auto found = solve_contours(m, f);
  if (m.real_only)
  {
    std::erase_if(found, [&](const EigenResult& r) { return std::abs(r.k.imag()) > m.imag_tol; });
  }
  return found;
}

std::string format_number(double v, bool fixed4)
{
  char buf[64];
  if (fixed4)
  {
    std::snprintf(buf, sizeof buf, "%.4f", v);
    if (std::string(buf) == "-0.0000")
    {
      return "0.0000";
    }
  }
  else
  {
    std::snprintf(buf, sizeof buf, "%.15g", v);
  }
  return buf;
}

std::string format_short(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string format_n(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

CommandOutput run_disk_sov(const RunManifest& m)
{
  const double n = single_n(m);
  CommandOutput out{m, {}, std::nullopt};
  for (auto& r : roots::collect_disk_spectrum(n, m.p_max, scan_config(m), m.threads))
  {
    out.rows.push_back({n, std::move(r)});
  }
  return out;
}

CommandOutput run_disk_beyn(const RunManifest& m)
{
  const double n = single_n(m);
  WaveContext(1.0, n).require_nondegenerate();
  const int p = m.p;
  const beyn::MatrixFunction f = [=](Complex z) -> Eigen::MatrixXcd {
    return diskdet::assemble(p, WaveContext(z, n)).entries;
  };
  CommandOutput out{m, {}, std::nullopt};
  for (auto& r : solve_contours(m, f))
  {
    r.bessel_order = p;
    out.rows.push_back({n, std::move(r)});
  }
  return out;
}

CommandOutput run_bem(const RunManifest& m)
{
  const double n = single_n(m);
  CommandOutput out{m, {}, std::nullopt};
  for (auto& r : bem_eigenvalues(m, n))
  {
    r.method = "bem";
    out.rows.push_back({n, std::move(r)});
  }
  return out;
}

CommandOutput run_scan_n(const RunManifest& m)
{
  if (m.n_values.empty())
  {
    throw std::invalid_argument("scan-n needs at least one value of n");
  }
  CommandOutput out{m, {}, std::nullopt};
  std::vector<std::pair<double, double>> first;
  for (double n : m.n_values)
  {
    std::optional<EigenResult> r;
    if (m.method == "sov")
    {
      r = roots::first_disk_eigenvalue(n, m.p_max, scan_config(m));
    }
    else
    {
      RunManifest real = m;
      real.real_only = true;
      const auto found = bem_eigenvalues(real, n);
      if (!found.empty())
      {
        r = found.front();
      }
    }
    if (!r)
    {
      throw std::runtime_error("no eigenvalue found for n=" + format_n(n));
    }
    first.emplace_back(n, r->k.real());
    out.rows.push_back({n, std::move(*r)});
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const ResultRow& x, const ResultRow& y) { return x.n < y.n; });
  out.verdict = monotonicity_verdict(std::move(first));
  return out;
}

Verdict monotonicity_verdict(std::vector<std::pair<double, double>> first_by_n)
{
  std::stable_sort(first_by_n.begin(), first_by_n.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  bool below = false, above = false;
  for (const auto& [n, k] : first_by_n)
  {
    if (n == 1.0)
    {
      throw std::invalid_argument("n = 1 has no isolated first eigenvalue");
    }
    (n < 1.0 ? below : above) = true;
  }
  Verdict v{true, below && above ? "increasing below 1, decreasing above 1" : (below ? "increasing" : "decreasing"), ""};
  for (std::size_t i = 1; i < first_by_n.size(); ++i)
  {
    const auto& [n0, k0] = first_by_n[i - 1];
    const auto& [n1, k1] = first_by_n[i];
    if (n0 < 1.0 && n1 > 1.0)
    {
      continue;
    }
    const bool ok = n1 < 1.0 ? k1 > k0 : k1 < k0;
    if (!ok || n0 == n1)
    {
      v.pass = false;
      v.detail = "k1(" + format_n(n0) + ")=" + format_number(k0, false) + " vs k1(" + format_n(n1) +
                 ")=" + format_number(k1, false);
      break;
    }
  }
  return v;
}

std::string render(const CommandOutput& out)
{
  const RunManifest& m = out.manifest;
  const std::string hash = m.hash();
  const bool coarse = m.method == "bem";
  const std::string geometry = m.geometry, params = m.geometry_params();
  std::ostringstream s;
  if (m.format == Format::json)
  {
    nlohmann::ordered_json j;
    j["manifest"] = m.to_json();
    j["manifest_hash"] = hash;
    auto& rows = j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : out.rows)
    {
      nlohmann::ordered_json row;
      row["method"] = r.value.method;
      row["geometry"] = geometry;
      row["params"] = params;
      row["n"] = r.n;
      row["re_k"] = std::stod(format_number(r.value.k.real(), coarse));
      row["im_k"] = std::stod(format_number(r.value.k.imag(), coarse));
      row["multiplicity"] = r.value.multiplicity;
      row["p"] = r.value.bessel_order ? nlohmann::ordered_json(*r.value.bessel_order) : nlohmann::ordered_json();
      row["residual"] = std::stod(format_short(r.value.residual));
      rows.push_back(row);
    }
    if (out.verdict)
    {
      j["verdict"] = {{"pass", out.verdict->pass}, {"direction", out.verdict->direction}, {"detail", out.verdict->detail}};
    }
    s << j.dump(2) << '\n';
    return s.str();
  }
  s << "# manifest " << m.to_json().dump() << '\n';
  s << "method,geometry,params,n,re_k,im_k,multiplicity,p,residual,manifest_hash\n";
  for (const auto& r : out.rows)
  {
    s << r.value.method << ',' << geometry << ',' << params << ',' << format_n(r.n) << ','
      << format_number(r.value.k.real(), coarse) << ',' << format_number(r.value.k.imag(), coarse) << ','
      << r.value.multiplicity << ',' << (r.value.bessel_order ? std::to_string(*r.value.bessel_order) : "") << ','
      << format_short(r.value.residual) << ',' << hash << '\n';
  }
  if (out.verdict)
  {
    s << "# verdict " << (out.verdict->pass ? "PASS" : "FAIL") << ' ' << out.verdict->direction;
    if (!out.verdict->detail.empty())
    {
      s << ' ' << out.verdict->detail;
    }
    s << '\n';
  }
  return s.str();
}

bool selftest(std::ostream& log, int threads)
{
  bool all = true;
  auto report = [&](const std::string& group, bool ok, const std::string& note) {
    log << (ok ? "PASS " : "FAIL ") << group << ": " << note << '\n';
    all = all && ok;
  };
  auto guarded = [&](const std::string& group, auto body) {
    try
    {
      body();
    }
    catch (const std::exception& e)
    {
      report(group, false, e.what());
    }
  };

  guarded("specfun identities", [&] {
    double wronskian = 0.0, reflection = 0.0, recurrence = 0.0, derivative = 0.0;
    for (double x = 0.1; x <= 50.0; x *= 1.7)
    {
      const double w = specfun::bessel_j(1, x) * specfun::bessel_y(0, x).real() -
                       specfun::bessel_j(0, x) * specfun::bessel_y(1, x).real();
      wronskian = std::max(wronskian, std::abs(w - 2.0 / (std::numbers::pi * x)) * x);
    }
    for (const Complex z : {Complex(0.7, 0.2), Complex(3.0, -1.0), Complex(8.5, 2.5), Complex(15.0, 0.3)})
    {
      for (int p = 1; p < specfun::kMaxOrder; ++p)
      {
        const Complex jp = specfun::bessel_j(p, z);
        const double scale = std::abs(jp) + std::abs(specfun::bessel_j(p - 1, z)) + 1e-300;
        reflection = std::max(reflection, std::abs(specfun::bessel_j(p, -z) - (p % 2 ? -jp : jp)) / (std::abs(jp) + 1e-300));
        recurrence = std::max(recurrence, std::abs(specfun::bessel_j(p - 1, z) + specfun::bessel_j(p + 1, z) -
                                                   2.0 * p / z * jp) / scale);
        const double h = 1e-6;
        const Complex fd = (specfun::bessel_j(p, z + h) - specfun::bessel_j(p, z - h)) / (2.0 * h);
        derivative = std::max(derivative, std::abs(fd - specfun::bessel_j_prime(p, z)) / (std::abs(fd) + 1.0));
      }
    }
    std::ostringstream note;
    note << "wronskian " << format_short(wronskian) << ", reflection " << format_short(reflection) << ", recurrence "
         << format_short(recurrence) << ", derivative " << format_short(derivative);
    report("specfun identities", wronskian < 1e-10 && reflection < 1e-10 && recurrence < 1e-9 && derivative < 1e-6,
           note.str());
  });

  guarded("contour solver linear toy", [&] {
    const beyn::MatrixFunction toy = [](Complex z) {
      Eigen::MatrixXcd a = z * Eigen::MatrixXcd::Identity(3, 3);
      a.diagonal() -= Eigen::Vector3cd(1.0, 2.0, 5.0);
      return a;
    };
    beyn::ContourConfig cfg;
    cfg.center = 1.5;
    cfg.radius = 1.0;
    const auto r = beyn::solve(toy, cfg);
    const bool ok = r.size() == 2 && std::abs(r[0].k - 1.0) < 1e-12 && std::abs(r[1].k - 2.0) < 1e-12;
    report("contour solver linear toy", ok, std::to_string(r.size()) + " eigenvalues inside |z-1.5|<1");
  });

  guarded("circle cross-method", [&] {
    RunManifest m;
    m.command = "bem";
    m.method = "bem";
    m.geometry = "circle";
    m.n_values = {10.0};
    m.contours = {{4.7, 0.5}};
    m.threads = threads;
    const auto bem = run_bem(m).rows;
    roots::ScanConfig cfg;
    cfg.k_min = 4.2;
    cfg.k_max = 5.2;
    const auto sov = roots::collect_disk_spectrum(10.0, 10, cfg, threads);
    bool ok = bem.size() == sov.size();
    for (std::size_t i = 0; ok && i < bem.size(); ++i)
    {
      ok = std::abs(bem[i].value.k - sov[i].k) < 5e-4 && bem[i].value.multiplicity == sov[i].multiplicity;
    }
    report("circle cross-method", ok,
           std::to_string(bem.size()) + " boundary-integral vs " + std::to_string(sov.size()) + " Fourier-Bessel roots");
  });
  return all;
}

}  // namespace tev::cli
