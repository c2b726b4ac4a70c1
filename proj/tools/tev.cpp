// SPDX-License-Identifier: Apache-2.0
//
// tev: transmission eigenvalues of the biharmonic plate problem.
//   tev disk-sov  --n 10 --p-max 10 --k-min 0.5 --k-max 9
//   tev disk-beyn --n 10 --p 0 --center 3.5 --center-im 0.7 --radius 0.3
//   tev bem       --geometry ellipse --b 0.9 --n 10 --center 5.0 --radius 0.7
//   tev scan-n    --n 2 4 10 100 1000 --k-max 25 --p-max 15
//   tev selftest
// Exit codes: 0 ok, 1 usage, 2 numerical failure, 3 monotonicity FAIL.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tev/cli/commands.hpp"

namespace
{

using tev::cli::RunManifest;

struct Raw
{
  std::vector<double> centers, centers_im, radii;
  std::string format = "csv";
  bool keep_complex = false;
};

void common_options(CLI::App* sub, RunManifest& m, Raw& raw)
{
  sub->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", m.out, "output file (default: standard output)");
  sub->add_option("--threads", m.threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
}

void window_options(CLI::App* sub, RunManifest& m)
{
  sub->add_option("--p-max", m.p_max, "largest Bessel order")->check(CLI::Range(0, 15));
  sub->add_option("--k-min", m.k_min, "search window start");
  sub->add_option("--k-max", m.k_max, "search window end");
  sub->add_option("--grid-step", m.grid_step, "bracketing resolution");
  sub->add_option("--tol-root", m.tol_root, "relative bracket width at convergence");
  sub->add_option("--max-refine-iters", m.max_refine_iters);
}

void contour_options(CLI::App* sub, RunManifest& m, Raw& raw)
{
  sub->add_option("--center", raw.centers, "contour centre, real part (repeatable)");
  sub->add_option("--center-im", raw.centers_im, "contour centre, imaginary part");
  sub->add_option("--radius", raw.radii, "contour radius (one per centre)");
  sub->add_option("--quad", m.quad_points, "trapezoidal nodes per contour");
  sub->add_option("--probe-cols", m.probe_cols);
  sub->add_option("--rank-tol", m.rank_tol);
  sub->add_option("--residual-tol", m.residual_tol);
  sub->add_option("--seed", m.rng_seed, "probe block seed");
}

void finish_contours(RunManifest& m, const Raw& raw)
{
  if (raw.centers.size() != raw.radii.size())
  {
    throw std::invalid_argument("--center and --radius must be given the same number of times");
  }
  if (!raw.centers_im.empty() && raw.centers_im.size() != raw.centers.size())
  {
    throw std::invalid_argument("--center-im must match --center");
  }
  for (std::size_t i = 0; i < raw.centers.size(); ++i)
  {
    m.contours.push_back({{raw.centers[i], raw.centers_im.empty() ? 0.0 : raw.centers_im[i]}, raw.radii[i]});
  }
}

int emit(const tev::cli::CommandOutput& out)
{
  const std::string text = tev::cli::render(out);
  if (out.manifest.out.empty())
  {
    std::cout << text;
  }
  else
  {
    std::ofstream f(out.manifest.out, std::ios::binary);
    if (!(f << text))
    {
      throw std::runtime_error("cannot write " + out.manifest.out);
    }
  }
  return out.verdict && !out.verdict->pass ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Interior transmission eigenvalues of the biharmonic plate problem"};
  app.set_config("--config", "", "key = value file; command line flags take precedence");
  app.require_subcommand(1);

  RunManifest m;
  Raw raw;

  auto* sov = app.add_subcommand("disk-sov", "unit disk, Fourier-Bessel determinant roots");
  sov->add_option("--n", m.n_values, "index of refraction")->required()->expected(1);
  window_options(sov, m);
  common_options(sov, m, raw);

  auto* dbeyn = app.add_subcommand("disk-beyn", "unit disk, complex roots of one Bessel order by contour integrals");
  dbeyn->add_option("--n", m.n_values, "index of refraction")->required()->expected(1);
  dbeyn->add_option("--p", m.p, "Bessel order")->check(CLI::Range(0, 16));
  contour_options(dbeyn, m, raw);
  common_options(dbeyn, m, raw);

  auto* bem = app.add_subcommand("bem", "boundary integral system with contour integrals");
  bem->add_option("--geometry", m.geometry, "circle, ellipse or kite")
      ->check(CLI::IsMember({"circle", "ellipse", "kite"}))
      ->required();
  bem->add_option("--r", m.radius, "circle radius");
  bem->add_option("--a", m.a, "ellipse half-axis along x");
  bem->add_option("--b", m.b, "ellipse half-axis along y");
  bem->add_option("--eps", m.eps, "deformation parameter of the kite");
  bem->add_option("--n", m.n_values, "index of refraction")->required()->expected(1);
  bem->add_option("--nodes", m.nodes, "boundary nodes");
  bem->add_option("--modes", m.modes, "Fourier modes kept per density, |m| <= modes");
  bem->add_flag("--keep-complex", raw.keep_complex, "also report non-real eigenvalues");
  bem->add_option("--imag-tol", m.imag_tol, "|Im k| below which an eigenvalue counts as real");
  contour_options(bem, m, raw);
  common_options(bem, m, raw);

  std::string scan_method = "sov";
  auto* scan = app.add_subcommand("scan-n", "first eigenvalue along a ladder of n");
  scan->add_option("--n", m.n_values, "ladder of n values")->required();
  scan->add_option("--method", scan_method, "sov or bem")->check(CLI::IsMember({"sov", "bem"}));
  scan->add_option("--geometry", m.geometry, "geometry for --method bem")
      ->check(CLI::IsMember({"circle", "ellipse", "kite"}));
  scan->add_option("--b", m.b);
  scan->add_option("--eps", m.eps);
  scan->add_option("--nodes", m.nodes);
  scan->add_option("--modes", m.modes);
  window_options(scan, m);
  contour_options(scan, m, raw);
  common_options(scan, m, raw);

  auto* self = app.add_subcommand("selftest", "identity checks and the circle cross-method comparison");
  self->add_option("--threads", m.threads)->check(CLI::NonNegativeNumber);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try
  {
    if (self->parsed())
    {
      return tev::cli::selftest(std::cout, m.threads) ? 0 : 2;
    }
    m.format = raw.format == "json" ? tev::cli::Format::json : tev::cli::Format::csv;
    m.real_only = !raw.keep_complex;
    finish_contours(m, raw);
    if (sov->parsed())
    {
      m.command = "disk-sov";
      m.method = "sov";
      return emit(tev::cli::run_disk_sov(m));
    }
    if (dbeyn->parsed())
    {
      m.command = "disk-beyn";
      m.method = "beyn";
      return emit(tev::cli::run_disk_beyn(m));
    }
    if (bem->parsed())
    {
      m.command = "bem";
      m.method = "bem";
      return emit(tev::cli::run_bem(m));
    }
    m.command = "scan-n";
    m.method = scan_method;
    // first eigenvalues reach k ~ 17 at n = 2
    if (scan->count("--k-max") == 0)
    {
      m.k_max = 25.0;
    }
    if (scan->count("--p-max") == 0)
    {
      m.p_max = 15;
    }
    if (scan_method == "sov")
    {
      m.geometry = "disk";
    }
    else if (m.geometry == "disk")
    {
      throw std::invalid_argument("scan-n --method bem needs --geometry");
    }
    return emit(tev::cli::run_scan_n(m));
  }
  catch (const std::invalid_argument& e)
  {
    std::cerr << "tev: " << e.what() << '\n';
    return 1;
  }
  catch (const std::exception& e)
  {
    std::cerr << "tev: numerical failure: " << e.what() << '\n';
    return 2;
  }
}
