// Batch CLI over the deformed-torus library: element products, Dirac
// spectra, covering verification and the full identity suite.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 invalid parameters, 4 size cap exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nct/covering.hpp"
#include "nct/element.hpp"
#include "nct/io.hpp"
#include "nct/kernels.hpp"
#include "nct/operators.hpp"
#include "nct/oracles.hpp"
#include "nct/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitParams = 3;
constexpr int kExitSizeCap = 4;

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_star(const std::string& in_a, const std::string& in_b,
             const std::string& out, bool with_oracle, double prune,
             double tol) {
  const nct::TorusElement a = nct::io::element_from_json(nct::io::load_file(in_a));
  const nct::TorusElement b = nct::io::element_from_json(nct::io::load_file(in_b));
  const nct::TorusElement prod = nct::star_product(a, b, prune);
  nct::io::save_file(out, nct::io::element_to_json(prod));
  if (with_oracle) {
    const double res =
        prod.max_coeff_distance(nct::oracle::dense_star_oracle(a, b));
    std::cout << "oracle residual " << res << " (tolerance " << tol << ")\n";
    if (res > tol) return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_spectrum(const std::string& theta_file, int radius,
                 const std::string& out, const std::string& format) {
  const nct::SkewMatrix theta =
      nct::io::theta_from_json(nct::io::load_file(theta_file));
  const nct::TruncationWindow window(theta.dim(), radius);
  const std::size_t spinor = nct::gamma_set(theta.dim()).spinor_dim;
  if (window.size() * spinor > 20000)
    throw SizeCapError("spectrum: operator dimension exceeds 20000");
  const nct::SpectrumReport rep = nct::dirac_spectrum(theta, window);
  if (format == "csv") {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    for (double ev : rep.eigenvalues) os << ev << "\n";
  } else {
    nct::io::save_file(out, nct::io::spectrum_to_json(rep));
  }
  return kExitOk;
}

nct::CoveringSpec spec_from_cli(const std::string& spec_file,
                                const std::vector<int>& k, double theta12) {
  if (!spec_file.empty())
    return nct::io::covering_from_json(nct::io::load_file(spec_file));
  if (k.empty())
    throw std::invalid_argument("cover: provide --spec or --k");
  if (k.size() != 2)
    throw std::invalid_argument("cover: --k/--theta12 shorthand is 2-d only");
  return nct::make_covering(nct::SkewMatrix::two_torus(theta12), k);
}

int cmd_cover_verify(const nct::CoveringSpec& spec, const std::string& out,
                     double tol, std::uint64_t seed) {
  nct::validate_covering(spec);
  nct::verify::VerificationReport rep{"cover", {}, 0.0};
  auto add = [&rep, tol](const std::string& id, const std::string& law,
                         double res) {
    rep.cases.push_back({id, law, res, tol, res <= tol});
  };

  double compat = 0.0;
  for (int r = 0; r < spec.dim(); ++r)
    for (int s = 0; s < spec.dim(); ++s) {
      const double kk = static_cast<double>(spec.k[static_cast<std::size_t>(r)]) *
                        static_cast<double>(spec.k[static_cast<std::size_t>(s)]);
      compat = std::max(
          compat, std::abs(nct::unit_phase(-2.0 * spec.base_theta(r, s)) -
                           nct::unit_phase(-2.0 * spec.cover_theta(r, s) * kk)));
    }
  add("cover.compatibility",
      "exp(-2 pi i theta_rs) = exp(-2 pi i cover_theta_rs k_r k_s)", compat);

  const nct::TruncationWindow base_w(spec.dim(), 2);
  const nct::TruncationWindow cover_w(spec.dim(), 3);
  double embed_hom = 0.0, equiv = 0.0, inner_unit = 0.0;
  for (int rep_i = 0; rep_i < 5; ++rep_i) {
    const nct::TorusElement x =
        nct::random_element(spec.base_theta, base_w, 2.0, seed + 2 * rep_i);
    const nct::TorusElement y =
        nct::random_element(spec.base_theta, base_w, 2.0, seed + 2 * rep_i + 1);
    embed_hom = std::max(
        embed_hom,
        nct::embed(nct::star_product(x, y), spec)
            .max_coeff_distance(nct::star_product(nct::embed(x, spec),
                                                  nct::embed(y, spec))));
    const nct::TorusElement a =
        nct::random_element(spec.cover_theta, cover_w, 2.0, seed + 100 + rep_i);
    equiv = std::max(equiv, nct::equivariance_check(a, spec));
  }
  add("cover.embed_hom", "embed(a*b) = embed(a)*embed(b)", embed_hom);
  add("cover.equivariance", "nabla(g a) = g nabla(a)", equiv);

  nct::TorusElement unit_expect(spec.base_theta);
  unit_expect.set(nct::LatticeIndex(static_cast<std::size_t>(spec.dim()), 0),
                  {static_cast<double>(spec.deck_order()), 0.0});
  const nct::TorusElement ul =
      nct::make_unitary(nct::LatticeIndex(static_cast<std::size_t>(spec.dim()), 1),
                        spec.cover_theta);
  inner_unit =
      nct::module_inner(ul, ul, spec).max_coeff_distance(unit_expect);
  add("cover.module_unit", "<U_l, U_l> = |G| 1", inner_unit);

  rep.wall_seconds = 0.0;
  nct::io::save_file(out, nct::verify::report_to_json(rep));
  return rep.passed() ? kExitOk : kExitVerifyFail;
}

int cmd_cover_lift(const nct::CoveringSpec& spec, int radius,
                   const std::string& out, double tol) {
  nct::validate_covering(spec);
  const nct::TruncationWindow cover_w(spec.dim(), radius);
  const nct::TruncatedOperator lifted = nct::lifted_dirac_matrix(spec, cover_w);
  if (lifted.dim() > 20000)
    throw SizeCapError("cover lift: operator dimension exceeds 20000");

  // restriction of the lifted operator to embedded modes vs base blocks
  const nct::TruncationWindow base_w(spec.dim(), radius);
  const nct::TruncatedOperator base_d = nct::dirac_matrix(base_w);
  const std::size_t m = lifted.spinor_dim;
  double restrict_res = 0.0;
  base_w.for_each([&](const nct::LatticeIndex& p) {
    nct::LatticeIndex lp(p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
      lp[j] = spec.k[j] * p[j];
    if (!cover_w.contains(lp)) return;
    const std::size_t src = base_w.flat_index(p) * m;
    const std::size_t dst = cover_w.flat_index(lp) * m;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        restrict_res = std::max(restrict_res,
                                std::abs(lifted.mat.at(dst + i, dst + j) -
                                         base_d.mat.at(src + i, src + j)));
  });

  nct::verify::VerificationReport rep{"cover-lift", {}, 0.0};
  rep.cases.push_back({"lift.restrict", "lifted D on embedded modes = base D",
                       restrict_res, tol, restrict_res <= tol});
  nct::io::save_file(out, nct::verify::report_to_json(rep));
  return rep.passed() ? kExitOk : kExitVerifyFail;
}

int cmd_cover_tower(const std::vector<int>& primes, double theta12,
                    const std::string& out) {
  const nct::SkewMatrix base = nct::SkewMatrix::two_torus(theta12);
  const std::vector<nct::CoveringSpec> tower = nct::tower_build(base, primes);
  nct::io::json specs = nct::io::json::array();
  for (const nct::CoveringSpec& s : tower)
    specs.push_back(nct::io::covering_to_json(s));

  nct::io::json exactness = nct::io::json::array();
  bool all_ok = true;
  const int levels = static_cast<int>(primes.size());
  for (int k = 0; k <= levels; ++k)
    for (int l = k; l <= levels; ++l)
      for (int m = l; m <= levels; ++m) {
        const auto g_mk = nct::tower_group_order(primes, 2, k, m);
        const auto g_ml = nct::tower_group_order(primes, 2, l, m);
        const auto g_lk = nct::tower_group_order(primes, 2, k, l);
        const bool ok = g_mk == g_ml * g_lk;
        all_ok &= ok;
        exactness.push_back({{"from", k},
                             {"mid", l},
                             {"to", m},
                             {"order", g_mk},
                             {"exact", ok}});
      }
  nct::io::save_file(out, nct::io::json{{"specs", std::move(specs)},
                                        {"exactness", std::move(exactness)}});
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_verify_all(std::uint64_t seed, const std::string& out, bool has_tol,
                   double tol) {
  const nct::verify::VerificationReport rep = nct::verify::run_all(
      seed, has_tol ? std::optional<double>(tol) : std::nullopt);
  for (const nct::verify::VerifyCase& c : rep.cases)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  residual "
              << c.residual << "  tol " << c.tolerance << "  (" << c.law
              << ")\n";
  std::cout << (rep.passed() ? "all cases passed" : "FAILURES present")
            << " in " << rep.wall_seconds << " s  [kernels: "
            << nct::kern::active().name << "]\n";
  if (!out.empty())
    nct::io::save_file(out, nct::verify::report_to_json(rep));
  return rep.passed() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed torus / plane calculus toolbox"};
  app.require_subcommand(1);

  // star
  std::string star_a, star_b, star_out;
  bool star_oracle = false;
  double star_prune = nct::kDefaultPrune;
  double star_tol = 1e-13;
  CLI::App* star = app.add_subcommand("star", "twisted product of two elements");
  star->add_option("a", star_a, "first element JSON")->required();
  star->add_option("b", star_b, "second element JSON")->required();
  star->add_option("--out", star_out, "output element JSON")->required();
  star->add_flag("--oracle", star_oracle, "also run the brute-force oracle");
  star->add_option("--prune", star_prune, "coefficient prune threshold");
  star->add_option("--tol", star_tol, "oracle residual tolerance");

  // spectrum
  std::string spec_theta, spec_out;
  std::string spec_format = "json";
  int spec_radius = 1;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Dirac spectrum on a truncation window");
  spectrum->add_option("--theta", spec_theta, "deformation JSON")->required();
  spectrum->add_option("--window", spec_radius, "window radius")
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--out", spec_out, "output file")->required();
  spectrum->add_option("--format", spec_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // cover verify|lift|tower
  CLI::App* cover = app.add_subcommand("cover", "finite covering checks");
  cover->require_subcommand(1);
  std::string cover_spec_file, cover_out;
  std::vector<int> cover_k;
  std::vector<int> cover_primes;
  double cover_theta12 = 0.5;
  double cover_tol = 1e-12;
  int cover_window = 6;
  std::uint64_t cover_seed = 1;
  CLI::App* cver = cover->add_subcommand("verify", "covering identity residuals");
  cver->add_option("--spec", cover_spec_file, "covering spec JSON");
  cver->add_option("--k", cover_k, "multiplicities")->delimiter(',');
  cver->add_option("--theta12", cover_theta12, "base deformation angle (n=2)");
  cver->add_option("--out", cover_out, "report file")->required();
  cver->add_option("--tol", cover_tol, "residual tolerance");
  cver->add_option("--seed", cover_seed, "random seed");
  CLI::App* clift = cover->add_subcommand("lift", "lifted Dirac compatibility");
  clift->add_option("--spec", cover_spec_file, "covering spec JSON");
  clift->add_option("--k", cover_k, "multiplicities")->delimiter(',');
  clift->add_option("--theta12", cover_theta12, "base deformation angle (n=2)");
  clift->add_option("--window", cover_window, "cover window radius")
      ->check(CLI::PositiveNumber);
  clift->add_option("--out", cover_out, "report file")->required();
  clift->add_option("--tol", cover_tol, "residual tolerance");
  CLI::App* ctower = cover->add_subcommand("tower", "covering tower report");
  ctower->add_option("--primes", cover_primes, "tower steps")
      ->delimiter(',')
      ->required();
  ctower->add_option("--theta12", cover_theta12, "base deformation angle (n=2)");
  ctower->add_option("--out", cover_out, "report file")->required();

  // verify-all
  std::uint64_t va_seed = 1;
  std::string va_out;
  double va_tol = 0.0;
  CLI::App* vall = app.add_subcommand("verify-all", "run every identity suite");
  vall->add_option("--seed", va_seed, "random seed");
  vall->add_option("--out", va_out, "report file");
  CLI::Option* va_tol_opt =
      vall->add_option("--tol", va_tol, "override every case tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParams;
  }

  try {
    if (star->parsed())
      return cmd_star(star_a, star_b, star_out, star_oracle, star_prune,
                      star_tol);
    if (spectrum->parsed())
      return cmd_spectrum(spec_theta, spec_radius, spec_out, spec_format);
    if (cover->parsed()) {
      if (ctower->parsed())
        return cmd_cover_tower(cover_primes, cover_theta12, cover_out);
      const nct::CoveringSpec spec =
          spec_from_cli(cover_spec_file, cover_k, cover_theta12);
      if (cver->parsed())
        return cmd_cover_verify(spec, cover_out, cover_tol, cover_seed);
      return cmd_cover_lift(spec, cover_window, cover_out, cover_tol);
    }
    if (vall->parsed())
      return cmd_verify_all(va_seed, va_out, va_tol_opt->count() > 0, va_tol);
  } catch (const nct::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  }
  return kExitOk;
}
