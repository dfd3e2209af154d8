#include "nct/verify.hpp"

#include <chrono>
#include <cmath>

#include "nct/covering.hpp"
#include "nct/element.hpp"
#include "nct/moyal.hpp"
#include "nct/operators.hpp"
#include "nct/oracles.hpp"

namespace nct::verify {

namespace {

class Runner {
 public:
  Runner(std::uint64_t seed, std::optional<double> tol_override)
      : seed_(seed), override_(tol_override) {}

  void check(const std::string& id, const std::string& law, double residual,
             double tol) {
    const double t = override_.value_or(tol);
    cases_.push_back({id, law, residual, t, residual <= t});
  }

  std::uint64_t next_seed() { return seed_ + 0x1000 * ++counter_; }

  std::vector<VerifyCase> take() { return std::move(cases_); }

 private:
  std::uint64_t seed_;
  std::optional<double> override_;
  std::vector<VerifyCase> cases_;
  std::uint64_t counter_ = 0;
};

double residual_or_zero(bool ok) { return ok ? 0.0 : 1.0; }

void torus_suite(Runner& r) {
  double assoc = 0.0, unit = 0.0, invol = 0.0, trace_r = 0.0, leibniz = 0.0,
         parts = 0.0, parseval = 0.0;
  for (int n : {2, 3}) {
    SkewMatrix theta(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        theta.set(i, j, 0.3 + 0.1 * (i + j));
    const TruncationWindow w(n, 3);
    for (int rep = 0; rep < 4; ++rep) {
      const TorusElement a = random_element(theta, w, 2.0, r.next_seed());
      const TorusElement b = random_element(theta, w, 2.0, r.next_seed());
      const TorusElement c = random_element(theta, w, 2.0, r.next_seed());
      assoc = std::fmax(assoc,
                        star_product(star_product(a, b), c)
                            .max_coeff_distance(star_product(a, star_product(b, c))));
      unit = std::fmax(unit, star_product(identity_element(theta), a)
                                 .max_coeff_distance(a));
      invol = std::fmax(invol,
                        involution(star_product(a, b))
                            .max_coeff_distance(
                                star_product(involution(b), involution(a))));
      trace_r = std::fmax(trace_r, std::abs(trace(star_product(a, b)) -
                                            trace(star_product(b, a))));
      for (int mu = 0; mu < n; ++mu) {
        const TorusElement lhs = delta(star_product(a, b), mu);
        const TorusElement rhs_sum = [&] {
          TorusElement s = star_product(delta(a, mu), b);
          const TorusElement other = star_product(a, delta(b, mu));
          for (const auto& [k, v] : other.coeffs()) s.add(k, v);
          return s;
        }();
        leibniz = std::fmax(leibniz, lhs.max_coeff_distance(rhs_sum));
        parts = std::fmax(parts, std::abs(trace(star_product(a, delta(b, mu))) +
                                          trace(star_product(delta(a, mu), b))));
      }
      double sum2 = 0.0;
      for (const auto& [k, v] : a.coeffs()) sum2 += std::norm(v);
      parseval = std::fmax(parseval, std::abs(gns_inner(a, a) - cplx{sum2, 0.0}));
    }
  }
  r.check("torus.associativity", "(a*b)*c = a*(b*c)", assoc, 1e-12);
  r.check("torus.unit", "1*a = a", unit, 0.0);
  r.check("torus.involution", "(a*b)^ = b^*a^", invol, 1e-13);
  r.check("torus.trace", "tau(a*b) = tau(b*a)", trace_r, 1e-13);
  r.check("torus.leibniz", "delta(a*b) = delta(a)*b + a*delta(b)", leibniz, 1e-13);
  r.check("torus.parts", "tau(a*delta(b)) = -tau(delta(a)*b)", parts, 1e-13);
  r.check("torus.parseval", "gns(a,a) = sum |a(p)|^2", parseval, 1e-13);

  // generator commutation across a grid of angles
  double comm = 0.0;
  for (double th : {0.1, 0.25, 0.7}) {
    const SkewMatrix theta = SkewMatrix::two_torus(th);
    const TorusElement u = generator(0, theta);
    const TorusElement v = generator(1, theta);
    const TorusElement lhs = star_product(u, v);
    const TorusElement vu = star_product(v, u);
    TorusElement rhs(theta);
    for (const auto& [k, val] : vu.coeffs())
      rhs.set(k, val * unit_phase(-2.0 * th));
    comm = std::fmax(comm, lhs.max_coeff_distance(rhs));
  }
  r.check("torus.commutation", "u_j u_k = exp(-2 pi i theta_jk) u_k u_j", comm,
          1e-13);
}

void oracle_suite(Runner& r) {
  double star_res = 0.0;
  const SkewMatrix theta = SkewMatrix::two_torus(0.3);
  const TruncationWindow w(2, 3);
  for (int rep = 0; rep < 25; ++rep) {
    const TorusElement a = random_element(theta, w, 2.0, r.next_seed());
    const TorusElement b = random_element(theta, w, 2.0, r.next_seed());
    star_res = std::fmax(star_res, star_product(a, b).max_coeff_distance(
                                       oracle::dense_star_oracle(a, b)));
  }
  r.check("oracle.star", "star = brute-force pair sum", star_res, 1e-13);

  double grid_res = 0.0;
  const SkewMatrix flat = SkewMatrix::zero(2);
  const TruncationWindow w4(2, 4);
  for (int rep = 0; rep < 3; ++rep) {
    const TorusElement a = random_element(flat, w4, 2.0, r.next_seed());
    const TorusElement b = random_element(flat, w4, 2.0, r.next_seed());
    grid_res = std::fmax(grid_res, star_product(a, b).max_coeff_distance(
                                       oracle::sample_and_multiply(a, b, 32)));
  }
  r.check("oracle.grid", "theta=0 star = sampled pointwise product", grid_res,
          1e-10);

  const CoveringSpec spec = make_covering(SkewMatrix::two_torus(0.5), {2, 3});
  double proj_res = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const TorusElement a =
        random_element(spec.cover_theta, TruncationWindow(2, 3), 2.0,
                       r.next_seed());
    proj_res = std::fmax(proj_res,
                         invariant_projection(a, spec).max_coeff_distance(
                             oracle::brute_group_average(a, spec)));
  }
  r.check("oracle.projection", "support filter = literal group average",
          proj_res, 1e-13);
}

void clifford_suite(Runner& r) {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n)
    worst = std::fmax(worst, clifford_residual(gamma_set(n)));
  r.check("clifford.relation", "g^i g^j + g^j g^i = 2 delta^ij I", worst, 1e-14);
}

void dirac_suite(Runner& r) {
  const TruncationWindow w(2, 3);
  const SpectrumReport flat = dirac_spectrum(SkewMatrix::zero(2), w);
  const SpectrumReport twisted = dirac_spectrum(SkewMatrix::two_torus(0.3), w);
  double iso = 0.0;
  for (std::size_t i = 0; i < flat.eigenvalues.size(); ++i)
    iso = std::fmax(iso, std::abs(flat.eigenvalues[i] - twisted.eigenvalues[i]));
  r.check("dirac.isospectral", "spectrum(D) does not depend on theta", iso,
          1e-12);

  const TruncatedOperator d = dirac_matrix(w);
  r.check("dirac.hermitian", "D = D^*", d.mat.max_abs_diff(d.mat.adjoint()), 0.0);

  const SpectrumReport small = dirac_spectrum(SkewMatrix::zero(2),
                                              TruncationWindow(2, 1));
  std::vector<double> expected = {-std::sqrt(2.0), -std::sqrt(2.0),
                                  -std::sqrt(2.0), -std::sqrt(2.0), -1, -1, -1,
                                  -1, 0, 0, 1, 1, 1, 1, std::sqrt(2.0),
                                  std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)};
  double multiset = expected.size() == small.eigenvalues.size() ? 0.0 : 1.0;
  if (multiset == 0.0)
    for (std::size_t i = 0; i < expected.size(); ++i)
      multiset = std::fmax(multiset, std::abs(expected[i] - small.eigenvalues[i]));
  r.check("dirac.multiset", "n=2 R=1 spectrum = {0 x2, +-1 x4, +-sqrt(2) x4}",
          multiset, 1e-12);
}

void commutator_suite(Runner& r) {
  const SkewMatrix theta = SkewMatrix::two_torus(0.3);
  const TruncationWindow w(2, 8);
  const TorusElement a = random_element(theta, TruncationWindow(2, 3), 2.0,
                                        r.next_seed());
  const auto cols = interior_columns_radius(5, w);
  const double res = column_restricted_distance(
      dirac_commutator(a, w), commutator_from_derivations(a, w), cols);
  r.check("commutator.interior",
          "[D,a] = sum_mu pi(delta_mu a) (x) gamma^mu (interior)", res, 1e-12);

  // interior homomorphism of the GNS representation
  const TruncationWindow w6(2, 6);
  const TorusElement b = random_element(theta, TruncationWindow(2, 2), 2.0,
                                        r.next_seed());
  const TorusElement c = random_element(theta, TruncationWindow(2, 2), 2.0,
                                        r.next_seed());
  const TorusElement bc = star_product(b, c);
  std::vector<LatticeIndex> shifts;
  for (const auto& [k, v] : bc.coeffs()) shifts.push_back(k);
  const TruncatedOperator lhs = represent(bc, w6);
  const TruncatedOperator prod{w6, 1,
                               represent(b, w6).mat.mul(represent(c, w6).mat)};
  const double hom =
      column_restricted_distance(lhs, prod, interior_columns(shifts, w6));
  r.check("representation.homomorphism", "pi(a*b) = pi(a) pi(b) (interior)",
          hom, 1e-12);

  // seminorm ladder on a small window
  const TruncationWindow ws(2, 2);
  const TorusElement s_el = random_element(theta, TruncationWindow(2, 1), 2.0,
                                           r.next_seed());
  double mono = 0.0;
  double prev = seminorm_s(s_el, 0, ws);
  for (int s = 1; s <= 3; ++s) {
    const double cur = seminorm_s(s_el, s, ws);
    mono = std::fmax(mono, prev - cur);  // positive = violation
    prev = cur;
  }
  r.check("seminorm.monotone", "|a|_s <= |a|_{s+1}", std::fmax(mono, 0.0), 1e-12);
}

void covering_suite(Runner& r) {
  const CoveringSpec spec = make_covering(SkewMatrix::two_torus(0.5), {2, 3});
  const TruncationWindow base_w(2, 2);

  double embed_hom = 0.0, deck_hom = 0.0, fixed = 0.0, idem = 0.0;
  for (int rep = 0; rep < 4; ++rep) {
    const TorusElement x =
        random_element(spec.base_theta, base_w, 2.0, r.next_seed());
    const TorusElement y =
        random_element(spec.base_theta, base_w, 2.0, r.next_seed());
    embed_hom = std::fmax(
        embed_hom, embed(star_product(x, y), spec)
                       .max_coeff_distance(star_product(embed(x, spec),
                                                        embed(y, spec))));
    const TorusElement lifted = embed(x, spec);
    fixed = std::fmax(fixed, invariant_projection(lifted, spec)
                                 .max_coeff_distance(lifted));
    const TorusElement za = random_element(spec.cover_theta,
                                           TruncationWindow(2, 3), 2.0,
                                           r.next_seed());
    const TorusElement zb = random_element(spec.cover_theta,
                                           TruncationWindow(2, 3), 2.0,
                                           r.next_seed());
    const TorusElement once = invariant_projection(za, spec);
    idem = std::fmax(idem,
                     invariant_projection(once, spec).max_coeff_distance(once));
    for_each_deck(spec, [&](const DeckElement& g) {
      deck_hom = std::fmax(
          deck_hom,
          deck_action(g, star_product(za, zb), spec)
              .max_coeff_distance(star_product(deck_action(g, za, spec),
                                               deck_action(g, zb, spec))));
    });
  }
  r.check("covering.embed_hom", "embed(a*b) = embed(a)*embed(b)", embed_hom,
          1e-13);
  r.check("covering.deck_hom", "g(a*b) = g(a)*g(b)", deck_hom, 1e-13);
  r.check("covering.fixed_points", "P(embed(x)) = embed(x)", fixed, 0.0);
  r.check("covering.projection_idem", "P o P = P", idem, 0.0);

  // module inner product: unit, orthogonality, positivity, invariance
  const TorusElement ul = make_unitary({1, 1}, spec.cover_theta);
  const TorusElement um = make_unitary({1, 2}, spec.cover_theta);
  TorusElement expect_unit(spec.base_theta);
  expect_unit.set({0, 0}, {6.0, 0.0});
  const double unit_res =
      module_inner(ul, ul, spec).max_coeff_distance(expect_unit);
  r.check("covering.module_unit", "<U_l, U_l> = |G| 1", unit_res, 1e-13);
  const double orth_res =
      module_inner(ul, um, spec).max_coeff_distance(TorusElement(spec.base_theta));
  r.check("covering.module_orth", "<U_l, U_m> = 0 off the sublattice", orth_res,
          1e-13);

  double positive = 0.0, invariant = 0.0, linear = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const TorusElement a = random_element(spec.cover_theta,
                                          TruncationWindow(2, 2), 2.0,
                                          r.next_seed());
    const TorusElement b = random_element(spec.cover_theta,
                                          TruncationWindow(2, 2), 2.0,
                                          r.next_seed());
    double sum2 = 0.0;
    for (const auto& [k, v] : a.coeffs()) sum2 += std::norm(v);
    positive = std::fmax(positive, std::abs(trace(module_inner(a, a, spec)) -
                                            cplx{6.0 * sum2, 0.0}));
    const TorusElement inner = module_inner(a, b, spec);
    for_each_deck(spec, [&](const DeckElement& g) {
      invariant = std::fmax(
          invariant, module_inner(deck_action(g, a, spec),
                                  deck_action(g, b, spec), spec)
                         .max_coeff_distance(inner));
    });
    const TorusElement x =
        random_element(spec.base_theta, TruncationWindow(2, 1), 2.0,
                       r.next_seed());
    linear = std::fmax(
        linear, module_inner(a, star_product(b, embed(x, spec)), spec)
                    .max_coeff_distance(star_product(inner, x)));
  }
  r.check("covering.inner_positive", "tr<a,a> = |G| sum|a(l)|^2", positive,
          1e-12);
  r.check("covering.inner_invariant", "<ga, gb> = <a,b>", invariant, 1e-13);
  r.check("covering.inner_linear", "<a, b*embed(x)> = <a,b>*x", linear, 1e-13);

  // connection: equivariance, averaging fixed point, operator Leibniz
  double equiv = 0.0, avg = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const TorusElement a = random_element(spec.cover_theta,
                                          TruncationWindow(2, 3), 2.0,
                                          r.next_seed());
    equiv = std::fmax(equiv, equivariance_check(a, spec));
    avg = std::fmax(avg, connection_average_residual(a, spec));
  }
  r.check("covering.equivariance", "nabla(g a) = g nabla(a)", equiv, 1e-13);
  r.check("covering.average_fixed", "group-averaged nabla = nabla", avg, 1e-13);

  {
    const TruncationWindow cover_w(2, 8);
    const TorusElement at = random_element(spec.cover_theta,
                                           TruncationWindow(2, 2), 2.0,
                                           r.next_seed());
    const TorusElement x =
        random_element(spec.base_theta, TruncationWindow(2, 1), 2.0,
                       r.next_seed());
    const TorusElement ex = embed(x, spec);
    const TorusElement at_ex = star_product(at, ex);
    const TruncatedOperator lhs =
        materialize_connection(connection_apply(at_ex, spec), cover_w);
    ConnectionValue nabla_a = connection_apply(at, spec);
    for (auto& comp : nabla_a.comps) comp = star_product(comp, ex);
    const TruncatedOperator term1 = materialize_connection(nabla_a, cover_w);
    const TruncatedOperator term2 =
        commutator(lifted_dirac_matrix(spec, cover_w),
                   represent_spinor(ex, cover_w));
    const TruncatedOperator pia = represent_spinor(at, cover_w);
    const TruncatedOperator rhs{cover_w, term1.spinor_dim,
                                term1.mat + pia.mat.mul(term2.mat)};
    std::vector<LatticeIndex> shifts;
    for (const auto& [k, v] : at_ex.coeffs()) shifts.push_back(k);
    const double leib = column_restricted_distance(
        lhs, rhs, interior_columns(shifts, cover_w));
    r.check("covering.connection_leibniz",
            "nabla(xi a) = nabla(xi) a + xi [D,a]", leib, 1e-12);
  }

  {
    const TruncationWindow cover_w(2, 6);
    const TruncatedOperator lifted = lifted_dirac_matrix(spec, cover_w);
    const TruncatedOperator base_d = dirac_matrix(base_w);
    double lift_res = 0.0;
    const std::size_t m = lifted.spinor_dim;
    base_w.for_each([&](const LatticeIndex& p) {
      LatticeIndex lp(p.size());
      for (std::size_t j = 0; j < p.size(); ++j)
        lp[j] = spec.k[j] * p[j];
      if (!cover_w.contains(lp)) return;
      const std::size_t src = base_w.flat_index(p) * m;
      const std::size_t dst = cover_w.flat_index(lp) * m;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          lift_res = std::fmax(lift_res,
                               std::abs(lifted.mat.at(dst + i, dst + j) -
                                        base_d.mat.at(src + i, src + j)));
    });
    r.check("covering.lift_restrict",
            "lifted D on embedded modes = base D blocks", lift_res, 0.0);
  }
}

void tower_suite(Runner& r) {
  const std::vector<int> primes{2, 3, 5};
  const SkewMatrix base = SkewMatrix::two_torus(0.7);
  const std::vector<CoveringSpec> tower = tower_build(base, primes);

  bool orders_ok = true;
  const int n = 2;
  for (int k = 0; k <= 3; ++k)
    for (int l = k; l <= 3; ++l)
      for (int m = l; m <= 3; ++m)
        orders_ok &= tower_group_order(primes, n, k, m) ==
                     tower_group_order(primes, n, l, m) *
                         tower_group_order(primes, n, k, l);
  r.check("tower.exactness", "|G(m|k)| = |G(m|l)| |G(l|k)|",
          residual_or_zero(orders_ok), 0.0);

  double theta_ok = 0.0;
  double m_acc = 1.0;
  for (std::size_t j = 0; j < tower.size(); ++j) {
    m_acc *= primes[j];
    theta_ok = std::fmax(theta_ok, std::abs(tower[j].cover_theta(0, 1) -
                                            0.7 / (m_acc * m_acc)));
  }
  r.check("tower.theta", "level j deformation = theta / m_j^2", theta_ok, 1e-15);

  const TorusElement a =
      random_element(base, TruncationWindow(2, 2), 2.0, r.next_seed());
  TorusElement walked = a;
  for (const CoveringSpec& s : tower) walked = embed(walked, s);
  int m_total = 1;
  for (int p : primes) m_total *= p;
  const CoveringSpec oneshot = make_covering(base, {m_total, m_total});
  TorusElement direct = embed(a, oneshot);
  // the walked element lives on theta/m^2 with the same coefficients
  double compose = direct.support_size() == walked.support_size() ? 0.0 : 1.0;
  for (const auto& [k, v] : direct.coeffs())
    compose = std::fmax(compose, std::abs(v - walked.at(k)));
  r.check("tower.compose", "embedding the tower = one-shot embedding", compose,
          0.0);
}

void moyal_suite(Runner& r) {
  const int M = 32;
  const double theta = 2.0;

  double table = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const MoyalMatrix prod = moyal_product(moyal_unit(theta, M, m, n),
                                                 moyal_unit(theta, M, k, l));
          CMatrix expect(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
          if (n == k)
            expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(l),
                       {1.0, 0.0});
          table = std::fmax(table, prod.factors[0].max_abs_diff(expect));
        }
  r.check("moyal.units", "E_mn E_kl = delta_nk E_ml", table, 0.0);

  const LadderSet ls = ladder_set(M);
  double ladder = 0.0;
  for (int m = 0; m < M - 1; ++m)
    for (int n = 0; n < M - 1; ++n) {
      const CMatrix e = moyal_unit(theta, M, m, n).factors[0];
      CMatrix lhs = ls.a.mul(e);
      CMatrix expect(e.rows(), e.cols());
      if (m > 0)
        expect.set(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n),
                   {std::sqrt(2.0 * m), 0.0});
      ladder = std::fmax(ladder, lhs.max_abs_diff(expect));

      lhs = ls.abar.mul(e);
      expect = CMatrix(e.rows(), e.cols());
      expect.set(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n),
                 {std::sqrt(2.0 * m + 2.0), 0.0});
      ladder = std::fmax(ladder, lhs.max_abs_diff(expect));

      lhs = e.mul(ls.a);
      expect = CMatrix(e.rows(), e.cols());
      expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(n + 1),
                 {std::sqrt(2.0 * n + 2.0), 0.0});
      ladder = std::fmax(ladder, lhs.max_abs_diff(expect));

      lhs = e.mul(ls.abar);
      expect = CMatrix(e.rows(), e.cols());
      if (n > 0)
        expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(n - 1),
                   {std::sqrt(2.0 * n), 0.0});
      ladder = std::fmax(ladder, lhs.max_abs_diff(expect));
    }
  r.check("moyal.ladder", "ladder actions on E_mn (interior)", ladder, 0.0);

  const CMatrix ccr = ls.a.mul(ls.abar) - ls.abar.mul(ls.a);
  double ccr_res = 0.0;
  for (int i = 0; i < M - 1; ++i)
    for (int j = 0; j < M - 1; ++j) {
      const cplx expect = i == j ? cplx{2.0, 0.0} : cplx{0.0, 0.0};
      ccr_res = std::fmax(ccr_res, std::abs(ccr.at(static_cast<std::size_t>(i),
                                                   static_cast<std::size_t>(j)) -
                                            expect));
    }
  r.check("moyal.ccr", "a abar - abar a = 2 (interior)", ccr_res, 1e-13);

  double leibniz = 0.0, trace_res = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    std::uint64_t sx = r.next_seed();
    auto random_moyal = [&](std::uint64_t seed) {
      CMatrix c(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
      std::uint64_t st = seed;
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
          auto unit = [&st] {
            st += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = st;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            z ^= z >> 31;
            return static_cast<double>(z >> 11) * 0x1.0p-53;
          };
          const double decay =
              1.0 / ((1.0 + static_cast<double>(i)) * (1.0 + static_cast<double>(j)));
          c.set(i, j, {(2.0 * unit() - 1.0) * decay, (2.0 * unit() - 1.0) * decay});
        }
      return moyal_wrap(theta, c);
    };
    const MoyalMatrix x = random_moyal(sx);
    const MoyalMatrix y = random_moyal(r.next_seed());
    for (MoyalAxis ax : {MoyalAxis::P, MoyalAxis::Q}) {
      const MoyalMatrix lhs = moyal_partial(moyal_product(x, y), ax);
      MoyalMatrix rhs = moyal_product(moyal_partial(x, ax), y);
      const MoyalMatrix rhs2 = moyal_product(x, moyal_partial(y, ax));
      rhs.factors[0] = rhs.factors[0] + rhs2.factors[0];
      rhs.margin = std::max(rhs.margin, rhs2.margin);
      leibniz = std::fmax(leibniz, interior_distance(lhs, rhs));
    }
    trace_res =
        std::fmax(trace_res, std::abs(moyal_trace(moyal_product(x, y)) -
                                      moyal_trace(moyal_product(y, x))));
  }
  r.check("moyal.leibniz", "d_j(x y) = d_j(x) y + x d_j(y) (interior)", leibniz,
          1e-13);
  r.check("moyal.trace", "tr(x y) = tr(y x)", trace_res, 1e-13);

  const MoyalMatrix e00 = moyal_unit(theta, M, 0, 0);
  const double sem0 = std::abs(seminorm_rk(e00, 0) - 1.0);
  const double sem1 = std::abs(seminorm_rk(e00, 1) - 1.0);
  r.check("moyal.seminorm", "r_0(E_00) = 1 and r_1(E_00)|theta=2 = 1",
          std::fmax(sem0, sem1), 1e-14);
}

void bigraded_suite(Runner& r) {
  const double th = 0.3;
  const cplx lambda = unit_phase(2.0 * th);
  const SkewMatrix flat = SkewMatrix::zero(2);
  const TruncationWindow w(2, 3);

  double assoc = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const TorusElement x = random_element(flat, w, 2.0, r.next_seed());
    const TorusElement y = random_element(flat, w, 2.0, r.next_seed());
    const TorusElement z = random_element(flat, w, 2.0, r.next_seed());
    assoc = std::fmax(assoc,
                      bigraded_star(bigraded_star(x, y, lambda), z, lambda)
                          .max_coeff_distance(
                              bigraded_star(x, bigraded_star(y, z, lambda),
                                            lambda)));
  }
  r.check("bigraded.associativity", "(x # y) # z = x # (y # z)", assoc, 1e-13);

  // gauge equivalence against the twisted product at Theta = theta J,
  // checked pairwise over all modes |k|, |p| <= 3
  const SkewMatrix tw = SkewMatrix::two_torus(th);
  double gauge = 0.0;
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -3; k2 <= 3; ++k2)
      for (int p1 = -3; p1 <= 3; ++p1)
        for (int p2 = -3; p2 <= 3; ++p2) {
          const TorusElement uk = make_unitary({k1, k2}, tw);
          const TorusElement up = make_unitary({p1, p2}, tw);
          TorusElement twisted = star_product(uk, up);
          TorusElement lhs(flat);
          for (const auto& [idx, v] : twisted.coeffs())
            lhs.set(idx, v * unit_phase(th * idx[0] * idx[1]));
          const TorusElement rhs = bigraded_star(
              cocycle_gauge(make_unitary({k1, k2}, flat), th),
              cocycle_gauge(make_unitary({p1, p2}, flat), th), lambda);
          gauge = std::fmax(gauge, lhs.max_coeff_distance(rhs));
        }
  r.check("bigraded.gauge", "gauge(a * b) = gauge(a) # gauge(b)", gauge, 1e-13);
}

}  // namespace

VerificationReport run_all(std::uint64_t seed,
                           std::optional<double> tol_override) {
  const auto t0 = std::chrono::steady_clock::now();
  Runner r(seed, tol_override);
  torus_suite(r);
  oracle_suite(r);
  clifford_suite(r);
  dirac_suite(r);
  commutator_suite(r);
  covering_suite(r);
  tower_suite(r);
  moyal_suite(r);
  bigraded_suite(r);
  VerificationReport rep{"all", r.take(), 0.0};
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json cases = nlohmann::json::array();
  for (const VerifyCase& c : rep.cases)
    cases.push_back({{"id", c.id},
                     {"law", c.law},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
  return {{"suite", rep.suite},
          {"cases", std::move(cases)},
          {"wall_seconds", rep.wall_seconds}};
}

}  // namespace nct::verify
