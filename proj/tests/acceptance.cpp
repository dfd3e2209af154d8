// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit when anything fails. Tolerances are fixed here and nowhere
// else.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nct/covering.hpp"
#include "nct/element.hpp"
#include "nct/kernels.hpp"
#include "nct/moyal.hpp"
#include "nct/operators.hpp"
#include "nct/oracles.hpp"
#include "nct/verify.hpp"

using namespace nct;

namespace {

int g_failed = 0;

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

void report(int idx, const std::string& name, bool pass, double residual,
            double tol, double secs) {
  std::printf("[%s] criterion %2d %-34s residual %.3e  tol %.1e  %6.2f s\n",
              pass ? "PASS" : "FAIL", idx, name.c_str(), residual, tol, secs);
  if (!pass) ++g_failed;
}

TorusElement plus(const TorusElement& a, const TorusElement& b) {
  TorusElement s = a;
  for (const auto& [k, v] : b.coeffs()) s.add(k, v);
  return s;
}

SkewMatrix generic_theta(int n) {
  SkewMatrix theta(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) theta.set(i, j, 0.29 + 0.07 * (i + 2 * j));
  return theta;
}

// 1. torus algebra identities over >= 100 random elements, n in {2,3,4}
void criterion_1() {
  Timer t;
  const double tol = 1e-12;
  double worst = 0.0;
  int elements = 0;
  std::uint64_t seed = 10000;

  struct Plan {
    int n;
    int triples;
    int pairs;
  };
  for (const Plan plan : {Plan{2, 12, 12}, Plan{3, 8, 6}, Plan{4, 2, 2}}) {
    const SkewMatrix theta = generic_theta(plan.n);
    const TruncationWindow w(plan.n, 3);
    const TorusElement id = identity_element(theta);

    for (int rep = 0; rep < plan.triples; ++rep) {
      const TorusElement a = random_element(theta, w, 2.0, ++seed);
      const TorusElement b = random_element(theta, w, 2.0, ++seed);
      const TorusElement c = random_element(theta, w, 2.0, ++seed);
      elements += 3;
      worst = std::fmax(worst,
                        star_product(star_product(a, b), c)
                            .max_coeff_distance(star_product(a, star_product(b, c))));
      worst = std::fmax(worst, star_product(id, a).max_coeff_distance(a));
    }

    const std::vector<int> axes =
        plan.n == 4 ? std::vector<int>{0, 3}
                    : [&] {
                        std::vector<int> all;
                        for (int mu = 0; mu < plan.n; ++mu) all.push_back(mu);
                        return all;
                      }();
    for (int rep = 0; rep < plan.pairs; ++rep) {
      const TorusElement a = random_element(theta, w, 2.0, ++seed);
      const TorusElement b = random_element(theta, w, 2.0, ++seed);
      elements += 2;
      worst = std::fmax(worst,
                        involution(star_product(a, b))
                            .max_coeff_distance(star_product(involution(b),
                                                             involution(a))));
      worst = std::fmax(worst, std::abs(trace(star_product(a, b)) -
                                        trace(star_product(b, a))));
      for (int mu : axes) {
        worst = std::fmax(
            worst, delta(star_product(a, b), mu)
                       .max_coeff_distance(plus(star_product(delta(a, mu), b),
                                                star_product(a, delta(b, mu)))));
        worst = std::fmax(worst, std::abs(trace(star_product(a, delta(b, mu))) +
                                          trace(star_product(delta(a, mu), b))));
      }
    }

    // generator commutation on every axis pair
    for (int i = 0; i < plan.n; ++i)
      for (int j = 0; j < plan.n; ++j) {
        if (i == j) continue;
        const TorusElement uv =
            star_product(generator(i, theta), generator(j, theta));
        TorusElement rhs(theta);
        const TorusElement vu =
            star_product(generator(j, theta), generator(i, theta));
        for (const auto& [k, v] : vu.coeffs())
          rhs.set(k, v * unit_phase(-2.0 * theta(i, j)));
        worst = std::fmax(worst, uv.max_coeff_distance(rhs));
      }
  }

  const double secs = t.seconds();
  const bool pass = worst <= tol && secs < 10.0 && elements >= 100;
  std::printf("       (torus suite: %d random elements)\n", elements);
  report(1, "torus algebra suite", pass, worst, tol, secs);
}

// 2. oracle equivalence
void criterion_2() {
  Timer t;
  const SkewMatrix theta = generic_theta(2);
  const TruncationWindow w(2, 3);
  double worst_star = 0.0;
  std::uint64_t seed = 20000;
  for (int rep = 0; rep < 100; ++rep) {
    const TorusElement a = random_element(theta, w, 2.0, ++seed);
    const TorusElement b = random_element(theta, w, 2.0, ++seed);
    worst_star = std::fmax(worst_star, star_product(a, b).max_coeff_distance(
                                           oracle::dense_star_oracle(a, b)));
  }
  const bool star_ok = worst_star <= 1e-13;

  const SkewMatrix flat = SkewMatrix::zero(2);
  double worst_grid = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const TorusElement a =
        random_element(flat, TruncationWindow(2, 4), 2.0, ++seed);
    const TorusElement b =
        random_element(flat, TruncationWindow(2, 4), 2.0, ++seed);
    worst_grid = std::fmax(worst_grid, star_product(a, b).max_coeff_distance(
                                           oracle::sample_and_multiply(a, b, 32)));
  }
  const bool grid_ok = worst_grid <= 1e-10;
  report(2, "oracle equivalence (pairs)", star_ok, worst_star, 1e-13,
         t.seconds());
  report(2, "oracle equivalence (grid)", grid_ok, worst_grid, 1e-10,
         t.seconds());
}

// 3. Clifford relations up to n = 6
void criterion_3() {
  Timer t;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n)
    worst = std::fmax(worst, clifford_residual(gamma_set(n)));
  report(3, "Clifford suite n <= 6", worst <= 1e-14, worst, 1e-14, t.seconds());
}

// 4. Dirac isospectrality and the R = 1 multiset
void criterion_4() {
  Timer t;
  double worst = 0.0;
  for (int radius = 1; radius <= 4; ++radius) {
    const TruncationWindow w(2, radius);
    const SpectrumReport flat = dirac_spectrum(SkewMatrix::zero(2), w);
    const SpectrumReport tw = dirac_spectrum(SkewMatrix::two_torus(0.37), w);
    for (std::size_t i = 0; i < flat.eigenvalues.size(); ++i)
      worst = std::fmax(worst,
                        std::abs(flat.eigenvalues[i] - tw.eigenvalues[i]));
  }

  const SpectrumReport small =
      dirac_spectrum(SkewMatrix::zero(2), TruncationWindow(2, 1));
  const double s2 = std::sqrt(2.0);
  const std::vector<double> expect{-s2, -s2, -s2, -s2, -1, -1, -1, -1, 0, 0,
                                   1,  1,  1,  1,  s2, s2, s2, s2};
  if (small.eigenvalues.size() != expect.size()) {
    worst = 1.0;
  } else {
    for (std::size_t i = 0; i < expect.size(); ++i)
      worst = std::fmax(worst, std::abs(expect[i] - small.eigenvalues[i]));
  }
  report(4, "Dirac isospectrality", worst <= 1e-12, worst, 1e-12, t.seconds());
}

// 5. interior commutator identity at R = 8
void criterion_5() {
  Timer t;
  const SkewMatrix theta = SkewMatrix::two_torus(0.3);
  const TruncationWindow w(2, 8);
  double worst = 0.0;
  for (std::uint64_t seed : {50001, 50002}) {
    const TorusElement a =
        random_element(theta, TruncationWindow(2, 3), 2.0, seed);
    worst = std::fmax(worst, column_restricted_distance(
                                 dirac_commutator(a, w),
                                 commutator_from_derivations(a, w),
                                 interior_columns_radius(5, w)));
  }
  report(5, "interior commutator (R=8)", worst <= 1e-12, worst, 1e-12,
         t.seconds());
}

// 6. covering suite at k = (2,3), theta12 = 1/2
void criterion_6() {
  Timer t;
  const CoveringSpec spec = make_covering(SkewMatrix::two_torus(0.5), {2, 3});
  std::uint64_t seed = 60000;
  bool pass = true;
  double printed_worst = 0.0;

  double embed_hom = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const TorusElement x = random_element(spec.base_theta,
                                          TruncationWindow(2, 2), 2.0, ++seed);
    const TorusElement y = random_element(spec.base_theta,
                                          TruncationWindow(2, 2), 2.0, ++seed);
    embed_hom = std::fmax(
        embed_hom, embed(star_product(x, y), spec)
                       .max_coeff_distance(star_product(embed(x, spec),
                                                        embed(y, spec))));
  }
  pass &= embed_hom <= 1e-13;
  printed_worst = std::fmax(printed_worst, embed_hom);

  TorusElement unit_expect(spec.base_theta);
  unit_expect.set({0, 0}, {6.0, 0.0});
  const TorusElement ul = make_unitary({1, 1}, spec.cover_theta);
  const double unit_res =
      module_inner(ul, ul, spec).max_coeff_distance(unit_expect);
  pass &= unit_res <= 1e-13;
  printed_worst = std::fmax(printed_worst, unit_res);

  // projection image = embedded algebra, exactly
  double proj = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const TorusElement x = random_element(spec.base_theta,
                                          TruncationWindow(2, 2), 2.0, ++seed);
    proj = std::fmax(proj, invariant_projection(embed(x, spec), spec)
                               .max_coeff_distance(embed(x, spec)));
    const TorusElement a = random_element(spec.cover_theta,
                                          TruncationWindow(2, 3), 2.0, ++seed);
    const TorusElement pa = invariant_projection(a, spec);
    TorusElement base(spec.base_theta);
    for (const auto& [l, v] : pa.coeffs())
      base.set({l[0] / 2, l[1] / 3}, v);
    proj = std::fmax(proj, embed(base, spec).max_coeff_distance(pa));
  }
  pass &= proj == 0.0;
  printed_worst = std::fmax(printed_worst, proj);

  // connection Leibniz as operators, and equivariance
  {
    const TruncationWindow cover_w(2, 8);
    const TorusElement xi = random_element(spec.cover_theta,
                                           TruncationWindow(2, 2), 2.0, ++seed);
    const TorusElement x = random_element(spec.base_theta,
                                          TruncationWindow(2, 1), 2.0, ++seed);
    const TorusElement ex = embed(x, spec);
    const TorusElement xi_ex = star_product(xi, ex);
    const TruncatedOperator lhs =
        materialize_connection(connection_apply(xi_ex, spec), cover_w);
    ConnectionValue nabla_xi = connection_apply(xi, spec);
    for (auto& comp : nabla_xi.comps) comp = star_product(comp, ex);
    const TruncatedOperator term1 = materialize_connection(nabla_xi, cover_w);
    const TruncatedOperator term2 = commutator(
        lifted_dirac_matrix(spec, cover_w), represent_spinor(ex, cover_w));
    const TruncatedOperator pia = represent_spinor(xi, cover_w);
    const TruncatedOperator rhs{cover_w, term1.spinor_dim,
                                term1.mat + pia.mat.mul(term2.mat)};
    std::vector<LatticeIndex> shifts;
    for (const auto& [k, v] : xi_ex.coeffs()) shifts.push_back(k);
    const double leib = column_restricted_distance(
        lhs, rhs, interior_columns(shifts, cover_w));
    pass &= leib <= 1e-12;
    printed_worst = std::fmax(printed_worst, leib);
  }
  double equiv = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const TorusElement a = random_element(spec.cover_theta,
                                          TruncationWindow(2, 3), 2.0, ++seed);
    equiv = std::fmax(equiv, equivariance_check(a, spec));
  }
  pass &= equiv <= 1e-12;
  printed_worst = std::fmax(printed_worst, equiv);

  // lifted Dirac restriction
  {
    const TruncationWindow cover_w(2, 6);
    const TruncationWindow base_w(2, 2);
    const TruncatedOperator lifted = lifted_dirac_matrix(spec, cover_w);
    const TruncatedOperator base_d = dirac_matrix(base_w);
    double lift = 0.0;
    base_w.for_each([&](const LatticeIndex& p) {
      const LatticeIndex lp{2 * p[0], 3 * p[1]};
      if (!cover_w.contains(lp)) return;
      const std::size_t src = base_w.flat_index(p) * 2;
      const std::size_t dst = cover_w.flat_index(lp) * 2;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          lift = std::fmax(lift, std::abs(lifted.mat.at(dst + i, dst + j) -
                                          base_d.mat.at(src + i, src + j)));
    });
    pass &= lift <= 1e-13;
    printed_worst = std::fmax(printed_worst, lift);
  }

  const double secs = t.seconds();
  report(6, "covering suite k=(2,3)", pass && secs < 10.0, printed_worst, 1e-12,
         secs);
}

// 7. tower suite, primes (2,3,5)
void criterion_7() {
  Timer t;
  const std::vector<int> primes{2, 3, 5};
  const SkewMatrix base = SkewMatrix::two_torus(0.5);
  const std::vector<CoveringSpec> tower = tower_build(base, primes);

  bool pass = true;
  for (int k = 0; k <= 3; ++k)
    for (int l = k; l <= 3; ++l)
      for (int m = l; m <= 3; ++m)
        pass &= tower_group_order(primes, 2, k, m) ==
                tower_group_order(primes, 2, l, m) *
                    tower_group_order(primes, 2, k, l);

  const TorusElement a =
      random_element(base, TruncationWindow(2, 2), 2.0, 70001);
  TorusElement walked = a;
  for (const CoveringSpec& s : tower) walked = embed(walked, s);
  const TorusElement direct = embed(a, make_covering(base, {30, 30}));
  pass &= walked.support_size() == direct.support_size();
  for (const auto& [k, v] : direct.coeffs()) pass &= walked.at(k) == v;

  report(7, "tower suite primes (2,3,5)", pass, pass ? 0.0 : 1.0, 0.0,
         t.seconds());
}

// 8. Moyal suite at M = 32, theta = 2
void criterion_8() {
  Timer t;
  const int M = 32;
  const double theta = 2.0;
  bool pass = true;
  double printed_worst = 0.0;

  double table = 0.0;
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n)
      for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) {
          const MoyalMatrix prod = moyal_product(moyal_unit(theta, M, m, n),
                                                 moyal_unit(theta, M, k, l));
          CMatrix expect(static_cast<std::size_t>(M),
                         static_cast<std::size_t>(M));
          if (n == k)
            expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(l),
                       {1.0, 0.0});
          table = std::fmax(table, prod.factors[0].max_abs_diff(expect));
        }
  pass &= table == 0.0;

  const LadderSet ls = ladder_set(M);
  double ladder = 0.0;
  for (int m = 0; m < M - 1; ++m)
    for (int n = 0; n < M - 1; ++n) {
      const CMatrix e = moyal_unit(theta, M, m, n).factors[0];
      CMatrix expect(e.rows(), e.cols());
      if (m > 0)
        expect.set(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n),
                   {std::sqrt(2.0 * m), 0.0});
      ladder = std::fmax(ladder, ls.a.mul(e).max_abs_diff(expect));
      expect = CMatrix(e.rows(), e.cols());
      expect.set(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n),
                 {std::sqrt(2.0 * m + 2.0), 0.0});
      ladder = std::fmax(ladder, ls.abar.mul(e).max_abs_diff(expect));
      expect = CMatrix(e.rows(), e.cols());
      expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(n + 1),
                 {std::sqrt(2.0 * n + 2.0), 0.0});
      ladder = std::fmax(ladder, e.mul(ls.a).max_abs_diff(expect));
      expect = CMatrix(e.rows(), e.cols());
      if (n > 0)
        expect.set(static_cast<std::size_t>(m), static_cast<std::size_t>(n - 1),
                   {std::sqrt(2.0 * n), 0.0});
      ladder = std::fmax(ladder, e.mul(ls.abar).max_abs_diff(expect));
    }
  pass &= ladder == 0.0;

  const CMatrix ccr = ls.a.mul(ls.abar) - ls.abar.mul(ls.a);
  double ccr_res = 0.0;
  for (int i = 0; i < M - 1; ++i)
    for (int j = 0; j < M - 1; ++j) {
      const cplx expect = i == j ? cplx{2.0, 0.0} : cplx{0.0, 0.0};
      ccr_res = std::fmax(ccr_res,
                          std::abs(ccr.at(static_cast<std::size_t>(i),
                                          static_cast<std::size_t>(j)) -
                                   expect));
    }
  pass &= ccr_res <= 1e-13;
  printed_worst = std::fmax(printed_worst, ccr_res);

  std::uint64_t st = 80001;
  auto rand_unit = [&st] {
    st += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = st;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
  };
  auto random_moyal = [&] {
    CMatrix c(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        c.set(i, j, {rand_unit() / (1.0 + static_cast<double>(i + j)),
                     rand_unit() / (1.0 + static_cast<double>(i + j))});
    return moyal_wrap(theta, c);
  };
  double leibniz = 0.0, trace_res = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const MoyalMatrix x = random_moyal();
    const MoyalMatrix y = random_moyal();
    for (MoyalAxis ax : {MoyalAxis::P, MoyalAxis::Q}) {
      const MoyalMatrix lhs = moyal_partial(moyal_product(x, y), ax);
      MoyalMatrix rhs = moyal_product(moyal_partial(x, ax), y);
      const MoyalMatrix rhs2 = moyal_product(x, moyal_partial(y, ax));
      rhs.factors[0] = rhs.factors[0] + rhs2.factors[0];
      leibniz = std::fmax(leibniz, interior_distance(lhs, rhs));
    }
    trace_res =
        std::fmax(trace_res, std::abs(moyal_trace(moyal_product(x, y)) -
                                      moyal_trace(moyal_product(y, x))));
  }
  pass &= leibniz <= 1e-13;
  pass &= trace_res <= 1e-13;
  printed_worst = std::fmax(printed_worst, std::fmax(leibniz, trace_res));

  const MoyalMatrix e00 = moyal_unit(theta, M, 0, 0);
  const double sem = std::fmax(std::abs(seminorm_rk(e00, 0) - 1.0),
                               std::abs(seminorm_rk(e00, 1) - 1.0));
  pass &= sem <= 1e-14;
  printed_worst = std::fmax(printed_worst, sem);

  const double secs = t.seconds();
  report(8, "Moyal suite M=32", pass && secs < 5.0, printed_worst, 1e-13, secs);
}

// 9. bigraded product: associativity and gauge equivalence
void criterion_9() {
  Timer t;
  const double th = 0.3;
  const cplx lambda = unit_phase(2.0 * th);
  const SkewMatrix flat = SkewMatrix::zero(2);
  const SkewMatrix tw = SkewMatrix::two_torus(th);

  double assoc = 0.0;
  std::uint64_t seed = 90000;
  for (int rep = 0; rep < 5; ++rep) {
    const TorusElement x =
        random_element(flat, TruncationWindow(2, 3), 2.0, ++seed);
    const TorusElement y =
        random_element(flat, TruncationWindow(2, 3), 2.0, ++seed);
    const TorusElement z =
        random_element(flat, TruncationWindow(2, 3), 2.0, ++seed);
    assoc = std::fmax(assoc,
                      bigraded_star(bigraded_star(x, y, lambda), z, lambda)
                          .max_coeff_distance(
                              bigraded_star(x, bigraded_star(y, z, lambda),
                                            lambda)));
  }

  double gauge = 0.0;
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -3; k2 <= 3; ++k2)
      for (int p1 = -3; p1 <= 3; ++p1)
        for (int p2 = -3; p2 <= 3; ++p2) {
          const TorusElement twisted = star_product(
              make_unitary({k1, k2}, tw), make_unitary({p1, p2}, tw));
          TorusElement lhs(flat);
          for (const auto& [idx, v] : twisted.coeffs())
            lhs.set(idx, v * unit_phase(th * idx[0] * idx[1]));
          const TorusElement rhs = bigraded_star(
              cocycle_gauge(make_unitary({k1, k2}, flat), th),
              cocycle_gauge(make_unitary({p1, p2}, flat), th), lambda);
          gauge = std::fmax(gauge, lhs.max_coeff_distance(rhs));
        }

  const double worst = std::fmax(assoc, gauge);
  report(9, "bigraded deformed product", worst <= 1e-13, worst, 1e-13,
         t.seconds());
}

// 10. full verification suite: deterministic and under a minute
void criterion_10() {
  Timer t;
  const verify::VerificationReport a = verify::run_all(42);
  const verify::VerificationReport b = verify::run_all(42);
  bool pass = a.passed() && b.passed();
  pass &= a.cases.size() == b.cases.size();
  for (std::size_t i = 0; pass && i < a.cases.size(); ++i)
    pass &= a.cases[i].id == b.cases[i].id &&
            a.cases[i].residual == b.cases[i].residual;
  const double secs = t.seconds();
  pass &= secs < 60.0;
  report(10, "full verification suite", pass, pass ? 0.0 : 1.0, 0.0, secs);
}

}  // namespace

int main() {
  std::printf("acceptance suite  [kernels: %s]\n", kern::active().name);
  const Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s  (%.2f s total)\n",
              g_failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              total.seconds());
  return g_failed == 0 ? 0 : 1;
}
