#include "nct/covering.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nct {

namespace {

std::int64_t lcm_all(const std::vector<int>& k) {
  std::int64_t l = 1;
  for (int v : k) l = std::lcm(l, static_cast<std::int64_t>(v));
  return l;
}

void check_element(const TorusElement& a, const CoveringSpec& spec) {
  if (a.theta() != spec.cover_theta)
    throw std::invalid_argument("covering: element does not live on the cover");
}

}  // namespace

CoveringSpec make_covering(const SkewMatrix& base_theta,
                           const std::vector<int>& k) {
  const int n = base_theta.dim();
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("make_covering: multiplicity vector length mismatch");
  for (int v : k)
    if (v < 1) throw std::invalid_argument("make_covering: multiplicities must be >= 1");
  SkewMatrix cover(n);
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      cover.set(r, s, base_theta(r, s) /
                          (static_cast<double>(k[static_cast<std::size_t>(r)]) *
                           static_cast<double>(k[static_cast<std::size_t>(s)])));
  return {k, base_theta, cover};
}

void validate_covering(const CoveringSpec& spec, double tol) {
  const int n = spec.dim();
  if (static_cast<int>(spec.k.size()) != n || spec.cover_theta.dim() != n)
    throw std::invalid_argument("covering spec: dimension mismatch");
  for (int v : spec.k)
    if (v < 1) throw std::invalid_argument("covering spec: multiplicities must be >= 1");
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      const double kk = static_cast<double>(spec.k[static_cast<std::size_t>(r)]) *
                        static_cast<double>(spec.k[static_cast<std::size_t>(s)]);
      const cplx lhs = unit_phase(-2.0 * spec.base_theta(r, s));
      const cplx rhs = unit_phase(-2.0 * spec.cover_theta(r, s) * kk);
      if (std::abs(lhs - rhs) > tol)
        throw std::invalid_argument("covering spec: incompatible deformations");
      if (std::abs(spec.cover_theta(r, s) * kk - spec.base_theta(r, s)) > tol)
        throw std::invalid_argument("covering spec: non-canonical cover deformation");
    }
}

cplx deck_phase(const DeckElement& g, const LatticeIndex& l,
                const std::vector<int>& k) {
  const std::int64_t denom = lcm_all(k);
  std::int64_t num = 0;
  for (std::size_t j = 0; j < k.size(); ++j)
    num += static_cast<std::int64_t>(g[j]) * l[j] *
           (denom / static_cast<std::int64_t>(k[j]));
  num %= denom;
  if (num < 0) num += denom;
  return unit_phase(2.0 * static_cast<double>(num) / static_cast<double>(denom));
}

void for_each_deck(const CoveringSpec& spec,
                   const std::function<void(const DeckElement&)>& f) {
  if (spec.deck_order() > kMaxDeckOrder)
    throw std::invalid_argument("covering: deck group too large to enumerate");
  DeckElement g(spec.k.size(), 0);
  while (true) {
    f(g);
    std::size_t j = spec.k.size();
    bool wrapped = true;
    while (j > 0) {
      --j;
      if (++g[j] < spec.k[j]) {
        wrapped = false;
        break;
      }
      g[j] = 0;
    }
    if (wrapped) return;
  }
}

TorusElement embed(const TorusElement& a, const CoveringSpec& spec) {
  if (a.theta() != spec.base_theta)
    throw std::invalid_argument("embed: element does not live on the base");
  TorusElement out(spec.cover_theta);
  for (const auto& [l, v] : a.coeffs()) {
    LatticeIndex lifted(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) lifted[j] = spec.k[j] * l[j];
    out.set(lifted, v);
  }
  return out;
}

TorusElement deck_action(const DeckElement& g, const TorusElement& a,
                         const CoveringSpec& spec) {
  check_element(a, spec);
  if (g.size() != spec.k.size())
    throw std::invalid_argument("deck_action: residue vector length mismatch");
  TorusElement out(spec.cover_theta);
  for (const auto& [l, v] : a.coeffs())
    out.set(l, v * deck_phase(g, l, spec.k));
  return out;
}

TorusElement invariant_projection(const TorusElement& a,
                                  const CoveringSpec& spec) {
  check_element(a, spec);
  TorusElement out(spec.cover_theta);
  for (const auto& [l, v] : a.coeffs()) {
    bool invariant = true;
    for (std::size_t j = 0; j < spec.k.size(); ++j)
      if (l[j] % spec.k[j] != 0) {
        invariant = false;
        break;
      }
    if (invariant) out.set(l, v);
  }
  return out;
}

TorusElement module_inner(const TorusElement& a, const TorusElement& b,
                          const CoveringSpec& spec, double residue_tol) {
  check_element(a, spec);
  check_element(b, spec);
  const TorusElement prod = star_product(involution(a), b);
  TorusElement out(spec.base_theta);
  for (const auto& [l, v] : prod.coeffs()) {
    cplx phase_sum{0.0, 0.0};
    for_each_deck(spec, [&](const DeckElement& g) {
      phase_sum += deck_phase(g, l, spec.k);
    });
    const cplx total = v * phase_sum;
    bool on_sublattice = true;
    for (std::size_t j = 0; j < spec.k.size(); ++j)
      if (l[j] % spec.k[j] != 0) {
        on_sublattice = false;
        break;
      }
    if (!on_sublattice) {
      if (std::abs(total) > residue_tol)
        throw std::logic_error(
            "module_inner: group sum left mass off the sublattice");
      continue;
    }
    LatticeIndex base_idx(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) base_idx[j] = l[j] / spec.k[j];
    out.add(base_idx, total);
  }
  return out;
}

ConnectionValue connection_apply(const TorusElement& a,
                                 const CoveringSpec& spec) {
  check_element(a, spec);
  ConnectionValue cv{spec.cover_theta, {}};
  cv.comps.reserve(static_cast<std::size_t>(spec.dim()));
  for (int mu = 0; mu < spec.dim(); ++mu) {
    TorusElement comp(spec.cover_theta);
    for (const auto& [l, v] : a.coeffs()) {
      const double weight = static_cast<double>(l[static_cast<std::size_t>(mu)]) /
                            static_cast<double>(spec.k[static_cast<std::size_t>(mu)]);
      if (weight != 0.0) comp.set(l, weight * v);
    }
    cv.comps.push_back(std::move(comp));
  }
  return cv;
}

double equivariance_check(const TorusElement& a, const CoveringSpec& spec) {
  const ConnectionValue nabla = connection_apply(a, spec);
  double worst = 0.0;
  for_each_deck(spec, [&](const DeckElement& g) {
    const ConnectionValue lhs = connection_apply(deck_action(g, a, spec), spec);
    for (int mu = 0; mu < spec.dim(); ++mu) {
      const TorusElement rhs =
          deck_action(g, nabla.comps[static_cast<std::size_t>(mu)], spec);
      worst = std::fmax(
          worst, lhs.comps[static_cast<std::size_t>(mu)].max_coeff_distance(rhs));
    }
  });
  return worst;
}

double connection_average_residual(const TorusElement& a,
                                   const CoveringSpec& spec) {
  const ConnectionValue nabla = connection_apply(a, spec);
  const int n = spec.dim();
  std::vector<TorusElement> avg(static_cast<std::size_t>(n),
                                TorusElement(spec.cover_theta));
  std::int64_t order = 0;
  for_each_deck(spec, [&](const DeckElement& g) {
    ++order;
    DeckElement ginv(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
      ginv[j] = (spec.k[j] - g[j]) % spec.k[j];
    const ConnectionValue term = connection_apply(deck_action(g, a, spec), spec);
    for (int mu = 0; mu < n; ++mu) {
      const TorusElement back =
          deck_action(ginv, term.comps[static_cast<std::size_t>(mu)], spec);
      for (const auto& [l, v] : back.coeffs())
        avg[static_cast<std::size_t>(mu)].add(l, v);
    }
  });
  double worst = 0.0;
  for (int mu = 0; mu < n; ++mu) {
    TorusElement scaled(spec.cover_theta);
    for (const auto& [l, v] : avg[static_cast<std::size_t>(mu)].coeffs())
      scaled.set(l, v / static_cast<double>(order));
    worst = std::fmax(
        worst, scaled.max_coeff_distance(nabla.comps[static_cast<std::size_t>(mu)]));
  }
  return worst;
}

TruncatedOperator lifted_dirac_matrix(const CoveringSpec& spec,
                                      const TruncationWindow& window) {
  if (window.dim() != spec.dim())
    throw std::invalid_argument("lifted_dirac_matrix: dimension mismatch");
  const GammaSet gs = gamma_set(window.dim());
  const std::size_t m = gs.spinor_dim;
  TruncatedOperator op{window, m, CMatrix(window.size() * m, window.size() * m)};
  for (std::size_t p = 0; p < window.size(); ++p) {
    const LatticeIndex l = window.point(p);
    for (int mu = 0; mu < window.dim(); ++mu) {
      const double w = static_cast<double>(l[static_cast<std::size_t>(mu)]) /
                       static_cast<double>(spec.k[static_cast<std::size_t>(mu)]);
      if (w == 0.0) continue;
      const CMatrix& g = gs.g[static_cast<std::size_t>(mu)];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          op.mat.add_at(p * m + i, p * m + j, w * g.at(i, j));
    }
  }
  return op;
}

TruncatedOperator materialize_connection(const ConnectionValue& cv,
                                         const TruncationWindow& window) {
  const GammaSet gs = gamma_set(window.dim());
  const std::size_t m = gs.spinor_dim;
  CMatrix acc(window.size() * m, window.size() * m);
  for (int mu = 0; mu < window.dim(); ++mu) {
    const TruncatedOperator rep =
        represent(cv.comps[static_cast<std::size_t>(mu)], window);
    acc = acc + CMatrix::kron(rep.mat, gs.g[static_cast<std::size_t>(mu)]);
  }
  return {window, m, std::move(acc)};
}

std::vector<CoveringSpec> tower_build(const SkewMatrix& base_theta,
                                      const std::vector<int>& primes) {
  const int n = base_theta.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("tower_build: dimension must be even");
  for (int p : primes)
    if (p < 2) throw std::invalid_argument("tower_build: steps must be >= 2");
  // Require base_theta = theta * J.
  const int half = n / 2;
  const double theta = base_theta(0, half);
  if (base_theta != SkewMatrix::symplectic(n, theta))
    throw std::invalid_argument("tower_build: base must be a symplectic deformation");
  std::vector<CoveringSpec> tower;
  SkewMatrix level = base_theta;
  for (int p : primes) {
    tower.push_back(
        make_covering(level, std::vector<int>(static_cast<std::size_t>(n), p)));
    level = tower.back().cover_theta;
  }
  return tower;
}

std::int64_t tower_group_order(const std::vector<int>& primes, int n, int from,
                               int to) {
  if (from < 0 || to > static_cast<int>(primes.size()) || from > to)
    throw std::invalid_argument("tower_group_order: bad range");
  std::int64_t order = 1;
  for (int j = from; j < to; ++j)
    for (int i = 0; i < n; ++i) order *= primes[static_cast<std::size_t>(j)];
  return order;
}

}  // namespace nct
