#include "nct/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace nct {

TruncatedOperator represent(const TorusElement& a,
                            const TruncationWindow& window) {
  if (window.dim() != a.dim())
    throw std::invalid_argument("represent: window dimension mismatch");
  const std::size_t dim = window.size();
  TruncatedOperator op{window, 1, CMatrix(dim, dim)};
  for (std::size_t p = 0; p < dim; ++p) {
    const LatticeIndex col = window.point(p);
    for (const auto& [k, v] : a.coeffs()) {
      const LatticeIndex q = lattice_add(k, col);
      if (!window.contains(q)) continue;
      const cplx phase = unit_phase(-a.theta().bilinear(k, col));
      op.mat.add_at(window.flat_index(q), p, v * phase);
    }
  }
  return op;
}

TruncatedOperator represent_spinor(const TorusElement& a,
                                   const TruncationWindow& window) {
  const GammaSet gs = gamma_set(window.dim());
  TruncatedOperator scalar = represent(a, window);
  return {window, gs.spinor_dim,
          CMatrix::kron(scalar.mat, CMatrix::identity(gs.spinor_dim))};
}

TruncatedOperator dirac_matrix(const TruncationWindow& window) {
  const GammaSet gs = gamma_set(window.dim());
  const std::size_t m = gs.spinor_dim;
  TruncatedOperator op{window, m, CMatrix(window.size() * m, window.size() * m)};
  for (std::size_t p = 0; p < window.size(); ++p) {
    const LatticeIndex k = window.point(p);
    for (int mu = 0; mu < window.dim(); ++mu) {
      const double kmu = static_cast<double>(k[static_cast<std::size_t>(mu)]);
      if (kmu == 0.0) continue;
      const CMatrix& g = gs.g[static_cast<std::size_t>(mu)];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          op.mat.add_at(p * m + i, p * m + j, kmu * g.at(i, j));
    }
  }
  return op;
}

TruncatedOperator commutator(const TruncatedOperator& x,
                             const TruncatedOperator& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("commutator: dimension mismatch");
  return {x.window, x.spinor_dim, x.mat.mul(y.mat) - y.mat.mul(x.mat)};
}

TruncatedOperator dirac_commutator(const TorusElement& a,
                                   const TruncationWindow& window) {
  return commutator(dirac_matrix(window), represent_spinor(a, window));
}

TruncatedOperator commutator_from_derivations(const TorusElement& a,
                                              const TruncationWindow& window) {
  const GammaSet gs = gamma_set(window.dim());
  const std::size_t m = gs.spinor_dim;
  CMatrix acc(window.size() * m, window.size() * m);
  for (int mu = 0; mu < window.dim(); ++mu) {
    const TruncatedOperator d_mu = represent(delta(a, mu), window);
    acc = acc + CMatrix::kron(d_mu.mat, gs.g[static_cast<std::size_t>(mu)]);
  }
  return {window, m, std::move(acc)};
}

TruncatedOperator pi_s(const TorusElement& a, int s,
                       const TruncationWindow& window) {
  if (s < 0) throw std::invalid_argument("pi_s: level must be >= 0");
  TruncatedOperator level = represent_spinor(a, window);
  if (s == 0) return level;
  const TruncatedOperator d0 = dirac_matrix(window);
  CMatrix pk = level.mat;
  CMatrix dk = d0.mat;
  for (int k = 0; k < s; ++k) {
    const std::size_t half = pk.rows();
    const CMatrix comm = dk.mul(pk) - pk.mul(dk);
    CMatrix next(2 * half, 2 * half);
    CMatrix dnext(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j) {
        const cplx pv = pk.at(i, j);
        if (pv != cplx{0.0, 0.0}) {
          next.set(i, j, pv);
          next.set(half + i, half + j, pv);
        }
        const cplx cv = comm.at(i, j);
        if (cv != cplx{0.0, 0.0}) next.set(half + i, j, cv);
        const cplx dv = dk.at(i, j);
        if (dv != cplx{0.0, 0.0}) {
          dnext.set(i, j, dv);
          dnext.set(half + i, half + j, dv);
        }
      }
    pk = std::move(next);
    dk = std::move(dnext);
  }
  return {window, level.spinor_dim, std::move(pk)};
}

double seminorm_s(const TorusElement& a, int s,
                  const TruncationWindow& window) {
  return spectral_norm(pi_s(a, s, window).mat);
}

SpectrumReport dirac_spectrum(const SkewMatrix& theta,
                              const TruncationWindow& window) {
  if (theta.dim() != window.dim())
    throw std::invalid_argument("dirac_spectrum: dimension mismatch");
  const GammaSet gs = gamma_set(window.dim());
  const std::size_t m = gs.spinor_dim;
  SpectrumReport rep{.eigenvalues = {}, .radius = window.radius(),
                     .n = window.dim(), .theta = theta};
  rep.eigenvalues.reserve(window.size() * m);
  // The operator is block-diagonal over lattice points; solve each
  // m x m Hermitian block.
  for (std::size_t p = 0; p < window.size(); ++p) {
    const LatticeIndex k = window.point(p);
    CMatrix block(m, m);
    for (int mu = 0; mu < window.dim(); ++mu) {
      const double kmu = static_cast<double>(k[static_cast<std::size_t>(mu)]);
      if (kmu == 0.0) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          block.add_at(i, j, kmu * gs.g[static_cast<std::size_t>(mu)].at(i, j));
    }
    for (double ev : hermitian_eigenvalues(block)) rep.eigenvalues.push_back(ev);
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  return rep;
}

std::vector<std::size_t> interior_columns(const std::vector<LatticeIndex>& shifts,
                                          const TruncationWindow& window) {
  std::vector<std::size_t> cols;
  for (std::size_t p = 0; p < window.size(); ++p) {
    const LatticeIndex col = window.point(p);
    bool ok = true;
    for (const LatticeIndex& k : shifts)
      if (!window.contains(lattice_add(k, col))) {
        ok = false;
        break;
      }
    if (ok) cols.push_back(p);
  }
  return cols;
}

std::vector<std::size_t> interior_columns_radius(int interior_radius,
                                                 const TruncationWindow& window) {
  std::vector<std::size_t> cols;
  for (std::size_t p = 0; p < window.size(); ++p) {
    const LatticeIndex col = window.point(p);
    bool ok = true;
    for (int v : col)
      if (v < -interior_radius || v > interior_radius) {
        ok = false;
        break;
      }
    if (ok) cols.push_back(p);
  }
  return cols;
}

double column_restricted_distance(const TruncatedOperator& x,
                                  const TruncatedOperator& y,
                                  const std::vector<std::size_t>& lattice_cols) {
  if (x.dim() != y.dim() || x.spinor_dim != y.spinor_dim)
    throw std::invalid_argument("column_restricted_distance: shape mismatch");
  const std::size_t m = x.spinor_dim;
  double worst = 0.0;
  for (std::size_t p : lattice_cols)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t col = p * m + b;
      for (std::size_t row = 0; row < x.dim(); ++row)
        worst = std::fmax(worst, std::abs(x.mat.at(row, col) - y.mat.at(row, col)));
    }
  return worst;
}

}  // namespace nct
