#include "nct/moyal.hpp"

#include <cmath>
#include <stdexcept>

#include "nct/kernels.hpp"

namespace nct {

namespace {

void check_pair(const MoyalMatrix& x, const MoyalMatrix& y) {
  if (x.theta != y.theta)
    throw std::invalid_argument("moyal: deformation parameters differ");
  if (x.trunc != y.trunc || x.half_dim() != y.half_dim())
    throw std::invalid_argument("moyal: shape mismatch");
}

void check_core(double theta, int trunc) {
  if (theta <= 0.0) throw std::invalid_argument("moyal: theta must be > 0");
  if (trunc < 2) throw std::invalid_argument("moyal: truncation must be >= 2");
}

}  // namespace

MoyalMatrix moyal_unit(double theta, int trunc, int m, int n) {
  check_core(theta, trunc);
  if (m < 0 || n < 0 || m >= trunc || n >= trunc)
    throw std::invalid_argument("moyal_unit: index out of range");
  CMatrix c(static_cast<std::size_t>(trunc), static_cast<std::size_t>(trunc));
  c.set(static_cast<std::size_t>(m), static_cast<std::size_t>(n), {1.0, 0.0});
  return {theta, trunc, 0, {std::move(c)}};
}

MoyalMatrix moyal_identity(double theta, int trunc) {
  check_core(theta, trunc);
  return {theta, trunc, 0, {CMatrix::identity(static_cast<std::size_t>(trunc))}};
}

MoyalMatrix moyal_wrap(double theta, const CMatrix& c, int margin) {
  check_core(theta, static_cast<int>(c.rows()));
  if (c.rows() != c.cols()) throw std::invalid_argument("moyal_wrap: not square");
  return {theta, static_cast<int>(c.rows()), margin, {c}};
}

MoyalMatrix moyal_product(const MoyalMatrix& x, const MoyalMatrix& y) {
  check_pair(x, y);
  MoyalMatrix out{x.theta, x.trunc, std::max(x.margin, y.margin), {}};
  out.factors.reserve(x.factors.size());
  for (std::size_t f = 0; f < x.factors.size(); ++f)
    out.factors.push_back(x.factors[f].mul(y.factors[f]));
  return out;
}

LadderSet ladder_set(int trunc) {
  if (trunc < 2) throw std::invalid_argument("ladder_set: truncation must be >= 2");
  const std::size_t M = static_cast<std::size_t>(trunc);
  LadderSet ls{CMatrix(M, M), CMatrix(M, M), CMatrix(M, M), CMatrix(M, M),
               CMatrix(M, M)};
  for (std::size_t m = 1; m < M; ++m) {
    const double v = std::sqrt(2.0 * static_cast<double>(m));
    ls.a.set(m - 1, m, {v, 0.0});
    ls.abar.set(m, m - 1, {v, 0.0});
  }
  for (std::size_t m = 0; m < M; ++m)
    ls.h.set(m, m, {2.0 * static_cast<double>(m) + 1.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ls.q = (ls.a + ls.abar).scaled({inv_sqrt2, 0.0});
  // (a - abar) / (i sqrt(2)) = -i/sqrt(2) (a - abar)
  ls.p = (ls.a - ls.abar).scaled({0.0, -inv_sqrt2});
  return ls;
}

MoyalMatrix moyal_partial(const MoyalMatrix& x, MoyalAxis axis, int factor) {
  if (x.theta != 2.0)
    throw std::invalid_argument("moyal_partial: requires the theta = 2 normalization");
  if (factor < 0 || factor >= x.half_dim())
    throw std::invalid_argument("moyal_partial: factor out of range");
  const LadderSet ls = ladder_set(x.trunc);
  const CMatrix& c = x.factors[static_cast<std::size_t>(factor)];
  CMatrix out;
  if (axis == MoyalAxis::P) {
    out = (ls.q.mul(c) - c.mul(ls.q)).scaled({0.0, -1.0});
  } else {
    out = (ls.p.mul(c) - c.mul(ls.p)).scaled({0.0, 1.0});
  }
  MoyalMatrix r = x;
  r.factors[static_cast<std::size_t>(factor)] = std::move(out);
  r.margin = x.margin + 1;
  return r;
}

double seminorm_rk(const MoyalMatrix& x, int k) {
  if (k < 0) throw std::invalid_argument("seminorm_rk: level must be >= 0");
  const std::size_t M = static_cast<std::size_t>(x.trunc);
  std::vector<double> axis_w(M);
  for (std::size_t m = 0; m < M; ++m)
    axis_w[m] = std::pow(static_cast<double>(m) + 0.5, k);
  const double theta_w = std::pow(x.theta, 2 * k);
  std::vector<double> w(M * M);
  for (std::size_t m = 0; m < M; ++m)
    for (std::size_t n = 0; n < M; ++n) w[m * M + n] = theta_w * axis_w[m] * axis_w[n];
  double prod = 1.0;
  for (const CMatrix& c : x.factors)
    prod *= std::sqrt(
        kern::active().weighted_norm2(c.re(), c.im(), w.data(), M * M));
  return prod;
}

NormPair norm_pair(const MoyalMatrix& x) {
  NormPair np{1.0, 1.0};
  for (const CMatrix& c : x.factors) {
    np.frobenius *= c.frobenius();
    np.spectral *= spectral_norm(c);
  }
  return np;
}

MoyalMatrix tensor_combine(const std::vector<MoyalMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_combine: no factors");
  MoyalMatrix out{factors.front().theta, factors.front().trunc, 0, {}};
  for (const MoyalMatrix& f : factors) {
    if (f.half_dim() != 1)
      throw std::invalid_argument("tensor_combine: factors must have N = 1");
    if (f.theta != out.theta || f.trunc != out.trunc)
      throw std::invalid_argument("tensor_combine: factor shape/theta mismatch");
    out.margin = std::max(out.margin, f.margin);
    out.factors.push_back(f.factors.front());
  }
  return out;
}

cplx moyal_trace(const MoyalMatrix& x) {
  cplx t{1.0, 0.0};
  for (const CMatrix& c : x.factors) t *= c.trace_diag();
  return t;
}

CMatrix moyal_dense(const MoyalMatrix& x) {
  CMatrix acc = x.factors.front();
  for (std::size_t f = 1; f < x.factors.size(); ++f)
    acc = CMatrix::kron(acc, x.factors[f]);
  return acc;
}

double interior_distance(const MoyalMatrix& x, const MoyalMatrix& y) {
  check_pair(x, y);
  if (x.half_dim() != 1)
    throw std::invalid_argument("interior_distance: N = 1 only");
  const int cut = x.trunc - std::max(x.margin, y.margin);
  double worst = 0.0;
  for (int i = 0; i < cut; ++i)
    for (int j = 0; j < cut; ++j)
      worst = std::fmax(worst,
                        std::abs(x.factors[0].at(static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j)) -
                                 y.factors[0].at(static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j))));
  return worst;
}

}  // namespace nct
