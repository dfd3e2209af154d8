#include "nct/gamma.hpp"

#include <stdexcept>

namespace nct {

namespace {

CMatrix pauli(int which) {
  CMatrix m(2, 2);
  switch (which) {
    case 1:
      m.set(0, 1, {1.0, 0.0});
      m.set(1, 0, {1.0, 0.0});
      break;
    case 2:
      m.set(0, 1, {0.0, -1.0});
      m.set(1, 0, {0.0, 1.0});
      break;
    case 3:
      m.set(0, 0, {1.0, 0.0});
      m.set(1, 1, {-1.0, 0.0});
      break;
    default:
      throw std::logic_error("pauli: bad index");
  }
  return m;
}

// (-i)^k g^1 ... g^{2k}: Hermitian, squares to I, anticommutes with the set.
CMatrix chirality(const std::vector<CMatrix>& even_set) {
  CMatrix prod = CMatrix::identity(even_set.front().rows());
  for (const CMatrix& g : even_set) prod = prod.mul(g);
  const int k = static_cast<int>(even_set.size()) / 2;
  cplx phase{1.0, 0.0};
  for (int i = 0; i < k; ++i) phase *= cplx{0.0, -1.0};
  return prod.scaled(phase);
}

std::vector<CMatrix> build_even(int n) {
  if (n == 2) return {pauli(1), pauli(2)};
  std::vector<CMatrix> prev = build_even(n - 2);
  const std::size_t half = prev.front().rows();
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const CMatrix& g : prev) out.push_back(CMatrix::kron(pauli(1), g));
  out.push_back(CMatrix::kron(pauli(2), CMatrix::identity(half)));
  out.push_back(CMatrix::kron(pauli(3), CMatrix::identity(half)));
  return out;
}

}  // namespace

GammaSet gamma_set(int n) {
  if (n < 1) throw std::invalid_argument("gamma_set: n must be >= 1");
  GammaSet gs;
  gs.n = n;
  if (n == 1) {
    CMatrix one(1, 1);
    one.set(0, 0, {1.0, 0.0});
    gs.g = {one};
  } else if (n % 2 == 0) {
    gs.g = build_even(n);
  } else {
    gs.g = build_even(n - 1);
    gs.g.push_back(chirality(gs.g));
  }
  gs.spinor_dim = gs.g.front().rows();
  return gs;
}

double clifford_residual(const GammaSet& gs) {
  const std::size_t m = gs.spinor_dim;
  double worst = 0.0;
  for (std::size_t i = 0; i < gs.g.size(); ++i)
    for (std::size_t j = 0; j < gs.g.size(); ++j) {
      CMatrix anti = gs.g[i].mul(gs.g[j]) + gs.g[j].mul(gs.g[i]);
      if (i == j) anti = anti - CMatrix::identity(m).scaled({2.0, 0.0});
      worst = std::fmax(worst, anti.max_abs());
    }
  for (const CMatrix& g : gs.g)
    worst = std::fmax(worst, g.max_abs_diff(g.adjoint()));
  return worst;
}

}  // namespace nct
