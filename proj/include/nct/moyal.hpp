#pragma once

#include <vector>

#include "nct/linalg.hpp"
#include "nct/matrix.hpp"

namespace nct {

// Plane element in the oscillator matrix basis, truncated to order M.
// Half-dimension N > 1 is stored as a list of N factors combined by tensor
// product; tensors are materialized only on demand. `margin` counts how many
// trailing rows/columns are untrusted after banded operations (truncation
// corrupts only the high-index boundary).
struct MoyalMatrix {
  double theta = 2.0;
  int trunc = 0;  // M
  int margin = 0;
  std::vector<CMatrix> factors;

  int half_dim() const { return static_cast<int>(factors.size()); }  // N
};

// Single matrix unit E_{mn} (N = 1).
MoyalMatrix moyal_unit(double theta, int trunc, int m, int n);

// Truncated unit: diagonal sum of E_{mm}.
MoyalMatrix moyal_identity(double theta, int trunc);

// Wraps an explicit coefficient matrix (N = 1).
MoyalMatrix moyal_wrap(double theta, const CMatrix& c, int margin = 0);

// Deformed product = plain matrix product of coefficient matrices,
// factorwise for N > 1. Margin propagates as the max of the operands.
MoyalMatrix moyal_product(const MoyalMatrix& x, const MoyalMatrix& y);

// Annihilation / creation / position / momentum / Hamiltonian multipliers in
// the theta = 2 normalization:
//   a     : entries sqrt(2m) at (m-1, m)
//   abar  : transpose of a
//   h     : diagonal 2m + 1
//   q     : (a + abar) / sqrt(2)
//   p     : (a - abar) / (i sqrt(2))
struct LadderSet {
  CMatrix a, abar, q, p, h;
};

LadderSet ladder_set(int trunc);

enum class MoyalAxis { P, Q };

// Derivation as a commutator with the coordinate multipliers:
//   d/dp x = -i (q x - x q),  d/dq x = i (p x - x p).
// Requires theta == 2 (other theta reduce to this case by dilation scaling,
// which is out of scope). Acts on one tensor factor; margin grows by one.
MoyalMatrix moyal_partial(const MoyalMatrix& x, MoyalAxis axis, int factor = 0);

// Weighted l2 seminorm r_k, factorized over tensor factors: each factor
// contributes sqrt(sum theta^{2k} (m+1/2)^k (n+1/2)^k |c_mn|^2).
double seminorm_rk(const MoyalMatrix& x, int k);

struct NormPair {
  double frobenius;
  double spectral;
};

// Frobenius and spectral norms (products over tensor factors).
NormPair norm_pair(const MoyalMatrix& x);

// Combines N = 1 elements with equal theta and truncation into one rank-one
// tensor element.
MoyalMatrix tensor_combine(const std::vector<MoyalMatrix>& factors);

cplx moyal_trace(const MoyalMatrix& x);

// Materialized coefficient tensor (Kronecker product of the factors).
CMatrix moyal_dense(const MoyalMatrix& x);

// Max |x - y| over trusted entries: indices below trunc - margin in every
// row/column, margin taken as the max of the operands' margins (N = 1).
double interior_distance(const MoyalMatrix& x, const MoyalMatrix& y);

}  // namespace nct
