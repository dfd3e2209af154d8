#pragma once

#include <vector>

#include "nct/matrix.hpp"

namespace nct {

// Hermitian gamma matrices satisfying g^i g^j + g^j g^i = 2 delta^{ij} I,
// of size 2^floor(n/2). Construction is deterministic: even dimensions grow
// by tensor doubling from the Pauli pair, odd dimensions append the chirality
// element of the even set below.
struct GammaSet {
  int n = 0;
  std::size_t spinor_dim = 1;
  std::vector<CMatrix> g;
};

GammaSet gamma_set(int n);

// Largest |g^i g^j + g^j g^i - 2 delta^{ij} I| entry over all pairs.
double clifford_residual(const GammaSet& gs);

}  // namespace nct
