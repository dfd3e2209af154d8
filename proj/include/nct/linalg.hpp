#pragma once

#include <vector>

#include "nct/matrix.hpp"

namespace nct {

// Largest singular value.
double spectral_norm(const CMatrix& m);

// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace nct
