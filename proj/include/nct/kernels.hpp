#pragma once

#include <cstddef>

// Arithmetic inner loops shared by the twisted convolution, the operator
// matrix products and the weighted norms. Complex data is stored as split
// real/imaginary planes; every kernel exists as a scalar reference and,
// on x86-64, as an AVX2+FMA variant selected at runtime. The two variants
// are equivalence-tested against each other.
//
// Selection order: NCT_KERNELS=scalar|avx2 environment override, otherwise
// the best variant the CPU supports.

namespace nct::kern {

// y[j] += scale * rot^j * x[j]  for j in [0, len).
// scale and rot are complex; rot is applied incrementally, which is why the
// convolution keeps its rows short (boxes of small radius).
using rotated_axpy_fn = void (*)(double* yr, double* yi, const double* xr,
                                 const double* xi, std::size_t len,
                                 double sre, double sim, double rre, double rim);

// C += A * B for row-major complex matrices, A m x k, B k x n, C m x n.
using gemm_acc_fn = void (*)(double* cr, double* ci, const double* ar,
                             const double* ai, const double* br,
                             const double* bi, std::size_t m, std::size_t k,
                             std::size_t n);

// Returns sum_j w[j] * (xr[j]^2 + xi[j]^2); w == nullptr means unit weights.
using weighted_norm2_fn = double (*)(const double* xr, const double* xi,
                                     const double* w, std::size_t len);

struct Kernels {
  rotated_axpy_fn rotated_axpy;
  gemm_acc_fn gemm_acc;
  weighted_norm2_fn weighted_norm2;
  const char* name;
};

// Reference implementations, always available.
const Kernels& scalar();

// AVX2+FMA implementations; nullptr when unsupported (wrong arch or CPU).
const Kernels* avx2();

// Variant chosen at startup, honoring NCT_KERNELS.
const Kernels& active();

namespace detail {
// Table from the AVX2 translation unit; never call its entries without a
// runtime CPU check. nullptr on non-x86 builds.
const Kernels* avx2_table();
}  // namespace detail

}  // namespace nct::kern
