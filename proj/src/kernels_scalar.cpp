#include "nct/kernels.hpp"

namespace nct::kern {
namespace {

void rotated_axpy_scalar(double* yr, double* yi, const double* xr,
                         const double* xi, std::size_t len, double sre,
                         double sim, double rre, double rim) {
  // cur = scale * rot^j, advanced by one complex multiply per step.
  double cre = sre, cim = sim;
  for (std::size_t j = 0; j < len; ++j) {
    const double xre = xr[j], xim = xi[j];
    yr[j] += cre * xre - cim * xim;
    yi[j] += cre * xim + cim * xre;
    const double nre = cre * rre - cim * rim;
    const double nim = cre * rim + cim * rre;
    cre = nre;
    cim = nim;
  }
}

void gemm_acc_scalar(double* cr, double* ci, const double* ar,
                     const double* ai, const double* br, const double* bi,
                     std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow_r = cr + i * n;
    double* crow_i = ci + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double are = ar[i * k + l];
      const double aim = ai[i * k + l];
      if (are == 0.0 && aim == 0.0) continue;
      const double* brow_r = br + l * n;
      const double* brow_i = bi + l * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow_r[j] += are * brow_r[j] - aim * brow_i[j];
        crow_i[j] += are * brow_i[j] + aim * brow_r[j];
      }
    }
  }
}

double weighted_norm2_scalar(const double* xr, const double* xi,
                             const double* w, std::size_t len) {
  double acc = 0.0;
  if (w) {
    for (std::size_t j = 0; j < len; ++j)
      acc += w[j] * (xr[j] * xr[j] + xi[j] * xi[j]);
  } else {
    for (std::size_t j = 0; j < len; ++j)
      acc += xr[j] * xr[j] + xi[j] * xi[j];
  }
  return acc;
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{rotated_axpy_scalar, gemm_acc_scalar,
                         weighted_norm2_scalar, "scalar"};
  return k;
}

}  // namespace nct::kern
