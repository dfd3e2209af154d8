#include "nct/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NCT_X86 1
#else
#define NCT_X86 0
#endif

#if NCT_X86

#include <immintrin.h>

namespace nct::kern {
namespace {

// Lanes j..j+3 carry cur * (1, rot, rot^2, rot^3); cur advances by rot^4.
void rotated_axpy_avx2(double* yr, double* yi, const double* xr,
                       const double* xi, std::size_t len, double sre,
                       double sim, double rre, double rim) {
  const double r2re = rre * rre - rim * rim;
  const double r2im = 2.0 * rre * rim;
  const double r3re = r2re * rre - r2im * rim;
  const double r3im = r2re * rim + r2im * rre;
  const double r4re = r2re * r2re - r2im * r2im;
  const double r4im = 2.0 * r2re * r2im;

  const __m256d lre = _mm256_set_pd(r3re, r2re, rre, 1.0);
  const __m256d lim = _mm256_set_pd(r3im, r2im, rim, 0.0);

  double cre = sre, cim = sim;
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256d c_re = _mm256_set1_pd(cre);
    const __m256d c_im = _mm256_set1_pd(cim);
    // p = cur * lane rotation
    const __m256d pre = _mm256_fmsub_pd(c_re, lre, _mm256_mul_pd(c_im, lim));
    const __m256d pim = _mm256_fmadd_pd(c_re, lim, _mm256_mul_pd(c_im, lre));
    const __m256d xre = _mm256_loadu_pd(xr + j);
    const __m256d xim = _mm256_loadu_pd(xi + j);
    __m256d acc_r = _mm256_loadu_pd(yr + j);
    __m256d acc_i = _mm256_loadu_pd(yi + j);
    acc_r = _mm256_add_pd(acc_r,
                          _mm256_fmsub_pd(pre, xre, _mm256_mul_pd(pim, xim)));
    acc_i = _mm256_add_pd(acc_i,
                          _mm256_fmadd_pd(pre, xim, _mm256_mul_pd(pim, xre)));
    _mm256_storeu_pd(yr + j, acc_r);
    _mm256_storeu_pd(yi + j, acc_i);
    const double nre = cre * r4re - cim * r4im;
    const double nim = cre * r4im + cim * r4re;
    cre = nre;
    cim = nim;
  }
  for (; j < len; ++j) {
    const double xre = xr[j], xim = xi[j];
    yr[j] += cre * xre - cim * xim;
    yi[j] += cre * xim + cim * xre;
    const double nre = cre * rre - cim * rim;
    const double nim = cre * rim + cim * rre;
    cre = nre;
    cim = nim;
  }
}

void gemm_acc_avx2(double* cr, double* ci, const double* ar, const double* ai,
                   const double* br, const double* bi, std::size_t m,
                   std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow_r = cr + i * n;
    double* crow_i = ci + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double are = ar[i * k + l];
      const double aim = ai[i * k + l];
      if (are == 0.0 && aim == 0.0) continue;
      const double* brow_r = br + l * n;
      const double* brow_i = bi + l * n;
      const __m256d va_re = _mm256_set1_pd(are);
      const __m256d va_im = _mm256_set1_pd(aim);
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        const __m256d b_re = _mm256_loadu_pd(brow_r + j);
        const __m256d b_im = _mm256_loadu_pd(brow_i + j);
        __m256d c_re = _mm256_loadu_pd(crow_r + j);
        __m256d c_im = _mm256_loadu_pd(crow_i + j);
        c_re = _mm256_fmadd_pd(va_re, b_re, c_re);
        c_re = _mm256_fnmadd_pd(va_im, b_im, c_re);
        c_im = _mm256_fmadd_pd(va_re, b_im, c_im);
        c_im = _mm256_fmadd_pd(va_im, b_re, c_im);
        _mm256_storeu_pd(crow_r + j, c_re);
        _mm256_storeu_pd(crow_i + j, c_im);
      }
      for (; j < n; ++j) {
        crow_r[j] += are * brow_r[j] - aim * brow_i[j];
        crow_i[j] += are * brow_i[j] + aim * brow_r[j];
      }
    }
  }
}

double weighted_norm2_avx2(const double* xr, const double* xi, const double* w,
                           std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  if (w) {
    for (; j + 4 <= len; j += 4) {
      const __m256d re = _mm256_loadu_pd(xr + j);
      const __m256d im = _mm256_loadu_pd(xi + j);
      const __m256d vw = _mm256_loadu_pd(w + j);
      const __m256d mag =
          _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
      acc = _mm256_fmadd_pd(vw, mag, acc);
    }
  } else {
    for (; j + 4 <= len; j += 4) {
      const __m256d re = _mm256_loadu_pd(xr + j);
      const __m256d im = _mm256_loadu_pd(xi + j);
      acc = _mm256_fmadd_pd(re, re, acc);
      acc = _mm256_fmadd_pd(im, im, acc);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; j < len; ++j) {
    const double mag = xr[j] * xr[j] + xi[j] * xi[j];
    total += w ? w[j] * mag : mag;
  }
  return total;
}

}  // namespace

const Kernels* detail::avx2_table() {
  static const Kernels k{rotated_axpy_avx2, gemm_acc_avx2, weighted_norm2_avx2,
                         "avx2"};
  return &k;
}

}  // namespace nct::kern

#else  // !NCT_X86

namespace nct::kern {

const Kernels* detail::avx2_table() { return nullptr; }

}  // namespace nct::kern

#endif
