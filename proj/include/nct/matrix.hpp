#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nct/kernels.hpp"
#include "nct/phase.hpp"

namespace nct {

// Dense row-major complex matrix stored as split real/imaginary planes,
// the layout the kernels consume directly.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), re_(rows * cols, 0.0), im_(rows * cols, 0.0) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.re_[i * n + i] = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx at(std::size_t i, std::size_t j) const {
    const std::size_t p = i * cols_ + j;
    return {re_[p], im_[p]};
  }
  void set(std::size_t i, std::size_t j, cplx v) {
    const std::size_t p = i * cols_ + j;
    re_[p] = v.real();
    im_[p] = v.imag();
  }
  void add_at(std::size_t i, std::size_t j, cplx v) {
    const std::size_t p = i * cols_ + j;
    re_[p] += v.real();
    im_[p] += v.imag();
  }

  const double* re() const { return re_.data(); }
  const double* im() const { return im_.data(); }
  double* re() { return re_.data(); }
  double* im() { return im_.data(); }

  CMatrix operator+(const CMatrix& o) const {
    check_same_shape(o);
    CMatrix r = *this;
    for (std::size_t p = 0; p < re_.size(); ++p) {
      r.re_[p] += o.re_[p];
      r.im_[p] += o.im_[p];
    }
    return r;
  }

  CMatrix operator-(const CMatrix& o) const {
    check_same_shape(o);
    CMatrix r = *this;
    for (std::size_t p = 0; p < re_.size(); ++p) {
      r.re_[p] -= o.re_[p];
      r.im_[p] -= o.im_[p];
    }
    return r;
  }

  CMatrix scaled(cplx s) const {
    CMatrix r(rows_, cols_);
    for (std::size_t p = 0; p < re_.size(); ++p) {
      r.re_[p] = s.real() * re_[p] - s.imag() * im_[p];
      r.im_[p] = s.real() * im_[p] + s.imag() * re_[p];
    }
    return r;
  }

  // this * o through the active gemm kernel.
  CMatrix mul(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CMatrix::mul: shape mismatch");
    CMatrix r(rows_, o.cols_);
    kern::active().gemm_acc(r.re(), r.im(), re(), im(), o.re(), o.im(), rows_,
                            cols_, o.cols_);
    return r;
  }

  CMatrix adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, std::conj(at(i, j)));
    return r;
  }

  cplx trace_diag() const {
    cplx t{0.0, 0.0};
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double w = 0.0;
    for (std::size_t p = 0; p < re_.size(); ++p)
      w = std::fmax(w, std::hypot(re_[p], im_[p]));
    return w;
  }

  double max_abs_diff(const CMatrix& o) const {
    check_same_shape(o);
    double w = 0.0;
    for (std::size_t p = 0; p < re_.size(); ++p)
      w = std::fmax(w, std::hypot(re_[p] - o.re_[p], im_[p] - o.im_[p]));
    return w;
  }

  double frobenius() const {
    return std::sqrt(kern::active().weighted_norm2(re(), im(), nullptr, re_.size()));
  }

  // Kronecker product, left factor major: (A x B)[(i,a),(j,b)] = A[i,j] B[a,b].
  static CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const cplx av = a.at(i, j);
        if (av == cplx{0.0, 0.0}) continue;
        for (std::size_t p = 0; p < b.rows_; ++p)
          for (std::size_t q = 0; q < b.cols_; ++q)
            r.set(i * b.rows_ + p, j * b.cols_ + q, av * b.at(p, q));
      }
    return r;
  }

 private:
  void check_same_shape(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("CMatrix: shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<double> re_, im_;
};

}  // namespace nct
