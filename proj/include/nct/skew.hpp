#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nct {

// Real skew-symmetric n x n deformation matrix Theta.
// Skew-symmetry is enforced exactly: entries are mirrored on construction
// and validated exactly (theta[j][k] == -theta[k][j]) when loaded from data.
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw std::invalid_argument("SkewMatrix: dimension must be >= 1");
  }

  static SkewMatrix zero(int n) { return SkewMatrix(n); }

  // Builds from a full matrix, rejecting anything not exactly skew-symmetric.
  static SkewMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SkewMatrix t(n);
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(rows[j].size()) != n)
        throw std::invalid_argument("SkewMatrix: ragged rows");
      for (int k = 0; k < n; ++k) t.e_[t.idx(j, k)] = rows[j][k];
    }
    for (int j = 0; j < n; ++j) {
      if (t(j, j) != 0.0)
        throw std::invalid_argument("SkewMatrix: nonzero diagonal");
      for (int k = 0; k < n; ++k)
        if (t(j, k) != -t(k, j))
          throw std::invalid_argument("SkewMatrix: not exactly skew-symmetric");
    }
    return t;
  }

  // n = 2 convenience: [[0, v], [-v, 0]].
  static SkewMatrix two_torus(double v) {
    SkewMatrix t(2);
    t.set(0, 1, v);
    return t;
  }

  // theta * J for even n, J = [[0, I_N], [-I_N, 0]].
  static SkewMatrix symplectic(int n, double theta) {
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("SkewMatrix::symplectic: n must be even");
    SkewMatrix t(n);
    const int half = n / 2;
    for (int j = 0; j < half; ++j) t.set(j, half + j, theta);
    return t;
  }

  int dim() const { return n_; }
  double operator()(int j, int k) const { return e_[idx(j, k)]; }

  // Sets entry (j,k) and mirrors -value into (k,j).
  void set(int j, int k, double v) {
    if (j == k && v != 0.0)
      throw std::invalid_argument("SkewMatrix: diagonal must stay zero");
    e_[idx(j, k)] = v;
    e_[idx(k, j)] = -v;
  }

  bool operator==(const SkewMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const SkewMatrix& o) const { return !(*this == o); }

  // v = Theta^T r, so that r . Theta s = v . s for any s.
  std::vector<double> transpose_times(const std::vector<int>& r) const {
    std::vector<double> v(static_cast<std::size_t>(n_), 0.0);
    for (int k = 0; k < n_; ++k) {
      double acc = 0.0;
      for (int j = 0; j < n_; ++j) acc += r[static_cast<std::size_t>(j)] * (*this)(j, k);
      v[static_cast<std::size_t>(k)] = acc;
    }
    return v;
  }

  // r . Theta s.
  double bilinear(const std::vector<int>& r, const std::vector<int>& s) const {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        acc += r[static_cast<std::size_t>(j)] * (*this)(j, k) * s[static_cast<std::size_t>(k)];
    return acc;
  }

 private:
  std::size_t idx(int j, int k) const {
    return static_cast<std::size_t>(j) * n_ + k;
  }

  int n_;
  std::vector<double> e_;
};

}  // namespace nct
