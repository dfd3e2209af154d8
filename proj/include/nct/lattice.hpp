#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nct {

// Frequency lattice point in Z^n.
using LatticeIndex = std::vector<int>;

inline LatticeIndex lattice_add(const LatticeIndex& a, const LatticeIndex& b) {
  LatticeIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline LatticeIndex lattice_neg(const LatticeIndex& a) {
  LatticeIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Box truncation |k_j| <= radius on every axis, enumerated in lexicographic
// order (first axis most significant, each coordinate ascending). The flat
// index of this enumeration fixes the basis order of every truncated
// operator, so two runs always produce identical matrices.
class TruncationWindow {
 public:
  TruncationWindow(int dim, int radius) : n_(dim), r_(radius) {
    if (dim < 1) throw std::invalid_argument("TruncationWindow: dim must be >= 1");
    if (radius < 1) throw std::invalid_argument("TruncationWindow: radius must be >= 1");
    std::size_t c = 1;
    for (int i = 0; i < dim; ++i) c *= static_cast<std::size_t>(2 * radius + 1);
    count_ = c;
  }

  int dim() const { return n_; }
  int radius() const { return r_; }
  std::size_t size() const { return count_; }

  bool contains(const LatticeIndex& k) const {
    if (static_cast<int>(k.size()) != n_) return false;
    for (int v : k)
      if (v < -r_ || v > r_) return false;
    return true;
  }

  std::size_t flat_index(const LatticeIndex& k) const {
    std::size_t idx = 0;
    const std::size_t side = static_cast<std::size_t>(2 * r_ + 1);
    for (int i = 0; i < n_; ++i)
      idx = idx * side + static_cast<std::size_t>(k[static_cast<std::size_t>(i)] + r_);
    return idx;
  }

  LatticeIndex point(std::size_t idx) const {
    LatticeIndex k(static_cast<std::size_t>(n_));
    const std::size_t side = static_cast<std::size_t>(2 * r_ + 1);
    for (int i = n_ - 1; i >= 0; --i) {
      k[static_cast<std::size_t>(i)] = static_cast<int>(idx % side) - r_;
      idx /= side;
    }
    return k;
  }

  // Visits all points in enumeration order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < count_; ++i) f(point(i));
  }

 private:
  int n_;
  int r_;
  std::size_t count_;
};

}  // namespace nct
