#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "nct/lattice.hpp"
#include "nct/phase.hpp"
#include "nct/skew.hpp"

namespace nct {

// Default prune threshold: keep everything representable. Identities that
// are exact in exact arithmetic must not be perturbed by silent pruning.
inline constexpr double kDefaultPrune = 1e-300;

// Element of the deformed torus algebra: a finitely supported map from the
// frequency lattice Z^n to C, tied to its deformation matrix. The map is
// ordered lexicographically, which fixes the serialization order.
class TorusElement {
 public:
  using CoeffMap = std::map<LatticeIndex, cplx>;

  explicit TorusElement(SkewMatrix theta) : theta_(std::move(theta)) {}

  const SkewMatrix& theta() const { return theta_; }
  int dim() const { return theta_.dim(); }
  const CoeffMap& coeffs() const { return c_; }
  std::size_t support_size() const { return c_.size(); }

  cplx at(const LatticeIndex& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? cplx{0.0, 0.0} : it->second;
  }

  // Inserts/accumulates, dropping results below the prune threshold.
  void add(const LatticeIndex& k, cplx v, double prune = kDefaultPrune) {
    if (static_cast<int>(k.size()) != dim())
      throw std::invalid_argument("TorusElement: index dimension mismatch");
    auto it = c_.find(k);
    if (it == c_.end()) {
      if (std::abs(v) >= prune) c_.emplace(k, v);
    } else {
      it->second += v;
      if (std::abs(it->second) < prune) c_.erase(it);
    }
  }

  void set(const LatticeIndex& k, cplx v, double prune = kDefaultPrune) {
    if (static_cast<int>(k.size()) != dim())
      throw std::invalid_argument("TorusElement: index dimension mismatch");
    if (std::abs(v) >= prune)
      c_[k] = v;
    else
      c_.erase(k);
  }

  // Largest coefficient magnitude of the difference; the metric all
  // coefficientwise identity checks use.
  double max_coeff_distance(const TorusElement& o) const;

 private:
  SkewMatrix theta_;
  CoeffMap c_;
};

// Basis unitary U_k: single coefficient 1 at k.
TorusElement make_unitary(const LatticeIndex& k, const SkewMatrix& theta);

// Identity element U_0.
TorusElement identity_element(const SkewMatrix& theta);

// Generator u_j (j in [0, n)), the standard-basis unitary.
TorusElement generator(int axis, const SkewMatrix& theta);

// Twisted convolution: (a*b)(p) = sum_{r+s=p} a(r) b(s) e^{-i pi r.Theta s}.
// Rejects mismatched deformation matrices. Backed by the active kernels.
TorusElement star_product(const TorusElement& a, const TorusElement& b,
                          double prune = kDefaultPrune);

// a*(p) = conj(a(-p)).
TorusElement involution(const TorusElement& a);

// Tracial state: the coefficient at 0.
cplx trace(const TorusElement& a);

// GNS inner product tau(a* star b); positive-definite.
cplx gns_inner(const TorusElement& a, const TorusElement& b);

// Basis derivation along axis mu (0-based): result(p) = p_mu * a(p).
TorusElement delta(const TorusElement& a, int mu);

// Bigraded deformed product on the 2-torus (elements carry Theta = 0):
// contribution of the pair (k, p) lands at k+p with factor lambda^(p1*k2).
TorusElement bigraded_star(const TorusElement& x, const TorusElement& y,
                           cplx lambda);

// Gauge intertwiner between the twisted product at Theta = theta*J and the
// bigraded product with lambda = e^{2 pi i theta}: multiplies the
// coefficient at k by e^{+i pi theta k1 k2}. The sign of the exponent is
// frozen by the brute-force equivalence check in the test suite.
TorusElement cocycle_gauge(const TorusElement& a, double theta);

// Deterministic pseudo-random element supported on the window, with
// |coeff(k)| <= (1 + |k|)^(-decay).
TorusElement random_element(const SkewMatrix& theta,
                            const TruncationWindow& window, double decay,
                            std::uint64_t seed);

}  // namespace nct
