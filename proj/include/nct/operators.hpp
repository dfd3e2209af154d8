#pragma once

#include <vector>

#include "nct/element.hpp"
#include "nct/gamma.hpp"
#include "nct/lattice.hpp"
#include "nct/linalg.hpp"
#include "nct/matrix.hpp"

namespace nct {

// Operator on the truncated GNS space. Basis order is (lattice point in
// window enumeration order) x (spinor component); spinor_dim == 1 for the
// scalar sector.
struct TruncatedOperator {
  TruncationWindow window;
  std::size_t spinor_dim;
  CMatrix mat;

  std::size_t dim() const { return window.size() * spinor_dim; }
};

// Left multiplication by a on the truncated GNS space: entry (q, p) is
// a(q - p) e^{-i pi (q-p).Theta p}; shifts leaving the window are dropped.
TruncatedOperator represent(const TorusElement& a,
                            const TruncationWindow& window);

// represent(a) tensored with the identity on the spinor factor.
TruncatedOperator represent_spinor(const TorusElement& a,
                                   const TruncationWindow& window);

// Block-diagonal operator with block sum_mu k_mu gamma^mu at lattice point k.
// Hermitian by construction; does not depend on the deformation.
TruncatedOperator dirac_matrix(const TruncationWindow& window);

// x y - y x.
TruncatedOperator commutator(const TruncatedOperator& x,
                             const TruncatedOperator& y);

// [D, pi(a)] on the truncated space.
TruncatedOperator dirac_commutator(const TorusElement& a,
                                   const TruncationWindow& window);

// sum_mu represent(delta_mu(a)) x gamma^mu; equals dirac_commutator on
// interior columns.
TruncatedOperator commutator_from_derivations(const TorusElement& a,
                                              const TruncationWindow& window);

// Smooth-representation tower: level 0 is represent_spinor, level s+1 is the
// 2x2 block matrix [[pi_s, 0], [[D, pi_s], pi_s]] with D acting diagonally.
TruncatedOperator pi_s(const TorusElement& a, int s,
                       const TruncationWindow& window);

// Operator seminorm |a|_s = spectral norm of pi_s(a).
double seminorm_s(const TorusElement& a, int s, const TruncationWindow& window);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  int radius;
  int n;
  SkewMatrix theta;
};

// Eigenvalues of the truncated Dirac operator, sorted ascending. The value
// does not depend on theta; theta is carried through to the report.
SpectrumReport dirac_spectrum(const SkewMatrix& theta,
                              const TruncationWindow& window);

// Flat lattice indices of columns p such that k + p stays in the window for
// every shift k; operator identities are compared on these columns only,
// since truncation corrupts the boundary.
std::vector<std::size_t> interior_columns(const std::vector<LatticeIndex>& shifts,
                                          const TruncationWindow& window);

// Columns whose lattice point has every |p_j| <= interior_radius.
std::vector<std::size_t> interior_columns_radius(int interior_radius,
                                                 const TruncationWindow& window);

// Max |x - y| over the given lattice columns (all rows, all spinor slots).
double column_restricted_distance(const TruncatedOperator& x,
                                  const TruncatedOperator& y,
                                  const std::vector<std::size_t>& lattice_cols);

}  // namespace nct
