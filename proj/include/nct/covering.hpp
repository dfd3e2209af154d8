#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nct/element.hpp"
#include "nct/operators.hpp"

namespace nct {

// Finite-fold covering data: multiplicities, base deformation and the
// canonical cover deformation cover(r,s) = base(r,s) / (k_r k_s). Only the
// canonical cover is supported; the integer offsets allowed by the
// exponentiated compatibility relation would need a compensating gauge for
// the half-angle twist, so they are rejected on input.
struct CoveringSpec {
  std::vector<int> k;
  SkewMatrix base_theta;
  SkewMatrix cover_theta;

  int dim() const { return base_theta.dim(); }
  std::int64_t deck_order() const {
    std::int64_t o = 1;
    for (int kj : k) o *= kj;
    return o;
  }
};

// Largest deck group enumerated by group sums; larger requests are rejected.
inline constexpr std::int64_t kMaxDeckOrder = 10000;

// Deck transformation: residues mod (k_1, ..., k_n).
using DeckElement = std::vector<int>;

CoveringSpec make_covering(const SkewMatrix& base_theta,
                           const std::vector<int>& k);

// Validates an externally supplied spec (exact compatibility of the
// exponentiated relation within tol, canonical form required).
void validate_covering(const CoveringSpec& spec, double tol = 1e-13);

// Phase of g = (p_1..p_n) acting on the cover mode l:
// e^{2 pi i sum_j p_j l_j / k_j}, computed with exact rational reduction so
// that invariant modes pick up exactly 1.
cplx deck_phase(const DeckElement& g, const LatticeIndex& l,
                const std::vector<int>& k);

// Enumerates the deck group in lexicographic residue order.
void for_each_deck(const CoveringSpec& spec,
                   const std::function<void(const DeckElement&)>& f);

// Generator raising: base mode l maps to cover mode (k_1 l_1, ..., k_n l_n).
TorusElement embed(const TorusElement& a, const CoveringSpec& spec);

// Deck action: coefficient at l times deck_phase(g, l).
TorusElement deck_action(const DeckElement& g, const TorusElement& a,
                         const CoveringSpec& spec);

// Group average (1/|G|) sum_g g(a). Equals the exact support filter onto
// modes with k_j | l_j, which is how it is computed; the literal phase sum
// lives in the oracle module.
TorusElement invariant_projection(const TorusElement& a,
                                  const CoveringSpec& spec);

// Module inner product sum_g g(a* b), returned as a base-torus element
// (indices divided by k). Throws if the group sum leaves mass off the
// k-multiples lattice beyond `residue_tol`.
TorusElement module_inner(const TorusElement& a, const TorusElement& b,
                          const CoveringSpec& spec, double residue_tol = 1e-13);

// Formal connection value: one coefficient element per axis, representing
// sum_mu comps[mu] (x) gamma^mu.
struct ConnectionValue {
  SkewMatrix cover_theta;
  std::vector<TorusElement> comps;
};

// Connection on cover modes: axis mu component carries (l_mu / k_mu) a(l).
ConnectionValue connection_apply(const TorusElement& a,
                                 const CoveringSpec& spec);

// Max residual of equivariance: |nabla(g a) - g nabla(a)| over all deck
// elements, axes and coefficients.
double equivariance_check(const TorusElement& a, const CoveringSpec& spec);

// Max residual of the fixed-point property of group averaging applied to
// the connection itself: (1/|G|) sum_g g^{-1}(nabla(g a)) vs nabla(a).
double connection_average_residual(const TorusElement& a,
                                   const CoveringSpec& spec);

// Block-diagonal lifted Dirac operator: block sum_mu (l_mu / k_mu) gamma^mu
// at cover lattice point l. Hermitian.
TruncatedOperator lifted_dirac_matrix(const CoveringSpec& spec,
                                      const TruncationWindow& window);

// Materializes a connection value as sum_mu represent(comps[mu]) x gamma^mu.
TruncatedOperator materialize_connection(const ConnectionValue& cv,
                                         const TruncationWindow& window);

// Covering tower theta -> theta/m_1^2 -> theta/m_2^2 -> ... with
// m_j = p_1 ... p_j and uniform multiplicities (p_j, ..., p_j) per step.
// base_theta must be theta * J (even n).
std::vector<CoveringSpec> tower_build(const SkewMatrix& base_theta,
                                      const std::vector<int>& primes);

// |G(to | from)| for a tower built from `primes`: product of p_j^n over
// steps from < j <= to.
std::int64_t tower_group_order(const std::vector<int>& primes, int n, int from,
                               int to);

}  // namespace nct
