#pragma once

#include <vector>

#include "nct/covering.hpp"
#include "nct/element.hpp"

// Brute-force reference implementations. These deliberately share no
// arithmetic path with the optimized operations they check: phases come from
// std::exp/std::polar instead of the reduced-phase helper, sums are plain
// double loops, and nothing here touches the kernel layer.

namespace nct::oracle {

// Direct double loop over support pairs of the twisted convolution.
TorusElement dense_star_oracle(const TorusElement& a, const TorusElement& b);

// Samples of a function on the uniform grid [0,1)^n.
struct GridFunction {
  int n;
  int grid_size;
  std::vector<cplx> samples;
};

// Synthesizes the (undeformed) elements on a uniform grid, multiplies
// pointwise and transforms back. Requires theta == 0 on both inputs and
// grid_size >= 2 * (max output frequency) + 1.
TorusElement sample_and_multiply(const TorusElement& a, const TorusElement& b,
                                 int grid_size);

// Literal deck-group average (1/|G|) sum_g g(a).
TorusElement brute_group_average(const TorusElement& a,
                                 const CoveringSpec& spec);

}  // namespace nct::oracle
