#include "nct/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace nct::oracle {

TorusElement dense_star_oracle(const TorusElement& a, const TorusElement& b) {
  if (a.theta() != b.theta())
    throw std::invalid_argument("dense_star_oracle: deformation matrices differ");
  TorusElement out(a.theta());
  for (const auto& [r, av] : a.coeffs())
    for (const auto& [s, bv] : b.coeffs()) {
      const double angle = -M_PI * a.theta().bilinear(r, s);
      const cplx phase = std::exp(cplx{0.0, angle});
      out.add(lattice_add(r, s), av * bv * phase);
    }
  return out;
}

TorusElement sample_and_multiply(const TorusElement& a, const TorusElement& b,
                                 int grid_size) {
  const int n = a.dim();
  if (a.theta() != SkewMatrix::zero(n) || b.theta() != SkewMatrix::zero(a.dim()))
    throw std::invalid_argument("sample_and_multiply: requires theta = 0");
  int max_out = 0;
  auto widen = [&max_out](const TorusElement& e) {
    int m = 0;
    for (const auto& [k, v] : e.coeffs())
      for (int c : k) m = std::max(m, std::abs(c));
    return m;
  };
  max_out = widen(a) + widen(b);
  if (grid_size < 2 * max_out + 1)
    throw std::invalid_argument("sample_and_multiply: grid below Nyquist rate");

  const std::size_t total = [&] {
    std::size_t t = 1;
    for (int i = 0; i < n; ++i) t *= static_cast<std::size_t>(grid_size);
    return t;
  }();

  auto grid_point = [&](std::size_t flat) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] =
          static_cast<double>(flat % static_cast<std::size_t>(grid_size)) /
          static_cast<double>(grid_size);
      flat /= static_cast<std::size_t>(grid_size);
    }
    return x;
  };

  auto synthesize = [&](const TorusElement& e) {
    GridFunction g{n, grid_size, std::vector<cplx>(total, cplx{0.0, 0.0})};
    for (std::size_t j = 0; j < total; ++j) {
      const std::vector<double> x = grid_point(j);
      cplx acc{0.0, 0.0};
      for (const auto& [k, v] : e.coeffs()) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i)
          dot += x[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)];
        acc += v * std::polar(1.0, 2.0 * M_PI * dot);
      }
      g.samples[j] = acc;
    }
    return g;
  };

  const GridFunction fa = synthesize(a);
  const GridFunction fb = synthesize(b);
  std::vector<cplx> prod(total);
  for (std::size_t j = 0; j < total; ++j) prod[j] = fa.samples[j] * fb.samples[j];

  // Recover coefficients on the box |p_i| <= max_out by the discrete
  // transform; adequate sampling makes this exact up to roundoff.
  TorusElement out(a.theta());
  LatticeIndex p(static_cast<std::size_t>(n), -max_out);
  while (true) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < total; ++j) {
      const std::vector<double> x = grid_point(j);
      double dot = 0.0;
      for (int i = 0; i < n; ++i)
        dot += x[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
      acc += prod[j] * std::polar(1.0, -2.0 * M_PI * dot);
    }
    out.set(p, acc / static_cast<double>(total), 1e-14);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++p[static_cast<std::size_t>(i)] <= max_out) break;
      p[static_cast<std::size_t>(i)] = -max_out;
    }
    if (i < 0) break;
  }
  return out;
}

TorusElement brute_group_average(const TorusElement& a,
                                 const CoveringSpec& spec) {
  if (a.theta() != spec.cover_theta)
    throw std::invalid_argument("brute_group_average: element not on the cover");
  if (spec.deck_order() > kMaxDeckOrder)
    throw std::invalid_argument("brute_group_average: deck group too large");
  TorusElement out(spec.cover_theta);
  std::int64_t order = 0;
  for_each_deck(spec, [&](const DeckElement& g) {
    ++order;
    for (const auto& [l, v] : a.coeffs()) {
      double frac = 0.0;
      for (std::size_t j = 0; j < spec.k.size(); ++j)
        frac += static_cast<double>(g[j]) * static_cast<double>(l[j]) /
                static_cast<double>(spec.k[j]);
      out.add(l, v * std::polar(1.0, 2.0 * M_PI * frac));
    }
  });
  TorusElement scaled(spec.cover_theta);
  for (const auto& [l, v] : out.coeffs())
    scaled.set(l, v / static_cast<double>(order));
  return scaled;
}

}  // namespace nct::oracle
