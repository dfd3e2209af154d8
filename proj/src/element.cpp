#include "nct/element.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nct/kernels.hpp"

namespace nct {

namespace {

// Splitmix-style portable uniform in [0, 1); keeps random_element
// reproducible across standard libraries.
double next_unit(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// lambda^m for |lambda| = 1 via angle multiplication; exact at m = 0 and
// free of cumulative drift for large |m|.
cplx unit_pow(cplx lambda, long long m) {
  const double t = std::arg(lambda) / M_PI;
  return unit_phase(static_cast<double>(m) * t);
}

struct DenseRow {
  std::vector<int> prefix;  // all but the last coordinate
  int lo = 0;
  std::vector<double> re, im;
};

}  // namespace

double TorusElement::max_coeff_distance(const TorusElement& o) const {
  double worst = 0.0;
  for (const auto& [k, v] : c_) worst = std::max(worst, std::abs(v - o.at(k)));
  for (const auto& [k, v] : o.c_) worst = std::max(worst, std::abs(v - at(k)));
  return worst;
}

TorusElement make_unitary(const LatticeIndex& k, const SkewMatrix& theta) {
  if (static_cast<int>(k.size()) != theta.dim())
    throw std::invalid_argument("make_unitary: index dimension mismatch");
  TorusElement u(theta);
  u.set(k, cplx{1.0, 0.0});
  return u;
}

TorusElement identity_element(const SkewMatrix& theta) {
  return make_unitary(LatticeIndex(static_cast<std::size_t>(theta.dim()), 0),
                      theta);
}

TorusElement generator(int axis, const SkewMatrix& theta) {
  if (axis < 0 || axis >= theta.dim())
    throw std::invalid_argument("generator: axis out of range");
  LatticeIndex k(static_cast<std::size_t>(theta.dim()), 0);
  k[static_cast<std::size_t>(axis)] = 1;
  return make_unitary(k, theta);
}

TorusElement star_product(const TorusElement& a, const TorusElement& b,
                          double prune) {
  if (a.theta() != b.theta())
    throw std::invalid_argument("star_product: deformation matrices differ");
  const int n = a.dim();
  TorusElement out(a.theta());
  if (a.coeffs().empty() || b.coeffs().empty()) return out;

  // Dense rows of b along the last axis, grouped by prefix. Holes inside a
  // row are zero-filled; the kernel walks each row contiguously while the
  // twist phase advances by a constant rotation per step.
  std::map<std::vector<int>, std::pair<int, int>> row_span;
  for (const auto& [s, v] : b.coeffs()) {
    std::vector<int> pre(s.begin(), s.end() - 1);
    const int last = s.back();
    auto [it, fresh] = row_span.emplace(std::move(pre), std::make_pair(last, last));
    if (!fresh) {
      it->second.first = std::min(it->second.first, last);
      it->second.second = std::max(it->second.second, last);
    }
  }
  std::vector<DenseRow> rows;
  rows.reserve(row_span.size());
  for (const auto& [pre, span] : row_span) {
    DenseRow r;
    r.prefix = pre;
    r.lo = span.first;
    r.re.assign(static_cast<std::size_t>(span.second - span.first + 1), 0.0);
    r.im.assign(r.re.size(), 0.0);
    rows.push_back(std::move(r));
  }
  {
    std::size_t ri = 0;
    for (const auto& [pre, span] : row_span) {
      DenseRow& r = rows[ri++];
      std::vector<int> key(pre);
      key.push_back(0);
      for (int s = span.first; s <= span.second; ++s) {
        key.back() = s;
        const cplx v = b.at(key);
        r.re[static_cast<std::size_t>(s - span.first)] = v.real();
        r.im[static_cast<std::size_t>(s - span.first)] = v.imag();
      }
    }
  }

  // Output panel: bounding box of the Minkowski sum of the supports.
  std::vector<int> omin(static_cast<std::size_t>(n),
                        std::numeric_limits<int>::max());
  std::vector<int> omax(static_cast<std::size_t>(n),
                        std::numeric_limits<int>::min());
  auto widen = [&](const LatticeIndex& r, const LatticeIndex& s) {
    for (int i = 0; i < n; ++i) {
      const int v = r[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(i)];
      omin[static_cast<std::size_t>(i)] = std::min(omin[static_cast<std::size_t>(i)], v);
      omax[static_cast<std::size_t>(i)] = std::max(omax[static_cast<std::size_t>(i)], v);
    }
  };
  {
    LatticeIndex amin(static_cast<std::size_t>(n)), amax(static_cast<std::size_t>(n));
    LatticeIndex bmin(static_cast<std::size_t>(n)), bmax(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      amin[static_cast<std::size_t>(i)] = std::numeric_limits<int>::max();
      amax[static_cast<std::size_t>(i)] = std::numeric_limits<int>::min();
      bmin[static_cast<std::size_t>(i)] = amin[static_cast<std::size_t>(i)];
      bmax[static_cast<std::size_t>(i)] = amax[static_cast<std::size_t>(i)];
    }
    for (const auto& [k, v] : a.coeffs())
      for (int i = 0; i < n; ++i) {
        amin[static_cast<std::size_t>(i)] = std::min(amin[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
        amax[static_cast<std::size_t>(i)] = std::max(amax[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
      }
    for (const auto& [k, v] : b.coeffs())
      for (int i = 0; i < n; ++i) {
        bmin[static_cast<std::size_t>(i)] = std::min(bmin[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
        bmax[static_cast<std::size_t>(i)] = std::max(bmax[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
      }
    widen(amin, bmin);
    widen(amax, bmax);
  }

  std::size_t prefix_count = 1;
  for (int i = 0; i + 1 < n; ++i)
    prefix_count *= static_cast<std::size_t>(omax[static_cast<std::size_t>(i)] -
                                             omin[static_cast<std::size_t>(i)] + 1);
  const std::size_t row_len =
      static_cast<std::size_t>(omax[static_cast<std::size_t>(n - 1)] -
                               omin[static_cast<std::size_t>(n - 1)] + 1);
  std::vector<double> pre_r(prefix_count * row_len, 0.0);
  std::vector<double> pre_i(prefix_count * row_len, 0.0);

  auto prefix_flat = [&](const std::vector<int>& r_pre,
                         const std::vector<int>& q_pre) {
    std::size_t idx = 0;
    for (int i = 0; i + 1 < n; ++i) {
      const std::size_t side = static_cast<std::size_t>(
          omax[static_cast<std::size_t>(i)] - omin[static_cast<std::size_t>(i)] + 1);
      idx = idx * side +
            static_cast<std::size_t>(r_pre[static_cast<std::size_t>(i)] +
                                     q_pre[static_cast<std::size_t>(i)] -
                                     omin[static_cast<std::size_t>(i)]);
    }
    return idx;
  };

  const auto& kn = kern::active();
  for (const auto& [r, ar] : a.coeffs()) {
    // phase exponent (units of pi): -(Theta^T r) . s, linear along the row
    const std::vector<double> v = a.theta().transpose_times(r);
    const double step = -v[static_cast<std::size_t>(n - 1)];
    const cplx rot = unit_phase(step);
    const std::vector<int> r_pre(r.begin(), r.end() - 1);
    const int r_last = r.back();
    for (const DenseRow& row : rows) {
      double t0 = 0.0;
      for (int i = 0; i + 1 < n; ++i)
        t0 -= v[static_cast<std::size_t>(i)] * row.prefix[static_cast<std::size_t>(i)];
      t0 += step * row.lo;
      const cplx scale = ar * unit_phase(t0);
      const std::size_t base = prefix_flat(r_pre, row.prefix) * row_len +
                               static_cast<std::size_t>(r_last + row.lo -
                                                        omin[static_cast<std::size_t>(n - 1)]);
      kn.rotated_axpy(pre_r.data() + base, pre_i.data() + base, row.re.data(),
                      row.im.data(), row.re.size(), scale.real(), scale.imag(),
                      rot.real(), rot.imag());
    }
  }

  // Sweep the panel back into a sparse map.
  LatticeIndex p(static_cast<std::size_t>(n));
  for (std::size_t pi = 0; pi < prefix_count; ++pi) {
    std::size_t rem = pi;
    for (int i = n - 2; i >= 0; --i) {
      const std::size_t side = static_cast<std::size_t>(
          omax[static_cast<std::size_t>(i)] - omin[static_cast<std::size_t>(i)] + 1);
      p[static_cast<std::size_t>(i)] =
          static_cast<int>(rem % side) + omin[static_cast<std::size_t>(i)];
      rem /= side;
    }
    for (std::size_t j = 0; j < row_len; ++j) {
      const cplx v{pre_r[pi * row_len + j], pre_i[pi * row_len + j]};
      if (std::abs(v) >= prune) {
        p[static_cast<std::size_t>(n - 1)] =
            static_cast<int>(j) + omin[static_cast<std::size_t>(n - 1)];
        out.set(p, v, prune);
      }
    }
  }
  return out;
}

TorusElement involution(const TorusElement& a) {
  TorusElement out(a.theta());
  for (const auto& [k, v] : a.coeffs()) out.set(lattice_neg(k), std::conj(v));
  return out;
}

cplx trace(const TorusElement& a) {
  return a.at(LatticeIndex(static_cast<std::size_t>(a.dim()), 0));
}

cplx gns_inner(const TorusElement& a, const TorusElement& b) {
  if (a.theta() != b.theta())
    throw std::invalid_argument("gns_inner: deformation matrices differ");
  return trace(star_product(involution(a), b));
}

TorusElement delta(const TorusElement& a, int mu) {
  if (mu < 0 || mu >= a.dim())
    throw std::invalid_argument("delta: axis out of range");
  TorusElement out(a.theta());
  for (const auto& [k, v] : a.coeffs())
    out.set(k, static_cast<double>(k[static_cast<std::size_t>(mu)]) * v);
  return out;
}

TorusElement bigraded_star(const TorusElement& x, const TorusElement& y,
                           cplx lambda) {
  if (x.dim() != 2 || y.dim() != 2)
    throw std::invalid_argument("bigraded_star: defined on the 2-torus only");
  TorusElement out(x.theta());
  for (const auto& [k, xv] : x.coeffs())
    for (const auto& [p, yv] : y.coeffs()) {
      const long long expo = static_cast<long long>(p[0]) * k[1];
      out.add(lattice_add(k, p), xv * yv * unit_pow(lambda, expo));
    }
  return out;
}

TorusElement cocycle_gauge(const TorusElement& a, double theta) {
  if (a.dim() != 2)
    throw std::invalid_argument("cocycle_gauge: defined on the 2-torus only");
  TorusElement out(a.theta());
  for (const auto& [k, v] : a.coeffs())
    out.set(k, v * unit_phase(theta * k[0] * k[1]));
  return out;
}

TorusElement random_element(const SkewMatrix& theta,
                            const TruncationWindow& window, double decay,
                            std::uint64_t seed) {
  if (decay <= 0.0) throw std::invalid_argument("random_element: decay must be > 0");
  if (window.dim() != theta.dim())
    throw std::invalid_argument("random_element: window/theta dimension mismatch");
  TorusElement out(theta);
  std::uint64_t state = seed;
  window.for_each([&](const LatticeIndex& k) {
    double norm2 = 0.0;
    for (int v : k) norm2 += static_cast<double>(v) * v;
    const double bound = std::pow(1.0 + std::sqrt(norm2), -decay);
    const double mag = next_unit(state) * bound;
    const double angle = 2.0 * next_unit(state);  // units of pi
    out.set(k, mag * unit_phase(angle));
  });
  return out;
}

}  // namespace nct
