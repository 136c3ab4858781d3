#include "cflow/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cflow {

namespace {

// Candidate sites bucketed into coarse blocks so that whole blocks can be
// rejected against the current best via a Euclidean lower bound on polar.
struct CandidateIndex {
  std::vector<Vec> pos;
  struct Bucket {
    Vec lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max()};
    Vec hi{-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max(),
           -std::numeric_limits<double>::max()};
    std::vector<std::uint32_t> items;
  };
  std::vector<Bucket> buckets;

  void build(const Grid& g, const std::vector<std::uint32_t>& cells, int block) {
    const int nbx = (g.shape[0] + block - 1) / block;
    const int nby = (g.shape[1] + block - 1) / block;
    const int nbz = (g.shape[2] + block - 1) / block;
    buckets.assign(std::size_t(nbx) * nby * nbz, Bucket{});
    pos.reserve(cells.size());
    for (std::uint32_t c : cells) {
      auto co = g.coords(c);
      Vec p = g.center(c);
      std::size_t b =
          (std::size_t(co[2] / block) * nby + co[1] / block) * nbx + co[0] / block;
      Bucket& bk = buckets[b];
      bk.items.push_back(std::uint32_t(pos.size()));
      pos.push_back(p);
      for (int d = 0; d < 3; ++d) {
        bk.lo[d] = std::min(bk.lo[d], p[d]);
        bk.hi[d] = std::max(bk.hi[d], p[d]);
      }
    }
    std::erase_if(buckets, [](const Bucket& b) { return b.items.empty(); });
  }

  // Exact minimum of polar(x - y) over all candidates y.
  double min_polar(const Anisotropy& a, Vec x, std::uint32_t seed_hint) const {
    double best = seed_hint < pos.size()
                      ? a.polar(x - pos[seed_hint])
                      : std::numeric_limits<double>::max();
    const double c1 = a.polar_lower_ratio();
    for (const Bucket& bk : buckets) {
      double gap = 0.0;
      for (int d = 0; d < 3; ++d)
        gap = std::max(gap, std::max(bk.lo[d] - x[d], x[d] - bk.hi[d]));
      if (c1 * gap >= best) continue;
      for (std::uint32_t it : bk.items) {
        Vec v = x - pos[it];
        if (c1 * norm_inf(v) >= best) continue;
        best = std::min(best, a.polar(v));
      }
    }
    return best;
  }

  // Same minimum, also reporting an attaining candidate for seeding.
  double min_polar_track(const Anisotropy& a, Vec x, std::uint32_t& seed) const {
    double best = std::numeric_limits<double>::max();
    if (seed < pos.size()) best = a.polar(x - pos[seed]);
    const double c1 = a.polar_lower_ratio();
    for (const Bucket& bk : buckets) {
      double gap = 0.0;
      for (int d = 0; d < 3; ++d)
        gap = std::max(gap, std::max(bk.lo[d] - x[d], x[d] - bk.hi[d]));
      if (c1 * gap >= best) continue;
      for (std::uint32_t it : bk.items) {
        Vec v = x - pos[it];
        if (c1 * norm_inf(v) >= best) continue;
        double val = a.polar(v);
        if (val < best) {
          best = val;
          seed = it;
        }
      }
    }
    return best;
  }
};

}  // namespace

double distance_cap(const Grid& g, const Anisotropy& a) {
  Vec ext{(g.shape[0] - 1) * g.spacing, (g.shape[1] - 1) * g.spacing,
          g.dim == 3 ? (g.shape[2] - 1) * g.spacing : 0.0};
  double diam = 0.0;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1})
        diam = std::max(diam, a.polar({sx * ext.x, sy * ext.y, sz * ext.z}));
  return 2.0 * diam;
}

ScalarField signed_distance(const SetMask& mask, const Anisotropy& a) {
  const Grid& g = mask.grid;
  if (a.dim() != g.dim) throw std::invalid_argument("anisotropy/grid dimension mismatch");
  const double cap = distance_cap(g, a);
  const std::size_t cells = g.cell_count();
  const std::size_t n_inside = mask.count();
  if (n_inside == 0) return ScalarField(g, cap);
  if (n_inside == cells) return ScalarField(g, -cap);

  // Boundary layers: mask cells with a face neighbor outside, and outside
  // cells with a face neighbor in the mask.
  std::vector<std::uint32_t> layer_in, layer_out;
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  std::size_t idx = 0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx) {
        bool in = mask[idx];
        bool touches_other = false;
        for (int d = 0; d < g.dim && !touches_other; ++d) {
          const std::size_t s = g.stride(d);
          const int pos = d == 0 ? i : (d == 1 ? j : k);
          if (pos > 0 && mask[idx - s] != in) touches_other = true;
          if (pos < g.shape[d] - 1 && mask[idx + s] != in) touches_other = true;
        }
        if (!touches_other) continue;
        (in ? layer_in : layer_out).push_back(std::uint32_t(idx));
      }

  constexpr int kBlock = 32;
  CandidateIndex from_inside, from_outside;
  from_inside.build(g, layer_in, kBlock);
  from_outside.build(g, layer_out, kBlock);

  ScalarField d(g);
  constexpr std::uint32_t kNoSeed = std::uint32_t(-1);
  std::vector<std::uint32_t> col_seed_in(std::size_t(nx) * ny, kNoSeed);
  std::vector<std::uint32_t> col_seed_out(std::size_t(nx) * ny, kNoSeed);
  idx = 0;
  for (int k = 0; k < nz; ++k) {
    std::uint32_t row_seed_in = kNoSeed, row_seed_out = kNoSeed;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx) {
        const Vec x = g.center(i, j, k);
        const std::size_t col = std::size_t(j) * nx + i;
        if (mask[idx]) {
          std::uint32_t seed =
              col_seed_out[col] != kNoSeed ? col_seed_out[col] : row_seed_out;
          d.v[idx] = -from_outside.min_polar_track(a, x, seed);
          col_seed_out[col] = seed;
          row_seed_out = seed;
        } else {
          std::uint32_t seed =
              col_seed_in[col] != kNoSeed ? col_seed_in[col] : row_seed_in;
          d.v[idx] = from_inside.min_polar_track(a, x, seed);
          col_seed_in[col] = seed;
          row_seed_in = seed;
        }
      }
  }
  return d;
}

double hausdorff_gap(const SetMask& A, const SetMask& B, const Anisotropy& a) {
  if (A.grid != B.grid) throw std::invalid_argument("mask grids differ");
  return hausdorff_gap(signed_distance(A, a), signed_distance(B, a));
}

double hausdorff_gap(const ScalarField& dA, const ScalarField& dB) {
  return sup_diff(dA, dB);
}

double margin_distance(const SetMask& mask, const Anisotropy& a) {
  const Grid& g = mask.grid;
  if (mask.empty()) return distance_cap(g, a);
  double plane_rate[3] = {1, 1, 1};
  for (int d = 0; d < g.dim; ++d) {
    Vec e{};
    e[d] = 1.0;
    plane_rate[d] = a.phi(e);
  }
  double best = std::numeric_limits<double>::max();
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  std::size_t idx = 0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx) {
        if (!mask[idx]) continue;
        Vec x = g.center(i, j, k);
        for (int d = 0; d < g.dim; ++d) {
          double m = std::min(x[d] - g.low(d), g.high(d) - x[d]) / plane_rate[d];
          best = std::min(best, m);
        }
      }
  return best;
}

double set_to_complement_distance(const SetMask& A, const SetMask& B,
                                  const Anisotropy& a) {
  if (A.grid != B.grid) throw std::invalid_argument("mask grids differ");
  const double cap = distance_cap(A.grid, a);
  if (A.empty() || B.full()) return cap;
  ScalarField dB = signed_distance(B, a);
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < A.inside.size(); ++i)
    if (A[i]) best = std::min(best, std::max(0.0, -dB.v[i]));
  return best;
}

}  // namespace cflow
