#include "cflow/anisotropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cflow {

namespace {

constexpr double kGeomTol = 1e-9;

Vec cross(Vec a, Vec b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool near(Vec a, Vec b, double tol) { return norm_inf(a - b) <= tol; }

int rank_of(const std::vector<Vec>& vs, int dim) {
  // Gram-Schmidt over the vertex directions.
  std::vector<Vec> basis;
  for (Vec v : vs) {
    for (const Vec& b : basis) v = v - dot(v, b) * b;
    double n = norm2(v);
    if (n > 1e-10) {
      basis.push_back((1.0 / n) * v);
      if (int(basis.size()) == dim) break;
    }
  }
  return int(basis.size());
}

}  // namespace

Anisotropy Anisotropy::euclidean(int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("anisotropy dim must be 2 or 3");
  Anisotropy a;
  a.kind_ = Kind::Euclidean;
  a.dim_ = dim;
  a.c_lower_ = 1.0;
  a.c_upper_ = 1.0;
  return a;
}

Anisotropy Anisotropy::ell1(int dim) {
  std::vector<Vec> v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  if (dim == 3) {
    v.push_back({0, 0, 1});
    v.push_back({0, 0, -1});
  }
  return from_vertices(dim, v);
}

Anisotropy Anisotropy::ellinf(int dim) {
  std::vector<Vec> v;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      if (dim == 2) {
        v.push_back({double(sx), double(sy), 0});
      } else {
        for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
      }
    }
  return from_vertices(dim, v);
}

Anisotropy Anisotropy::regular_polygon(int m) {
  if (m < 2) throw std::invalid_argument("regular polygon needs m >= 2");
  std::vector<Vec> v;
  for (int k = 0; k < 2 * m; ++k) {
    double th = k * std::numbers::pi / m;
    v.push_back({std::cos(th), std::sin(th), 0});
  }
  return from_vertices(2, v);
}

Anisotropy Anisotropy::cylinder() {
  Anisotropy a;
  a.kind_ = Kind::Cylinder;
  a.dim_ = 3;
  a.c_lower_ = 1.0 / std::sqrt(2.0);
  a.c_upper_ = 1.0;
  return a;
}

Anisotropy Anisotropy::from_vertices(int dim, std::vector<Vec> vertices,
                                     bool* completed_symmetry) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("anisotropy dim must be 2 or 3");
  if (vertices.empty()) throw std::invalid_argument("vertex list is empty");
  if (completed_symmetry) *completed_symmetry = false;
  double scale = 0.0;
  for (const Vec& v : vertices) {
    if (dim == 2 && std::abs(v.z) > kGeomTol)
      throw std::invalid_argument("2D anisotropy vertex has a third component");
    scale = std::max(scale, norm_inf(v));
  }
  if (scale <= 0.0) throw std::invalid_argument("vertex set is degenerate");
  const double tol = kGeomTol * std::max(1.0, scale);

  // Deduplicate, then complete the even symmetry.
  std::vector<Vec> vs;
  for (const Vec& v : vertices) {
    bool dup = false;
    for (const Vec& u : vs) dup = dup || near(u, v, tol);
    if (!dup) vs.push_back(v);
  }
  std::size_t base = vs.size();
  for (std::size_t i = 0; i < base; ++i) {
    bool found = false;
    for (const Vec& u : vs) found = found || near(u, -vs[i], tol);
    if (!found) {
      vs.push_back(-vs[i]);
      if (completed_symmetry) *completed_symmetry = true;
    }
  }

  if (rank_of(vs, dim) < dim)
    throw std::invalid_argument("vertex hull has empty interior; not a norm");

  Anisotropy a;
  a.kind_ = Kind::CrystallinePolytope;
  a.dim_ = dim;
  a.vertices_ = std::move(vs);
  a.finalize_polytope();
  return a;
}

void Anisotropy::finalize_polytope() {
  const double scale = [&] {
    double s = 1.0;
    for (const Vec& v : vertices_) s = std::max(s, norm2(v));
    return s;
  }();
  const double tol = kGeomTol * scale;

  // Enumerate supporting facet planes {w.x = 1}; their scaled normals are
  // the vertices of the polar ball {polar <= 1}.
  polar_vertices_.clear();
  auto try_plane = [&](Vec w) {
    for (const Vec& u : vertices_)
      if (dot(w, u) > 1.0 + tol * std::max(1.0, norm2(w))) return;
    for (const Vec& p : polar_vertices_)
      if (near(p, w, tol * std::max(1.0, norm2(w)))) return;
    polar_vertices_.push_back(w);
  };

  const std::size_t n = vertices_.size();
  if (dim_ == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec &p = vertices_[i], &q = vertices_[j];
        double det = p.x * q.y - p.y * q.x;
        if (std::abs(det) < tol * tol) continue;
        try_plane({(q.y - p.y) / det, (p.x - q.x) / det, 0});
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec nrm = cross(vertices_[j] - vertices_[i], vertices_[k] - vertices_[i]);
          double ln = norm2(nrm);
          if (ln < tol * tol) continue;
          double c = dot(nrm, vertices_[i]);
          if (std::abs(c) < tol * ln) continue;
          try_plane((1.0 / c) * nrm);
        }
  }
  if (polar_vertices_.size() < std::size_t(2 * dim_))
    throw std::invalid_argument("vertex hull has empty interior; not a norm");

  // Keep only extreme points: a vertex is a corner exactly when the sum of
  // its active facet normals separates it strictly from every other point.
  std::vector<Vec> extreme;
  for (const Vec& v : vertices_) {
    Vec wbar{};
    int active = 0;
    for (const Vec& w : polar_vertices_)
      if (dot(w, v) >= 1.0 - tol * std::max(1.0, norm2(w))) {
        wbar = wbar + w;
        ++active;
      }
    if (active == 0) continue;
    bool corner = true;
    const double sep = dot(wbar, v);
    for (const Vec& u : vertices_) {
      if (&u == &v) continue;
      if (dot(wbar, u) >= sep - tol * active) {
        corner = false;
        break;
      }
    }
    if (corner) extreme.push_back(v);
  }
  vertices_ = std::move(extreme);
  if (vertices_.size() < std::size_t(2 * dim_))
    throw std::invalid_argument("vertex hull has empty interior; not a norm");

  // Axis-aligned polar box (e.g. the dual of ell1): projection is a clamp.
  dual_is_box_ = true;
  Vec hw{0, 0, 0};
  for (const Vec& v : vertices_) {
    int nz = -1;
    for (int d = 0; d < dim_; ++d) {
      bool zero = std::abs(v[d]) <= tol;
      if (!zero) {
        if (nz >= 0) {
          nz = -2;
          break;
        }
        nz = d;
      }
    }
    if (nz < 0) {
      dual_is_box_ = false;
      break;
    }
    double b = 1.0 / std::abs(v[nz]);
    if (hw[nz] == 0.0)
      hw[nz] = b;
    else if (std::abs(hw[nz] - b) > tol)
      dual_is_box_ = false;
  }
  if (dual_is_box_) {
    for (int d = 0; d < dim_; ++d)
      if (hw[d] == 0.0) dual_is_box_ = false;
  }
  box_halfwidth_ = hw;

  c_upper_ = 0.0;
  for (const Vec& v : vertices_) c_upper_ = std::max(c_upper_, norm2(v));
  double wmax = 0.0;
  for (const Vec& w : polar_vertices_) wmax = std::max(wmax, norm2(w));
  c_lower_ = 1.0 / wmax;
}

double Anisotropy::phi(Vec x) const {
  switch (kind_) {
    case Kind::Euclidean:
      return norm2(x);
    case Kind::Cylinder:
      return std::hypot(x.x, x.y) + std::abs(x.z);
    case Kind::CrystallinePolytope: {
      double m = 0.0;
      for (const Vec& w : polar_vertices_) m = std::max(m, dot(w, x));
      return m;
    }
  }
  return 0.0;
}

double Anisotropy::polar(Vec z) const {
  switch (kind_) {
    case Kind::Euclidean:
      return norm2(z);
    case Kind::Cylinder:
      return std::max(std::hypot(z.x, z.y), std::abs(z.z));
    case Kind::CrystallinePolytope: {
      double m = 0.0;
      for (const Vec& v : vertices_) m = std::max(m, dot(v, z));
      return m;
    }
  }
  return 0.0;
}

Vec Anisotropy::project_dual(Vec z, double tol, bool* converged) const {
  return project_dual_slice(z, {true, true, true}, tol, converged);
}

Vec Anisotropy::project_dual_slice(Vec z, std::array<bool, 3> active, double tol,
                                   bool* converged) const {
  if (converged) *converged = true;
  // Inactive components are zero by contract; the closed forms below all
  // map zero components to zero, so only the halfspace path needs masking.
  switch (kind_) {
    case Kind::Euclidean: {
      double r = norm2(z);
      return r <= 1.0 ? z : (1.0 / r) * z;
    }
    case Kind::Cylinder: {
      double r = std::hypot(z.x, z.y);
      if (r > 1.0) {
        z.x /= r;
        z.y /= r;
      }
      z.z = std::clamp(z.z, -1.0, 1.0);
      return z;
    }
    case Kind::CrystallinePolytope:
      break;
  }
  if (dual_is_box_) {
    for (int d = 0; d < dim_; ++d) z[d] = std::clamp(z[d], -box_halfwidth_[d], box_halfwidth_[d]);
    return z;
  }
  if (polar(z) <= 1.0) return z;

  // Dykstra's cyclic projections onto the halfspaces {v.xi <= 1},
  // restricted to the active coordinate subspace.
  constexpr int kMaxSweeps = 200;
  const std::size_t n = vertices_.size();
  std::vector<Vec> nrm(n);
  std::vector<double> vv(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = vertices_[i];
    for (int d = 0; d < 3; ++d)
      if (!active[d]) v[d] = 0.0;
    nrm[i] = v;
    vv[i] = dot(v, v);
  }
  std::vector<Vec> corr(n, Vec{});
  Vec x = z;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      if (vv[i] <= kGeomTol * kGeomTol) continue;
      Vec y = x + corr[i];
      double viol = dot(nrm[i], y) - 1.0;
      Vec xn = viol > 0.0 ? y - (viol / vv[i]) * nrm[i] : y;
      corr[i] = y - xn;
      x = xn;
    }
    if (polar(x) - 1.0 <= tol) return x;
  }
  if (converged) *converged = false;
  return x;
}

bool Anisotropy::subdiff_contains(Vec eta, Vec xi, double tol) const {
  if (tol < 0) throw std::invalid_argument("subdiff tolerance must be >= 0");
  if (polar(xi) > 1.0 + tol) return false;
  double p = phi(eta);
  return std::abs(dot(xi, eta) - p) <= tol * std::max(1.0, p);
}

std::string Anisotropy::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Euclidean:
      os << "euclidean(" << dim_ << ")";
      break;
    case Kind::Cylinder:
      os << "cylinder(3)";
      break;
    case Kind::CrystallinePolytope:
      os << "polytope(" << dim_ << ", " << vertices_.size() << " vertices)";
      break;
  }
  return os.str();
}

SetMask wulff_mask(const Anisotropy& a, const Grid& g, Vec center, double R,
                   double min_clearance) {
  if (!(R > 0.0)) throw std::invalid_argument("wulff radius must be > 0");
  if (a.dim() != g.dim) throw std::invalid_argument("anisotropy/grid dimension mismatch");
  if (min_clearance < 0.0) min_clearance = 4.0 * g.spacing;
  for (int d = 0; d < g.dim; ++d) {
    Vec e{};
    e[d] = 1.0;
    const double plane_rate = a.phi(e);  // polar distance to {x_d = b} is |x_d - b|/phi(e_d)
    double lo = (center[d] - g.low(d)) / plane_rate;
    double hi = (g.high(d) - center[d]) / plane_rate;
    if (std::min(lo, hi) - R < min_clearance)
      throw std::invalid_argument("wulff shape does not fit inside the grid margin");
  }
  SetMask m(g);
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  std::size_t idx = 0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx)
        m.inside[idx] = a.polar(g.center(i, j, k) - center) <= R ? 1 : 0;
  return m;
}

double cell_polar_diameter(const Anisotropy& a) {
  double m = 0.0;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      if (a.dim() == 2) {
        m = std::max(m, a.polar({double(sx), double(sy), 0}));
      } else {
        for (int sz : {-1, 1})
          m = std::max(m, a.polar({double(sx), double(sy), double(sz)}));
      }
    }
  return m;
}

}  // namespace cflow
