#pragma once

#include <string>
#include <vector>

#include "cflow/fields.hpp"
#include "cflow/vec.hpp"

namespace cflow {

/// Surface tension: a norm phi on R^N together with its polar phi°.
///
/// Crystalline norms are represented by the vertex set V of the unit ball
/// {phi <= 1} = conv(V). The polar is then the support function
/// phi°(z) = max_{v in V} v.z, and phi itself is evaluated through the
/// precomputed vertex set of the polar ball, phi(x) = max_{w in W} w.x.
/// `Cylinder` covers phi(v) = |v'| + |v_3| in 3D, whose unit ball is a
/// solid of revolution rather than a polytope.
class Anisotropy {
 public:
  enum class Kind { Euclidean, CrystallinePolytope, Cylinder };

  static Anisotropy euclidean(int dim);
  static Anisotropy ell1(int dim);
  static Anisotropy ellinf(int dim);
  /// Regular 2m-gon in the plane, vertices at angles k*pi/m.
  static Anisotropy regular_polygon(int m);
  /// phi(v) = |(v1,v2)| + |v3|; the unit ball of the polar is a cylinder.
  static Anisotropy cylinder();
  /// Crystalline norm from an explicit vertex list. Missing opposite
  /// vertices are added; `completed_symmetry` reports whether that happened.
  static Anisotropy from_vertices(int dim, std::vector<Vec> vertices,
                                  bool* completed_symmetry = nullptr);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& polar_vertices() const { return polar_vertices_; }

  /// The norm itself. Total, 1-homogeneous, even.
  double phi(Vec x) const;
  /// The polar norm sup{eta.z : phi(eta) <= 1}.
  double polar(Vec z) const;

  /// Euclidean projection onto {xi : polar(xi) <= 1}. Closed form for
  /// Euclidean / box-shaped / cylinder constraint sets, cyclic halfspace
  /// projections otherwise; `converged` (optional) reports whether the
  /// iterative path met its tolerance.
  Vec project_dual(Vec z, double tol = 1e-10, bool* converged = nullptr) const;

  /// Projection restricted to a coordinate subspace: components with
  /// active[d] == false are assumed zero in z and stay zero.
  Vec project_dual_slice(Vec z, std::array<bool, 3> active, double tol,
                         bool* converged = nullptr) const;

  /// Membership test xi in subdifferential of phi at eta, within tol:
  /// polar(xi) <= 1 + tol and |xi.eta - phi(eta)| <= tol*max(1, phi(eta)).
  bool subdiff_contains(Vec eta, Vec xi, double tol) const;

  /// Lower/upper Euclidean comparison constants: c1*|v| <= polar(v) <= c2*|v|.
  double polar_lower_ratio() const { return c_lower_; }
  double polar_upper_ratio() const { return c_upper_; }

  std::string describe() const;

 private:
  Anisotropy() = default;
  void finalize_polytope();

  Kind kind_ = Kind::Euclidean;
  int dim_ = 2;
  std::vector<Vec> vertices_;        // V: unit ball vertices (polytope kind)
  std::vector<Vec> polar_vertices_;  // W: vertices of {polar <= 1}
  bool dual_is_box_ = false;
  Vec box_halfwidth_{1, 1, 1};
  double c_lower_ = 1.0;
  double c_upper_ = 1.0;
};

/// Cells whose center x satisfies polar(x - center) <= R.
/// Throws if the shape does not keep `min_clearance` of polar distance
/// to the boundary cell layers of the grid.
SetMask wulff_mask(const Anisotropy& a, const Grid& g, Vec center, double R,
                   double min_clearance = -1.0);

/// polar diameter of a unit cell, in units of the spacing:
/// max over sign patterns s of polar(s), s in {-1,1}^N.
double cell_polar_diameter(const Anisotropy& a);

}  // namespace cflow
