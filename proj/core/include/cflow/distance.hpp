#pragma once

#include "cflow/anisotropy.hpp"
#include "cflow/fields.hpp"

namespace cflow {

/// Finite stand-in for infinite distances: twice the polar diameter of the
/// grid. Consumers treat |d| >= distance_cap/2 as "empty side".
double distance_cap(const Grid& g, const Anisotropy& a);

/// Signed polar distance between cell centers: positive outside the mask
/// (minimum over the mask's boundary layer), negative inside (minimum over
/// the complement's boundary layer), so that {d <= 0} equals the mask
/// exactly. Empty mask gives +cap everywhere, full mask -cap.
ScalarField signed_distance(const SetMask& mask, const Anisotropy& a);

/// Sup-norm gap between the signed distance fields of two masks on the
/// same grid; zero if and only if the masks are equal.
double hausdorff_gap(const SetMask& A, const SetMask& B, const Anisotropy& a);
double hausdorff_gap(const ScalarField& dA, const ScalarField& dB);

/// Minimum polar distance from mask cells to the outermost cell layer of
/// the grid; +cap when the mask is empty.
double margin_distance(const SetMask& mask, const Anisotropy& a);

/// min over cells of A of the polar distance to B's complement; +cap when
/// A is empty or B is full. A and B must share a grid.
double set_to_complement_distance(const SetMask& A, const SetMask& B,
                                  const Anisotropy& a);

}  // namespace cflow
