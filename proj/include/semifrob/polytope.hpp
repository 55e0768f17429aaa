#pragma once

// Exact convex-polytope utilities used by the volume and lattice-point
// counting routines: vertex enumeration from an H-description, boundary
// triangulation, volume, and integer-point enumeration.  Dense, desk-scale
// algorithms over rationals.

#include <vector>

#include "semifrob/exact_linalg.hpp"

namespace semifrob {

/// { x in Q^d : A x <= b }.  Assumed bounded by the callers.
struct HPolytope {
    RatMat a;
    RatVec b;

    Eigen::Index dim() const { return a.cols(); }
    bool contains(const RatVec& x) const;
};

/// All vertices, deduplicated and sorted lexicographically.
std::vector<RatVec> enumerate_vertices(const HPolytope& p);

/// Volume of a full-dimensional bounded polytope, computed from a star
/// triangulation of the boundary anchored at the lexicographically least
/// vertex.  Returns 0 when the vertex set is not full-dimensional.
Rat polytope_volume(const HPolytope& p);

/// All integer points of a bounded polytope, sorted lexicographically.
std::vector<IntVec> integer_points(const HPolytope& p);

} // namespace semifrob
