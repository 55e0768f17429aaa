#pragma once

// Exact rational polyhedral cone geometry: dual description, primitive ray
// generators, the full face lattice with orthogonal faces D* = sigma cap
// D-perp, and relative-interior queries.  Cones must be pointed and
// full-dimensional.  Dense double-description-by-enumeration; desk scale
// (the subset enumeration walls out around ambient rank 8).

#include <string>
#include <vector>

#include "semifrob/exact_linalg.hpp"

namespace semifrob {

/// One face D of the cone, keyed by the set of dual rays vanishing on it.
struct Face {
    int id = -1;
    std::vector<int> zero_set;           // dual-ray indices with D in v_rho-perp (maximal such set)
    std::vector<int> generator_indices;  // input generators lying on D (the stable document key)
    std::vector<int> ray_indices;        // extremal rays of the cone lying on D
    Sublattice span_lattice;             // M cap <D>, saturated
    int dim = 0;
    std::vector<IntVec> star_rays;       // primitive extremal rays of D* = sigma cap D-perp
};

class FaceLatticeCone {
public:
    Eigen::Index ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& dual_rays() const { return dual_rays_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const;
    int face_count() const { return static_cast<int>(faces_.size()); }
    int top() const { return top_; }      // the cone itself
    int bottom() const { return bottom_; }  // {0}

    Int height(const IntVec& x, int dual_ray) const;
    Rat height(const RatVec& x, int dual_ray) const;

    bool in_cone(const RatVec& u) const;

    /// u in D and pairing > 0 against every dual ray outside D's zero set.
    bool relative_interior_contains(int face_id, const RatVec& u) const;

    /// The face whose relative interior contains u; u must lie in the cone.
    int smallest_face_containing(const RatVec& u) const;

    /// True when some extremal ray v of D* has <a, v> greater than zero
    /// (equivalently, when any element of D* does).
    bool star_has_positive_pairing(int face_id, const RatVec& a) const;

    bool face_leq(int a, int b) const;  // face a contained in face b
    int meet(int a, int b) const;       // intersection of two faces

    /// The face cut out by the given dual rays' hyperplanes.
    int face_cut_by(const std::vector<int>& dual_ray_subset) const;

    /// Smallest face containing all the given faces; {0} for an empty list.
    int join(const std::vector<int>& face_ids) const;

    /// Face containing u as its smallest face, or -1 when u is outside.
    int try_smallest_face(const RatVec& u) const;

private:
    friend FaceLatticeCone build_cone(const std::vector<IntVec>& generators);

    void check_face(int id) const;

    Eigen::Index ambient_rank_ = 0;
    std::vector<IntVec> generators_;
    std::vector<IntVec> rays_;
    std::vector<IntVec> dual_rays_;
    std::vector<Face> faces_;
    std::vector<unsigned long> zero_mask_;  // per face, bit per dual ray
    int top_ = -1;
    int bottom_ = -1;
};

/// Builds the dual description and the full face poset from generators.
FaceLatticeCone build_cone(const std::vector<IntVec>& generators);

/// Extremal rays of { v : <g, v> >= 0 for all g }, assuming the g span.
/// Primitive, deduplicated, lexicographically sorted.
std::vector<IntVec> dual_extremal_rays(const std::vector<IntVec>& vectors, Eigen::Index ambient_rank);

/// "{0}", "C", or the angle-bracket list of primitive rays of the face.
std::string face_label(const FaceLatticeCone& cone, int face_id);

} // namespace semifrob
