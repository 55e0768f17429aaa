#pragma once

// Seminormal affine monoids, represented intensionally as a pointed cone
// together with a sublattice M_D for every face D; the monoid is the union
// over faces of M_D restricted to the relative interior of D.  Construction
// validates monotonicity and finite index, precomputes face classification
// data, and is immutable afterwards.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semifrob/cone_geom.hpp"
#include "semifrob/frac_point.hpp"

namespace semifrob {

/// One face's classification at a prime p.
struct FaceClassificationRow {
    int face_id = -1;
    bool relatively_saturated = false;
    bool is_ruf = false;
    bool is_p_face = false;
    bool is_pruf = false;
    bool is_maximal_pruf = false;
    QuotientInvariants quotient;  // (M cap <D>) / M_D
};

struct FaceClassification {
    Int p;
    std::vector<FaceClassificationRow> rows;  // one per face, in face-id order
};

/// Face data given to from_face_data: a face named as the smallest face
/// containing `face_rays`, carrying the sublattice its interior points span.
struct FaceAssignment {
    std::vector<IntVec> face_rays;
    std::vector<IntVec> lattice_generators;
};

class SeminormalMonoid {
public:
    /// Builds the monoid from a cone plus explicit sublattices on some
    /// faces.  Unlisted faces receive the intersection of the lattices of
    /// the listed faces above them, which is the unique consistent
    /// completion.  Listing a face whose assignment turns out redundant is
    /// reported as a warning, not an error.
    static SeminormalMonoid from_face_data(const std::vector<IntVec>& cone_generators,
                                           const std::vector<FaceAssignment>& assignments);

    /// The seminormalization of the monoid generated by G.  The result
    /// equals the monoid generated by G exactly when that monoid is
    /// seminormal.  If G generates a proper sublattice of Z^n, everything
    /// is re-embedded into coordinates of that sublattice first.
    static SeminormalMonoid from_generators(const std::vector<IntVec>& generators);

    const FaceLatticeCone& cone() const { return cone_; }
    Eigen::Index ambient_rank() const { return cone_.ambient_rank(); }

    const Sublattice& face_lattice(int face_id) const;       // M_D
    const QuotientInvariants& quotient(int face_id) const;   // (M cap <D>)/M_D
    Int face_index(int face_id) const;                       // [M cap <D> : M_D]

    bool is_ruf(int face_id) const;
    const std::vector<int>& rufs() const { return rufs_; }
    std::vector<int> proper_rufs() const;

    /// The intersection of all relatively unsaturated faces (prime-independent).
    int fpure_face() const { return fpure_face_; }

    const std::vector<std::string>& warnings() const { return warnings_; }

    bool contains(const IntVec& u) const;
    bool contains_fractional(const FracPoint& u) const;

    FaceClassification classify(const Int& p) const;
    std::vector<int> p_faces(const Int& p) const;
    std::vector<int> maximal_prufs(const Int& p) const;
    bool is_F_split(const Int& p) const;

    /// Re-evaluates M_D = intersection over relatively unsaturated faces
    /// D' containing D of M_{D'} cap <D>; true for every face of a valid
    /// monoid.
    bool lattice_formula_check(int face_id) const;

    /// The unique minimal generating set (the irreducible elements),
    /// sorted lexicographically.  Computed on first use and cached.
    const std::vector<IntVec>& minimal_generators() const;

private:
    SeminormalMonoid() = default;
    void finalize();

    FaceLatticeCone cone_;
    std::vector<Sublattice> lattices_;            // by face id
    std::vector<QuotientInvariants> quotients_;   // by face id
    std::vector<bool> ruf_;                       // by face id
    std::vector<int> rufs_;                       // sorted ids
    int fpure_face_ = -1;
    std::vector<std::string> warnings_;

    struct GeneratorCache {
        std::once_flag once;
        std::vector<IntVec> gens;
    };
    std::unique_ptr<GeneratorCache> gens_cache_;
};

} // namespace semifrob
