#pragma once

// Exact integer/rational dense linear algebra on top of Eigen with
// GMP-backed scalars: Hermite/Smith normal forms, sublattice arithmetic,
// quotient-group invariants and p-torsion analysis.  Everything here is
// exact; no floating point.

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "semifrob/errors.hpp"

namespace semifrob {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vec<Int>;
using IntMat = Mat<Int>;
using RatVec = Vec<Rat>;
using RatMat = Mat<Rat>;

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

/// Floor division (round toward -infinity); b != 0.
Int floor_div(const Int& a, const Int& b);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// gcd of all coordinates; 0 for the zero vector.
Int content(const IntVec& v);

/// v divided by its content; the zero vector stays zero.  Direction is kept.
IntVec primitive(const IntVec& v);

/// Clears denominators: the primitive integer vector with the direction of v.
IntVec primitive_direction(const RatVec& v);

IntVec make_vec(std::initializer_list<long> entries);
RatVec to_rat(const IntVec& v);

/// Lexicographic comparison, first coordinate most significant.
bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

Eigen::Index rat_rank(RatMat m);
Rat rat_det(RatMat m);

/// Unique solution of the square system A x = b, or nullopt when singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// Basis of { x : A x = 0 } over Q, returned as rows.
RatMat rat_kernel(RatMat a);

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form of the row span: echelon basis with
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank-many rows.
IntMat hnf(IntMat rows);

/// As hnf(), but also returns the unimodular U with U * rows = [H; 0].
/// U has rows.rows() rows; the trailing ones span the left kernel.
struct HnfTransform {
    IntMat h;         // rank-many nonzero rows
    IntMat u;         // full square transform
    Eigen::Index rank;
};
HnfTransform hnf_with_transform(IntMat rows);

/// Diagonal of the Smith normal form (positive entries, d1 | d2 | ...),
/// one entry per rank.
std::vector<Int> smith_diagonal(IntMat m);

// ---------------------------------------------------------------------------
// Sublattice
// ---------------------------------------------------------------------------

/// A sublattice of Z^n in canonical Hermite form.  Two equal lattices have
/// identical basis matrices, so equality is structural.  Immutable.
class Sublattice {
public:
    /// The lattice generated by the rows of `generators` (may be empty).
    static Sublattice from_rows(Eigen::Index ambient_rank, const IntMat& generators);
    static Sublattice from_vectors(Eigen::Index ambient_rank, const std::vector<IntVec>& generators);
    static Sublattice zero(Eigen::Index ambient_rank);
    static Sublattice full(Eigen::Index ambient_rank);

    Eigen::Index ambient_rank() const { return ambient_rank_; }
    Eigen::Index rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }
    IntVec basis_row(Eigen::Index i) const { return basis_.row(i).transpose(); }

    bool member(const IntVec& v) const;

    /// Coordinates of v in this basis; nullopt when v is not a member.
    std::optional<IntVec> coordinates(const IntVec& v) const;

    bool contains(const Sublattice& other) const;
    bool operator==(const Sublattice& other) const;
    bool operator!=(const Sublattice& other) const { return !(*this == other); }

private:
    Sublattice(Eigen::Index ambient_rank, IntMat basis, std::vector<Eigen::Index> pivots)
        : ambient_rank_(ambient_rank), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Eigen::Index ambient_rank_;
    IntMat basis_;                       // canonical HNF rows
    std::vector<Eigen::Index> pivots_;   // pivot column per row
};

/// Invariant-factor data of a quotient big/small.
struct QuotientInvariants {
    std::vector<Int> invariant_factors;  // the d_i > 1, with d_1 | d_2 | ...
    Eigen::Index free_rank = 0;
};

/// Product of the invariant factors: the index [big : small] when free_rank
/// is zero.
Int torsion_order(const QuotientInvariants& q);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Sublattice canonical_form(Eigen::Index ambient_rank, const std::vector<IntVec>& vectors);

/// big/small as an abstract abelian group; requires small inside big.
QuotientInvariants quotient_invariants(const Sublattice& big, const Sublattice& small);

/// Largest t such that p^t divides some invariant factor; the quotient must
/// be finite.
int p_torsion_exponent(const QuotientInvariants& q, const Int& p);

/// { x in big : m x in small for some m coprime to p }.  Sits between small
/// and big; big/result is a p-group and result/small has order coprime to p.
Sublattice prime_to_p_saturation(const Sublattice& big, const Sublattice& small, const Int& p);

Sublattice intersect(const Sublattice& a, const Sublattice& b);

bool member(const Sublattice& l, const IntVec& v);

/// L intersected with the rational span of the given row vectors.
Sublattice intersect_with_span(const Sublattice& l, const RatMat& span_rows);

/// { x in Z^n : A x = 0 }; always saturated.
Sublattice integer_kernel(const IntMat& a, Eigen::Index ambient_rank);

/// Z^n intersected with the rational span of L.
Sublattice saturate(const Sublattice& l);

} // namespace semifrob
