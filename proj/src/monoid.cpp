#include "semifrob/monoid.hpp"

#include <algorithm>
#include <set>

#include "semifrob/polytope.hpp"

namespace semifrob {

namespace {

std::string face_description(const FaceLatticeCone& cone, int id) {
    return face_label(cone, id);
}

} // namespace

SeminormalMonoid SeminormalMonoid::from_face_data(const std::vector<IntVec>& cone_generators,
                                                  const std::vector<FaceAssignment>& assignments) {
    SeminormalMonoid monoid;
    monoid.cone_ = build_cone(cone_generators);
    const FaceLatticeCone& cone = monoid.cone_;
    Eigen::Index n = cone.ambient_rank();

    std::vector<std::optional<Sublattice>> listed(static_cast<size_t>(cone.face_count()));
    for (const FaceAssignment& a : assignments) {
        std::vector<int> parts;
        for (const IntVec& ray : a.face_rays) {
            if (ray.size() != n)
                throw DomainError(errc::unknown_face_key, "face ray length differs from ambient rank");
            int sf = cone.try_smallest_face(to_rat(ray));
            if (sf < 0)
                throw DomainError(errc::unknown_face_key, "face ray lies outside the cone");
            parts.push_back(sf);
        }
        int id = cone.join(parts);
        if (listed[static_cast<size_t>(id)])
            throw DomainError(errc::duplicate_face_key,
                              "face " + face_description(cone, id) + " assigned twice");
        Sublattice l = Sublattice::from_vectors(n, a.lattice_generators);
        if (id == cone.top()) {
            if (l != Sublattice::full(n))
                throw DomainError(errc::monotonicity_violation,
                                  "the full cone must carry the ambient lattice");
        } else {
            const Sublattice& span = cone.face(id).span_lattice;
            for (Eigen::Index i = 0; i < l.rank(); ++i) {
                if (!span.member(l.basis_row(i)))
                    throw DomainError(errc::not_a_sublattice,
                                      "lattice generator outside the span of face " +
                                          face_description(cone, id));
            }
            if (l.rank() != cone.face(id).dim)
                throw DomainError(errc::infinite_index,
                                  "assigned lattice has infinite index in face " +
                                      face_description(cone, id));
        }
        listed[static_cast<size_t>(id)] = std::move(l);
    }

    monoid.lattices_.resize(static_cast<size_t>(cone.face_count()), Sublattice::zero(n));
    for (int id = 0; id < cone.face_count(); ++id) {
        if (listed[static_cast<size_t>(id)]) {
            monoid.lattices_[static_cast<size_t>(id)] = *listed[static_cast<size_t>(id)];
            continue;
        }
        // unlisted: intersect the listed lattices of strictly larger faces
        // inside the face's span
        Sublattice current = cone.face(id).span_lattice;
        for (int other = 0; other < cone.face_count(); ++other) {
            if (other == id || !listed[static_cast<size_t>(other)])
                continue;
            if (cone.face_leq(id, other))
                current = intersect(current, *listed[static_cast<size_t>(other)]);
        }
        monoid.lattices_[static_cast<size_t>(id)] = std::move(current);
    }

    monoid.finalize();

    for (int id = 0; id < cone.face_count(); ++id) {
        if (listed[static_cast<size_t>(id)] && id != cone.top() && !monoid.ruf_[static_cast<size_t>(id)])
            monoid.warnings_.push_back("listed face " + face_description(cone, id) +
                                       " is relatively saturated; its assignment is redundant");
    }
    return monoid;
}

SeminormalMonoid SeminormalMonoid::from_generators(const std::vector<IntVec>& generators) {
    if (generators.empty())
        throw DomainError(errc::not_full_dimensional, "no generators");
    Eigen::Index n0 = generators[0].size();
    for (const IntVec& g : generators) {
        if (g.size() != n0)
            throw DomainError(errc::rank_mismatch, "generators of mixed length");
        if (g.isZero())
            throw DomainError(errc::not_full_dimensional, "zero generator");
    }
    Sublattice group = Sublattice::from_vectors(n0, generators);
    std::vector<IntVec> embedded;
    if (group == Sublattice::full(n0)) {
        embedded = generators;
    } else {
        // re-embed into coordinates of the group the generators span
        embedded.reserve(generators.size());
        for (const IntVec& g : generators) {
            auto c = group.coordinates(g);
            embedded.push_back(*c);
        }
    }

    SeminormalMonoid monoid;
    monoid.cone_ = build_cone(embedded);
    const FaceLatticeCone& cone = monoid.cone_;
    Eigen::Index n = cone.ambient_rank();

    monoid.lattices_.reserve(static_cast<size_t>(cone.face_count()));
    for (int id = 0; id < cone.face_count(); ++id) {
        std::vector<IntVec> on_face;
        for (int gi : cone.face(id).generator_indices)
            on_face.push_back(embedded[static_cast<size_t>(gi)]);
        monoid.lattices_.push_back(Sublattice::from_vectors(n, on_face));
    }
    monoid.finalize();
    return monoid;
}

void SeminormalMonoid::finalize() {
    const FaceLatticeCone& cone = cone_;

    // monotonicity across every comparable pair
    for (int a = 0; a < cone.face_count(); ++a) {
        for (int b = 0; b < cone.face_count(); ++b) {
            if (a == b || !cone.face_leq(a, b))
                continue;
            if (!lattices_[static_cast<size_t>(b)].contains(lattices_[static_cast<size_t>(a)]))
                throw DomainError(errc::monotonicity_violation,
                                  "lattice of " + face_description(cone, a) +
                                      " is not contained in the lattice of " +
                                      face_description(cone, b));
        }
    }

    quotients_.reserve(static_cast<size_t>(cone.face_count()));
    for (int id = 0; id < cone.face_count(); ++id) {
        const Sublattice& span = cone.face(id).span_lattice;
        const Sublattice& l = lattices_[static_cast<size_t>(id)];
        if (l.rank() != span.rank())
            throw DomainError(errc::infinite_index,
                              "lattice of " + face_description(cone, id) + " has infinite index");
        quotients_.push_back(quotient_invariants(span, l));
    }

    // relative saturation: compare with the intersection over all strictly
    // larger faces
    ruf_.assign(static_cast<size_t>(cone.face_count()), false);
    for (int id = 0; id < cone.face_count(); ++id) {
        if (id == cone.top()) {
            ruf_[static_cast<size_t>(id)] = true;  // by convention
            continue;
        }
        Sublattice rhs = cone.face(id).span_lattice;
        for (int other = 0; other < cone.face_count(); ++other) {
            if (other == id || !cone.face_leq(id, other))
                continue;
            rhs = intersect(rhs, lattices_[static_cast<size_t>(other)]);
        }
        ruf_[static_cast<size_t>(id)] = (rhs != lattices_[static_cast<size_t>(id)]);
    }
    for (int id = 0; id < cone.face_count(); ++id) {
        if (ruf_[static_cast<size_t>(id)])
            rufs_.push_back(id);
    }
    fpure_face_ = cone.join({});  // {0}
    fpure_face_ = rufs_.empty() ? cone.top() : rufs_.front();
    for (int id : rufs_)
        fpure_face_ = cone.meet(fpure_face_, id);

    gens_cache_ = std::make_unique<GeneratorCache>();
}

const Sublattice& SeminormalMonoid::face_lattice(int face_id) const {
    cone_.face(face_id);  // range check
    return lattices_[static_cast<size_t>(face_id)];
}

const QuotientInvariants& SeminormalMonoid::quotient(int face_id) const {
    cone_.face(face_id);
    return quotients_[static_cast<size_t>(face_id)];
}

Int SeminormalMonoid::face_index(int face_id) const {
    return torsion_order(quotient(face_id));
}

bool SeminormalMonoid::is_ruf(int face_id) const {
    cone_.face(face_id);
    return ruf_[static_cast<size_t>(face_id)];
}

std::vector<int> SeminormalMonoid::proper_rufs() const {
    std::vector<int> out;
    for (int id : rufs_) {
        if (id != cone_.top())
            out.push_back(id);
    }
    return out;
}

bool SeminormalMonoid::contains(const IntVec& u) const {
    if (u.size() != ambient_rank())
        throw DomainError(errc::rank_mismatch, "vector length differs from ambient rank");
    int sf = cone_.try_smallest_face(to_rat(u));
    if (sf < 0)
        return false;
    for (int id : rufs_) {
        if (cone_.face_leq(sf, id) && !lattices_[static_cast<size_t>(id)].member(u))
            return false;
    }
    return true;
}

bool SeminormalMonoid::contains_fractional(const FracPoint& u) const {
    return contains(u.numerator);
}

FaceClassification SeminormalMonoid::classify(const Int& p) const {
    FaceClassification out;
    out.p = p;
    std::vector<bool> pruf(static_cast<size_t>(cone_.face_count()), false);
    for (int id = 0; id < cone_.face_count(); ++id) {
        FaceClassificationRow row;
        row.face_id = id;
        row.quotient = quotients_[static_cast<size_t>(id)];
        row.is_ruf = ruf_[static_cast<size_t>(id)];
        row.relatively_saturated = (id != cone_.top()) && !row.is_ruf;
        row.is_p_face = torsion_order(row.quotient) % p == 0;
        row.is_pruf = row.is_p_face && row.is_ruf;
        pruf[static_cast<size_t>(id)] = row.is_pruf;
        out.rows.push_back(std::move(row));
    }
    for (auto& row : out.rows) {
        if (!row.is_pruf)
            continue;
        bool maximal = true;
        for (int other = 0; other < cone_.face_count(); ++other) {
            if (other != row.face_id && pruf[static_cast<size_t>(other)] &&
                cone_.face_leq(row.face_id, other)) {
                maximal = false;
                break;
            }
        }
        row.is_maximal_pruf = maximal;
    }
    return out;
}

std::vector<int> SeminormalMonoid::p_faces(const Int& p) const {
    std::vector<int> out;
    for (int id = 0; id < cone_.face_count(); ++id) {
        if (torsion_order(quotients_[static_cast<size_t>(id)]) % p == 0)
            out.push_back(id);
    }
    return out;
}

std::vector<int> SeminormalMonoid::maximal_prufs(const Int& p) const {
    FaceClassification c = classify(p);
    std::vector<int> out;
    for (const auto& row : c.rows) {
        if (row.is_maximal_pruf)
            out.push_back(row.face_id);
    }
    return out;
}

bool SeminormalMonoid::is_F_split(const Int& p) const {
    return p_faces(p).empty();
}

bool SeminormalMonoid::lattice_formula_check(int face_id) const {
    cone_.face(face_id);
    Sublattice rhs = cone_.face(face_id).span_lattice;
    for (int id : rufs_) {
        if (cone_.face_leq(face_id, id))
            rhs = intersect(rhs, lattices_[static_cast<size_t>(id)]);
    }
    return rhs == lattices_[static_cast<size_t>(face_id)];
}

// ---------------------------------------------------------------------------
// Minimal generators
// ---------------------------------------------------------------------------

namespace {

// A lattice point of M_D in the relative interior of D: the index times the
// sum of the primitive rays of D.
IntVec interior_witness(const SeminormalMonoid& s, int face_id) {
    const FaceLatticeCone& cone = s.cone();
    const Face& d = cone.face(face_id);
    IntVec x = IntVec::Zero(cone.ambient_rank());
    for (int r : d.ray_indices)
        x += cone.rays()[static_cast<size_t>(r)];
    return x * s.face_index(face_id);
}

} // namespace

const std::vector<IntVec>& SeminormalMonoid::minimal_generators() const {
    std::call_once(gens_cache_->once, [&] {
        const FaceLatticeCone& cone = cone_;
        Eigen::Index n = ambient_rank();
        size_t f = cone.dual_rays().size();

        // Height budget H0: enough to subtract an interior witness of some
        // face from any candidate whose heights all exceed it.
        Int h0 = 1;
        for (int id = 0; id < cone.face_count(); ++id) {
            if (cone.face(id).dim == 0)
                continue;
            IntVec w = interior_witness(*this, id);
            for (size_t r = 0; r < f; ++r)
                h0 = std::max(h0, cone.height(w, static_cast<int>(r)));
        }

        // Any irreducible element lies in a region { x in C : heights on B
        // at most H0 } whose recession cone is trivial; take the max height
        // over the vertices of all such regions.
        Int hstar = h0;
        for (unsigned long mask = 1; mask < (1ul << f); ++mask) {
            std::vector<int> subset;
            for (size_t r = 0; r < f; ++r) {
                if ((mask >> r) & 1ul)
                    subset.push_back(static_cast<int>(r));
            }
            if (cone.face(cone.face_cut_by(subset)).dim != 0)
                continue;
            bool minimal = true;
            for (size_t drop = 0; drop < subset.size() && minimal; ++drop) {
                std::vector<int> smaller;
                for (size_t r = 0; r < subset.size(); ++r) {
                    if (r != drop)
                        smaller.push_back(subset[r]);
                }
                if (!smaller.empty() && cone.face(cone.face_cut_by(smaller)).dim == 0)
                    minimal = false;
            }
            if (!minimal)
                continue;
            HPolytope q;
            q.a = RatMat(static_cast<Eigen::Index>(f + subset.size()), n);
            q.b = RatVec(static_cast<Eigen::Index>(f + subset.size()));
            for (size_t r = 0; r < f; ++r) {
                q.a.row(static_cast<Eigen::Index>(r)) = -to_rat(cone.dual_rays()[r]).transpose();
                q.b(static_cast<Eigen::Index>(r)) = 0;
            }
            for (size_t i = 0; i < subset.size(); ++i) {
                q.a.row(static_cast<Eigen::Index>(f + i)) =
                    to_rat(cone.dual_rays()[static_cast<size_t>(subset[i])]).transpose();
                q.b(static_cast<Eigen::Index>(f + i)) = Rat(h0);
            }
            for (const RatVec& v : enumerate_vertices(q)) {
                for (size_t r = 0; r < f; ++r)
                    hstar = std::max(hstar, ceil_rat(cone.height(v, static_cast<int>(r))));
            }
        }

        // Enumerate monoid points in the height box and filter irreducibles.
        HPolytope box;
        box.a = RatMat(static_cast<Eigen::Index>(2 * f), n);
        box.b = RatVec(static_cast<Eigen::Index>(2 * f));
        for (size_t r = 0; r < f; ++r) {
            box.a.row(static_cast<Eigen::Index>(2 * r)) = -to_rat(cone.dual_rays()[r]).transpose();
            box.b(static_cast<Eigen::Index>(2 * r)) = 0;
            box.a.row(static_cast<Eigen::Index>(2 * r + 1)) = to_rat(cone.dual_rays()[r]).transpose();
            box.b(static_cast<Eigen::Index>(2 * r + 1)) = Rat(hstar);
        }
        std::vector<IntVec> points;
        for (const IntVec& u : integer_points(box)) {
            if (!u.isZero() && contains(u))
                points.push_back(u);
        }
        for (const IntVec& u : points) {
            bool reducible = false;
            for (const IntVec& v : points) {
                if (v == u)
                    continue;
                IntVec diff = u - v;
                if (diff.isZero())
                    continue;
                if (contains(diff)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible)
                gens_cache_->gens.push_back(u);
        }
    });
    return gens_cache_->gens;
}

} // namespace semifrob
