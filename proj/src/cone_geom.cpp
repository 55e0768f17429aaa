#include "semifrob/cone_geom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semifrob {

namespace {

Eigen::Index span_rank(const std::vector<IntVec>& vectors, Eigen::Index n) {
    RatMat m(static_cast<Eigen::Index>(vectors.size()), n);
    for (size_t i = 0; i < vectors.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = to_rat(vectors[i]).transpose();
    return rat_rank(m);
}

bool next_subset(std::vector<Eigen::Index>& idx, Eigen::Index m) {
    Eigen::Index k = static_cast<Eigen::Index>(idx.size());
    for (Eigen::Index i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < m - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (Eigen::Index j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a(i) * b(i);
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a(i) * Rat(b(i));
    return s;
}

} // namespace

std::vector<IntVec> dual_extremal_rays(const std::vector<IntVec>& vectors, Eigen::Index n) {
    std::vector<IntVec> rays;
    auto consider = [&](const IntVec& cand) {
        bool nonneg = true, nonpos = true;
        for (const IntVec& g : vectors) {
            Int h = dot(g, cand);
            if (h < 0)
                nonneg = false;
            if (h > 0)
                nonpos = false;
            if (!nonneg && !nonpos)
                return;
        }
        IntVec ray = nonneg ? cand : IntVec(-cand);
        for (const IntVec& r : rays) {
            if (r == ray)
                return;
        }
        rays.push_back(ray);
    };

    if (n == 1) {
        IntVec e(1);
        e(0) = 1;
        consider(e);
    } else {
        Eigen::Index m = static_cast<Eigen::Index>(vectors.size());
        if (m < n - 1)
            return rays;
        std::vector<Eigen::Index> idx(static_cast<size_t>(n - 1));
        for (Eigen::Index i = 0; i < n - 1; ++i)
            idx[static_cast<size_t>(i)] = i;
        do {
            IntMat sub(n - 1, n);
            for (Eigen::Index i = 0; i < n - 1; ++i)
                sub.row(i) = vectors[static_cast<size_t>(idx[static_cast<size_t>(i)])].transpose();
            Sublattice kernel = integer_kernel(sub, n);
            if (kernel.rank() != 1)
                continue;
            consider(primitive(kernel.basis_row(0)));
        } while (next_subset(idx, m));
    }
    std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return rays;
}

FaceLatticeCone build_cone(const std::vector<IntVec>& generators) {
    if (generators.empty())
        throw DomainError(errc::not_full_dimensional, "no generators");
    Eigen::Index n = generators[0].size();
    for (const IntVec& g : generators) {
        if (g.size() != n)
            throw DomainError(errc::rank_mismatch, "generators of mixed length");
        if (g.isZero())
            throw DomainError(errc::not_full_dimensional, "zero generator");
    }
    if (span_rank(generators, n) != n)
        throw DomainError(errc::not_full_dimensional, "generators do not span the ambient space");

    FaceLatticeCone cone;
    cone.ambient_rank_ = n;
    cone.generators_ = generators;
    cone.dual_rays_ = dual_extremal_rays(generators, n);
    if (span_rank(cone.dual_rays_, n) != n)
        throw DomainError(errc::not_pointed, "cone contains a line");
    cone.rays_ = dual_extremal_rays(cone.dual_rays_, n);

    size_t f = cone.dual_rays_.size();
    if (f >= 8 * sizeof(unsigned long))
        throw DomainError(errc::not_full_dimensional, "too many facets for the face enumeration");

    // height table: generators x dual rays
    std::vector<std::vector<Int>> gh(generators.size(), std::vector<Int>(f));
    for (size_t i = 0; i < generators.size(); ++i) {
        for (size_t r = 0; r < f; ++r)
            gh[i][r] = dot(generators[i], cone.dual_rays_[r]);
    }

    // enumerate faces as intersections of facet hyperplanes, keyed by the
    // set of generators they contain
    std::map<std::vector<int>, unsigned long> by_generators;  // key -> canonical zero mask
    for (unsigned long mask = 0; mask < (1ul << f); ++mask) {
        std::vector<int> tight;
        for (size_t i = 0; i < generators.size(); ++i) {
            bool on = true;
            for (size_t r = 0; r < f && on; ++r) {
                if ((mask >> r) & 1ul)
                    on = gh[i][r] == 0;
            }
            if (on)
                tight.push_back(static_cast<int>(i));
        }
        unsigned long canonical = 0;
        for (size_t r = 0; r < f; ++r) {
            bool all_zero = true;
            for (int i : tight) {
                if (gh[static_cast<size_t>(i)][r] != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero)
                canonical |= (1ul << r);
        }
        by_generators.emplace(std::move(tight), canonical);
    }

    struct Draft {
        std::vector<int> generator_indices;
        unsigned long zero_mask;
    };
    std::vector<Draft> drafts;
    for (auto& [key, mask] : by_generators)
        drafts.push_back(Draft{key, mask});

    // assemble faces
    for (const Draft& d : drafts) {
        Face face;
        face.generator_indices = d.generator_indices;
        for (size_t r = 0; r < f; ++r) {
            if ((d.zero_mask >> r) & 1ul)
                face.zero_set.push_back(static_cast<int>(r));
        }
        IntMat normals(static_cast<Eigen::Index>(face.zero_set.size()), n);
        for (size_t r = 0; r < face.zero_set.size(); ++r)
            normals.row(static_cast<Eigen::Index>(r)) =
                cone.dual_rays_[static_cast<size_t>(face.zero_set[r])].transpose();
        face.span_lattice = integer_kernel(normals, n);
        face.dim = static_cast<int>(face.span_lattice.rank());
        for (size_t r = 0; r < cone.rays_.size(); ++r) {
            bool on = true;
            for (int z : face.zero_set) {
                if (dot(cone.rays_[r], cone.dual_rays_[static_cast<size_t>(z)]) != 0) {
                    on = false;
                    break;
                }
            }
            if (on)
                face.ray_indices.push_back(static_cast<int>(r));
        }
        // star rays: extremal rays of sigma cap D-perp, computed in the
        // coordinates of a lattice basis of D-perp
        IntMat span_gens(static_cast<Eigen::Index>(face.generator_indices.size()), n);
        for (size_t i = 0; i < face.generator_indices.size(); ++i)
            span_gens.row(static_cast<Eigen::Index>(i)) =
                generators[static_cast<size_t>(face.generator_indices[i])].transpose();
        Sublattice perp = integer_kernel(span_gens, n);
        if (perp.rank() > 0) {
            Eigen::Index k = perp.rank();
            std::vector<IntVec> rows;
            rows.reserve(generators.size());
            for (const IntVec& g : generators) {
                IntVec row(k);
                for (Eigen::Index t = 0; t < k; ++t)
                    row(t) = dot(g, perp.basis_row(t));
                rows.push_back(row);
            }
            for (const IntVec& y : dual_extremal_rays(rows, k)) {
                IntVec v = IntVec::Zero(n);
                for (Eigen::Index t = 0; t < k; ++t)
                    v += y(t) * perp.basis_row(t);
                face.star_rays.push_back(primitive(v));
            }
            std::sort(face.star_rays.begin(), face.star_rays.end(),
                      [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
        }
        cone.faces_.push_back(std::move(face));
    }

    std::sort(cone.faces_.begin(), cone.faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.generator_indices < b.generator_indices;
    });
    for (size_t i = 0; i < cone.faces_.size(); ++i) {
        cone.faces_[i].id = static_cast<int>(i);
        unsigned long mask = 0;
        for (int z : cone.faces_[i].zero_set)
            mask |= (1ul << z);
        cone.zero_mask_.push_back(mask);
        if (cone.faces_[i].dim == 0)
            cone.bottom_ = static_cast<int>(i);
        if (cone.faces_[i].dim == static_cast<int>(n))
            cone.top_ = static_cast<int>(i);
    }
    return cone;
}

const Face& FaceLatticeCone::face(int id) const {
    check_face(id);
    return faces_[static_cast<size_t>(id)];
}

void FaceLatticeCone::check_face(int id) const {
    if (id < 0 || id >= face_count())
        throw DomainError(errc::unknown_face, "face id out of range");
}

Int FaceLatticeCone::height(const IntVec& x, int dual_ray) const {
    return dot(x, dual_rays_[static_cast<size_t>(dual_ray)]);
}

Rat FaceLatticeCone::height(const RatVec& x, int dual_ray) const {
    return dot(x, dual_rays_[static_cast<size_t>(dual_ray)]);
}

bool FaceLatticeCone::in_cone(const RatVec& u) const {
    for (size_t r = 0; r < dual_rays_.size(); ++r) {
        if (height(u, static_cast<int>(r)) < 0)
            return false;
    }
    return true;
}

bool FaceLatticeCone::relative_interior_contains(int face_id, const RatVec& u) const {
    check_face(face_id);
    const Face& d = faces_[static_cast<size_t>(face_id)];
    unsigned long mask = zero_mask_[static_cast<size_t>(face_id)];
    for (size_t r = 0; r < dual_rays_.size(); ++r) {
        Rat h = height(u, static_cast<int>(r));
        if ((mask >> r) & 1ul) {
            if (h != 0)
                return false;
        } else if (h <= 0) {
            return false;
        }
    }
    (void)d;
    return true;
}

int FaceLatticeCone::try_smallest_face(const RatVec& u) const {
    unsigned long mask = 0;
    for (size_t r = 0; r < dual_rays_.size(); ++r) {
        Rat h = height(u, static_cast<int>(r));
        if (h < 0)
            return -1;
        if (h == 0)
            mask |= (1ul << r);
    }
    for (size_t i = 0; i < faces_.size(); ++i) {
        if (zero_mask_[i] == mask)
            return static_cast<int>(i);
    }
    return -1;
}

int FaceLatticeCone::smallest_face_containing(const RatVec& u) const {
    int id = try_smallest_face(u);
    if (id < 0)
        throw DomainError(errc::not_in_cone, "point lies outside the cone");
    return id;
}

bool FaceLatticeCone::star_has_positive_pairing(int face_id, const RatVec& a) const {
    check_face(face_id);
    for (const IntVec& v : faces_[static_cast<size_t>(face_id)].star_rays) {
        if (dot(a, v) > 0)
            return true;
    }
    return false;
}

bool FaceLatticeCone::face_leq(int a, int b) const {
    check_face(a);
    check_face(b);
    unsigned long ma = zero_mask_[static_cast<size_t>(a)];
    unsigned long mb = zero_mask_[static_cast<size_t>(b)];
    return (ma & mb) == mb;  // a's zero set contains b's
}

namespace {

int face_from_cut_mask(const FaceLatticeCone& cone, unsigned long mask) {
    std::vector<int> tight;
    for (size_t i = 0; i < cone.generators().size(); ++i) {
        bool on = true;
        for (size_t r = 0; r < cone.dual_rays().size() && on; ++r) {
            if ((mask >> r) & 1ul)
                on = dot(cone.generators()[i], cone.dual_rays()[r]) == 0;
        }
        if (on)
            tight.push_back(static_cast<int>(i));
    }
    for (int i = 0; i < cone.face_count(); ++i) {
        if (cone.face(i).generator_indices == tight)
            return i;
    }
    throw DomainError(errc::unknown_face, "internal: cut face not found in the lattice");
}

} // namespace

int FaceLatticeCone::meet(int a, int b) const {
    check_face(a);
    check_face(b);
    unsigned long mask = zero_mask_[static_cast<size_t>(a)] | zero_mask_[static_cast<size_t>(b)];
    return face_from_cut_mask(*this, mask);
}

int FaceLatticeCone::face_cut_by(const std::vector<int>& dual_ray_subset) const {
    unsigned long mask = 0;
    for (int r : dual_ray_subset) {
        if (r < 0 || static_cast<size_t>(r) >= dual_rays_.size())
            throw DomainError(errc::unknown_face, "dual ray index out of range");
        mask |= (1ul << r);
    }
    return face_from_cut_mask(*this, mask);
}

int FaceLatticeCone::join(const std::vector<int>& face_ids) const {
    unsigned long mask = (1ul << dual_rays_.size()) - 1ul;
    for (int id : face_ids) {
        check_face(id);
        mask &= zero_mask_[static_cast<size_t>(id)];
    }
    for (size_t i = 0; i < faces_.size(); ++i) {
        if (zero_mask_[i] == mask)
            return static_cast<int>(i);
    }
    throw DomainError(errc::unknown_face, "internal: join not found in the face lattice");
}

std::string face_label(const FaceLatticeCone& cone, int face_id) {
    const Face& d = cone.face(face_id);
    if (d.dim == 0)
        return "{0}";
    if (face_id == cone.top())
        return "C";
    std::ostringstream os;
    os << "⟨";
    for (size_t i = 0; i < d.ray_indices.size(); ++i) {
        if (i)
            os << ",";
        const IntVec& r = cone.rays()[static_cast<size_t>(d.ray_indices[i])];
        os << "(";
        for (Eigen::Index j = 0; j < r.size(); ++j) {
            if (j)
                os << ",";
            os << r(j);
        }
        os << ")";
    }
    os << "⟩";
    return os.str();
}

} // namespace semifrob
