#include "semifrob/polytope.hpp"

#include <algorithm>
#include <set>

namespace semifrob {

bool HPolytope::contains(const RatVec& x) const {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Rat lhs = 0;
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            lhs += a(i, j) * x(j);
        if (lhs > b(i))
            return false;
    }
    return true;
}

namespace {

// next k-subset of {0..m-1} in lexicographic order
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

Eigen::Index affine_rank(const std::vector<RatVec>& pts) {
    if (pts.size() <= 1)
        return 0;
    RatMat diffs(static_cast<Eigen::Index>(pts.size()) - 1, pts[0].size());
    for (size_t i = 1; i < pts.size(); ++i)
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (pts[i] - pts[0]).transpose();
    return rat_rank(diffs);
}

// Recursive boundary triangulation.  `verts` spans a k-dimensional face of
// the polytope; returns simplices as index tuples into `verts`' entries,
// each of size k+1, expressed as global vertex indices.
void triangulate_face(const HPolytope& p, const std::vector<RatVec>& all,
                      const std::vector<Eigen::Index>& face, Eigen::Index k,
                      std::vector<std::vector<Eigen::Index>>& out) {
    if (static_cast<Eigen::Index>(face.size()) == k + 1) {
        out.push_back(face);
        return;
    }
    // anchor: lexicographically least vertex of the face
    Eigen::Index v0 = face[0];
    for (Eigen::Index i : face) {
        if (lex_less(all[static_cast<size_t>(i)], all[static_cast<size_t>(v0)]))
            v0 = i;
    }
    std::set<std::vector<Eigen::Index>> seen;
    for (Eigen::Index c = 0; c < p.a.rows(); ++c) {
        auto tight = [&](Eigen::Index vi) {
            Rat lhs = 0;
            for (Eigen::Index j = 0; j < p.a.cols(); ++j)
                lhs += p.a(c, j) * all[static_cast<size_t>(vi)](j);
            return lhs == p.b(c);
        };
        if (tight(v0))
            continue;
        std::vector<Eigen::Index> sub;
        for (Eigen::Index vi : face) {
            if (tight(vi))
                sub.push_back(vi);
        }
        if (sub.empty() || !seen.insert(sub).second)
            continue;
        std::vector<RatVec> pts;
        pts.reserve(sub.size());
        for (Eigen::Index vi : sub)
            pts.push_back(all[static_cast<size_t>(vi)]);
        if (affine_rank(pts) != k - 1)
            continue;
        std::vector<std::vector<Eigen::Index>> facet_simplices;
        triangulate_face(p, all, sub, k - 1, facet_simplices);
        for (auto& s : facet_simplices) {
            s.push_back(v0);
            out.push_back(std::move(s));
        }
    }
}

} // namespace

std::vector<RatVec> enumerate_vertices(const HPolytope& p) {
    Eigen::Index d = p.dim();
    Eigen::Index m = p.a.rows();
    std::vector<RatVec> vertices;
    if (d == 0)
        return vertices;
    if (m < d)
        return vertices;
    std::vector<Eigen::Index> idx(static_cast<size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i)
        idx[static_cast<size_t>(i)] = i;
    do {
        RatMat sys(d, d);
        RatVec rhs(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            sys.row(i) = p.a.row(idx[static_cast<size_t>(i)]);
            rhs(i) = p.b(idx[static_cast<size_t>(i)]);
        }
        auto x = rat_solve(sys, rhs);
        if (!x || !p.contains(*x))
            continue;
        bool dup = false;
        for (const auto& v : vertices) {
            if (v == *x) {
                dup = true;
                break;
            }
        }
        if (!dup)
            vertices.push_back(*x);
    } while (next_subset(idx, m));
    std::sort(vertices.begin(), vertices.end(),
              [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    return vertices;
}

Rat polytope_volume(const HPolytope& p) {
    Eigen::Index d = p.dim();
    if (d == 0)
        return Rat(1);
    std::vector<RatVec> verts = enumerate_vertices(p);
    if (static_cast<Eigen::Index>(verts.size()) < d + 1 || affine_rank(verts) < d)
        return Rat(0);
    std::vector<Eigen::Index> face(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        face[i] = static_cast<Eigen::Index>(i);
    std::vector<std::vector<Eigen::Index>> simplices;
    triangulate_face(p, verts, face, d, simplices);
    Rat vol = 0;
    Int dfact = 1;
    for (Eigen::Index i = 2; i <= d; ++i)
        dfact *= i;
    for (const auto& s : simplices) {
        RatMat edges(d, d);
        const RatVec& base = verts[static_cast<size_t>(s.back())];
        for (Eigen::Index i = 0; i < d; ++i)
            edges.row(i) = (verts[static_cast<size_t>(s[static_cast<size_t>(i)])] - base).transpose();
        Rat det = rat_det(edges);
        vol += (det < 0 ? -det : det);
    }
    return vol / Rat(dfact);
}

std::vector<IntVec> integer_points(const HPolytope& p) {
    Eigen::Index d = p.dim();
    std::vector<IntVec> out;
    if (d == 0) {
        // the empty product of coordinates: a single point, if feasible
        if ((p.b.array() >= 0).all())
            out.push_back(IntVec(0));
        return out;
    }
    std::vector<RatVec> verts = enumerate_vertices(p);
    if (verts.empty())
        return out;
    std::vector<Int> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        Rat mn = verts[0](j), mx = verts[0](j);
        for (const auto& v : verts) {
            mn = std::min(mn, v(j));
            mx = std::max(mx, v(j));
        }
        lo[static_cast<size_t>(j)] = ceil_rat(mn);
        hi[static_cast<size_t>(j)] = floor_rat(mx);
        if (lo[static_cast<size_t>(j)] > hi[static_cast<size_t>(j)])
            return out;
    }
    IntVec x(d);
    for (Eigen::Index j = 0; j < d; ++j)
        x(j) = lo[static_cast<size_t>(j)];
    while (true) {
        if (p.contains(to_rat(x)))
            out.push_back(x);
        Eigen::Index j = d - 1;
        while (j >= 0) {
            ++x(j);
            if (x(j) <= hi[static_cast<size_t>(j)])
                break;
            x(j) = lo[static_cast<size_t>(j)];
            --j;
        }
        if (j < 0)
            break;
    }
    return out;
}

} // namespace semifrob
