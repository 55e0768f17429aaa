#include "semifrob/exact_linalg.hpp"

#include <algorithm>

namespace semifrob {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

Int floor_rat(const Rat& x) {
    return floor_div(Int(numerator(x)), Int(denominator(x)));
}

Int ceil_rat(const Rat& x) {
    return -floor_rat(-x);
}

Int content(const IntVec& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = gcd(g, v(i));
    return g;
}

IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1)
        return v;
    IntVec out = v;
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) /= g;
    return out;
}

IntVec primitive_direction(const RatVec& v) {
    Int lcm_den = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm_den = lcm(lcm_den, Int(denominator(v(i))));
    IntVec scaled(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        scaled(i) = Int(numerator(v(i))) * (lcm_den / Int(denominator(v(i))));
    return primitive(scaled);
}

IntVec make_vec(std::initializer_list<long> entries) {
    IntVec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries)
        v(i++) = e;
    return v;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = Rat(v(i));
    return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return a.size() < b.size();
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

namespace {

// Row echelon over Q; returns rank.  Destroys m.
Eigen::Index echelonize(RatMat& m) {
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        m.row(rank).swap(m.row(pivot));
        Rat inv = m(rank, col);
        for (Eigen::Index c = col; c < m.cols(); ++c)
            m(rank, c) /= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, col) == 0)
                continue;
            Rat f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

} // namespace

Eigen::Index rat_rank(RatMat m) {
    return echelonize(m);
}

Rat rat_det(RatMat m) {
    if (m.rows() != m.cols())
        throw DomainError(errc::rank_mismatch, "determinant of a non-square matrix");
    Rat det = 1;
    Eigen::Index n = m.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return Rat(0);
        if (pivot != col) {
            m.row(col).swap(m.row(pivot));
            det = -det;
        }
        det *= m(col, col);
        Rat inv = m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Rat f = m(r, col) / inv;
            for (Eigen::Index c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw DomainError(errc::rank_mismatch, "rat_solve expects a square system");
    Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return std::nullopt;
        if (pivot != col) {
            a.row(col).swap(a.row(pivot));
            std::swap(b(col), b(pivot));
        }
        Rat inv = a(col, col);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0)
                continue;
            Rat f = a(r, col) / inv;
            for (Eigen::Index c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
            b(r) -= f * b(col);
        }
    }
    RatVec x(n);
    for (Eigen::Index i = 0; i < n; ++i)
        x(i) = b(i) / a(i, i);
    return x;
}

RatMat rat_kernel(RatMat a) {
    Eigen::Index n = a.cols();
    Eigen::Index rank = echelonize(a);
    // pivot columns of the reduced matrix
    std::vector<Eigen::Index> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    {
        Eigen::Index c = 0;
        for (Eigen::Index r = 0; r < rank; ++r) {
            while (c < n && a(r, c) == 0)
                ++c;
            pivot_col.push_back(c);
            is_pivot[static_cast<size_t>(c)] = true;
        }
    }
    RatMat kernel(n - rank, n);
    Eigen::Index row = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)])
            continue;
        RatVec x = RatVec::Zero(n);
        x(free) = 1;
        for (Eigen::Index r = 0; r < rank; ++r)
            x(pivot_col[static_cast<size_t>(r)]) = -a(r, free);
        kernel.row(row++) = x.transpose();
    }
    return kernel;
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

namespace {

struct HnfState {
    IntMat a;
    IntMat u;       // optional transform
    bool track;

    void swap_rows(Eigen::Index i, Eigen::Index j) {
        if (i == j)
            return;
        a.row(i).swap(a.row(j));
        if (track)
            u.row(i).swap(u.row(j));
    }
    void negate_row(Eigen::Index i) {
        a.row(i) = -a.row(i);
        if (track)
            u.row(i) = -u.row(i);
    }
    void axpy(Eigen::Index dst, const Int& f, Eigen::Index src) {
        if (f == 0)
            return;
        a.row(dst) -= f * a.row(src);
        if (track)
            u.row(dst) -= f * u.row(src);
    }
};

// Reduce state.a to row HNF in place; returns (rank, pivot columns).
std::pair<Eigen::Index, std::vector<Eigen::Index>> hnf_in_place(HnfState& s) {
    Eigen::Index m = s.a.rows(), n = s.a.cols();
    Eigen::Index r = 0;
    std::vector<Eigen::Index> pivots;
    for (Eigen::Index col = 0; col < n && r < m; ++col) {
        // clear column below position r down to one nonzero entry
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index i = r; i < m; ++i) {
                if (s.a(i, col) == 0)
                    continue;
                if (best < 0 || abs(s.a(i, col)) < abs(s.a(best, col)))
                    best = i;
            }
            if (best < 0)
                break;
            s.swap_rows(r, best);
            bool any = false;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (s.a(i, col) == 0)
                    continue;
                Int f = floor_div(s.a(i, col), s.a(r, col));
                s.axpy(i, f, r);
                if (s.a(i, col) != 0)
                    any = true;
            }
            if (!any)
                break;
        }
        if (s.a(r, col) == 0)
            continue;
        if (s.a(r, col) < 0)
            s.negate_row(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            Int f = floor_div(s.a(i, col), s.a(r, col));
            s.axpy(i, f, r);
        }
        pivots.push_back(col);
        ++r;
    }
    return {r, pivots};
}

} // namespace

IntMat hnf(IntMat rows) {
    HnfState s{std::move(rows), IntMat(), false};
    auto [rank, pivots] = hnf_in_place(s);
    return s.a.topRows(rank);
}

HnfTransform hnf_with_transform(IntMat rows) {
    Eigen::Index m = rows.rows();
    HnfState s{std::move(rows), IntMat::Identity(m, m), true};
    auto [rank, pivots] = hnf_in_place(s);
    return HnfTransform{s.a.topRows(rank), std::move(s.u), rank};
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

std::vector<Int> smith_diagonal(IntMat m) {
    Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Int> diag;
    Eigen::Index t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal absolute value in the working block
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < rows; ++i) {
            for (Eigen::Index j = t; j < cols; ++j) {
                if (m(i, j) == 0)
                    continue;
                if (pi < 0 || abs(m(i, j)) < abs(m(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0)
            break;
        m.row(t).swap(m.row(pi));
        m.col(t).swap(m.col(pj));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0)
                    continue;
                Int f = floor_div(m(i, t), m(t, t));
                m.row(i) -= f * m.row(t);
                if (m(i, t) != 0) {
                    m.row(t).swap(m.row(i));
                    dirty = true;
                }
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0)
                    continue;
                Int f = floor_div(m(t, j), m(t, t));
                m.col(j) -= f * m.col(t);
                if (m(t, j) != 0) {
                    m.col(t).swap(m.col(j));
                    dirty = true;
                }
            }
        }
        // enforce divisibility of the remaining block by the pivot
        bool restart = false;
        for (Eigen::Index i = t + 1; i < rows && !restart; ++i) {
            for (Eigen::Index j = t + 1; j < cols && !restart; ++j) {
                if (m(i, j) % m(t, t) != 0) {
                    m.row(t) += m.row(i);
                    restart = true;
                }
            }
        }
        if (restart)
            continue;
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    return diag;
}

// ---------------------------------------------------------------------------
// Sublattice
// ---------------------------------------------------------------------------

Sublattice Sublattice::from_rows(Eigen::Index ambient_rank, const IntMat& generators) {
    if (generators.rows() > 0 && generators.cols() != ambient_rank)
        throw DomainError(errc::rank_mismatch, "generator length differs from ambient rank");
    HnfState s{generators, IntMat(), false};
    if (generators.rows() == 0)
        s.a = IntMat(0, ambient_rank);
    auto [rank, pivots] = hnf_in_place(s);
    return Sublattice(ambient_rank, s.a.topRows(rank), std::move(pivots));
}

Sublattice Sublattice::from_vectors(Eigen::Index ambient_rank, const std::vector<IntVec>& generators) {
    IntMat rows(static_cast<Eigen::Index>(generators.size()), ambient_rank);
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != ambient_rank)
            throw DomainError(errc::rank_mismatch, "generator length differs from ambient rank");
        rows.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
    }
    return from_rows(ambient_rank, rows);
}

Sublattice Sublattice::zero(Eigen::Index ambient_rank) {
    return Sublattice(ambient_rank, IntMat(0, ambient_rank), {});
}

Sublattice Sublattice::full(Eigen::Index ambient_rank) {
    std::vector<Eigen::Index> pivots(static_cast<size_t>(ambient_rank));
    for (Eigen::Index i = 0; i < ambient_rank; ++i)
        pivots[static_cast<size_t>(i)] = i;
    return Sublattice(ambient_rank, IntMat::Identity(ambient_rank, ambient_rank), std::move(pivots));
}

std::optional<IntVec> Sublattice::coordinates(const IntVec& v) const {
    if (v.size() != ambient_rank_)
        throw DomainError(errc::rank_mismatch, "vector length differs from ambient rank");
    IntVec rem = v;
    IntVec coords(rank());
    for (Eigen::Index i = 0; i < rank(); ++i) {
        Eigen::Index p = pivots_[static_cast<size_t>(i)];
        if (rem(p) % basis_(i, p) != 0)
            return std::nullopt;
        Int c = rem(p) / basis_(i, p);
        coords(i) = c;
        rem -= c * basis_.row(i).transpose();
    }
    if (!rem.isZero())
        return std::nullopt;
    return coords;
}

bool Sublattice::member(const IntVec& v) const {
    return coordinates(v).has_value();
}

bool Sublattice::contains(const Sublattice& other) const {
    if (other.ambient_rank_ != ambient_rank_)
        throw DomainError(errc::rank_mismatch, "ambient ranks differ");
    for (Eigen::Index i = 0; i < other.rank(); ++i) {
        if (!member(other.basis_row(i)))
            return false;
    }
    return true;
}

bool Sublattice::operator==(const Sublattice& other) const {
    return ambient_rank_ == other.ambient_rank_ && basis_.rows() == other.basis_.rows() &&
           basis_ == other.basis_;
}

Int torsion_order(const QuotientInvariants& q) {
    Int n = 1;
    for (const Int& d : q.invariant_factors)
        n *= d;
    return n;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Sublattice canonical_form(Eigen::Index ambient_rank, const std::vector<IntVec>& vectors) {
    return Sublattice::from_vectors(ambient_rank, vectors);
}

QuotientInvariants quotient_invariants(const Sublattice& big, const Sublattice& small) {
    if (big.ambient_rank() != small.ambient_rank())
        throw DomainError(errc::rank_mismatch, "ambient ranks differ");
    IntMat coords(small.rank(), big.rank());
    for (Eigen::Index i = 0; i < small.rank(); ++i) {
        auto c = big.coordinates(small.basis_row(i));
        if (!c)
            throw DomainError(errc::not_a_sublattice, "small is not contained in big");
        coords.row(i) = c->transpose();
    }
    QuotientInvariants q;
    q.free_rank = big.rank() - small.rank();
    for (const Int& d : smith_diagonal(coords)) {
        if (d > 1)
            q.invariant_factors.push_back(d);
    }
    std::sort(q.invariant_factors.begin(), q.invariant_factors.end());
    return q;
}

int p_torsion_exponent(const QuotientInvariants& q, const Int& p) {
    if (q.free_rank > 0)
        throw DomainError(errc::infinite_quotient, "quotient has positive free rank");
    int t = 0;
    for (Int d : q.invariant_factors) {
        int e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        t = std::max(t, e);
    }
    return t;
}

Sublattice prime_to_p_saturation(const Sublattice& big, const Sublattice& small, const Int& p) {
    QuotientInvariants q = quotient_invariants(big, small);
    if (q.free_rank > 0)
        throw DomainError(errc::infinite_quotient, "quotient has positive free rank");
    // m0 = prime-to-p part of the exponent of big/small
    Int m0 = q.invariant_factors.empty() ? Int(1) : q.invariant_factors.back();
    while (m0 % p == 0)
        m0 /= p;
    if (m0 == 1)
        return small;
    IntMat scaled = big.basis() * m0;
    Sublattice meet = intersect(Sublattice::from_rows(big.ambient_rank(), scaled), small);
    IntMat divided = meet.basis();
    for (Eigen::Index i = 0; i < divided.rows(); ++i) {
        for (Eigen::Index j = 0; j < divided.cols(); ++j) {
            if (divided(i, j) % m0 != 0)
                throw DomainError(errc::not_a_sublattice, "internal: saturation scaling failed");
            divided(i, j) /= m0;
        }
    }
    return Sublattice::from_rows(big.ambient_rank(), divided);
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DomainError(errc::rank_mismatch, "ambient ranks differ");
    Eigen::Index n = a.ambient_rank();
    if (a.rank() == 0 || b.rank() == 0)
        return Sublattice::zero(n);
    IntMat stacked(a.rank() + b.rank(), n);
    stacked.topRows(a.rank()) = a.basis();
    stacked.bottomRows(b.rank()) = b.basis();
    HnfTransform t = hnf_with_transform(stacked);
    Eigen::Index kernel_rows = stacked.rows() - t.rank;
    IntMat gens(kernel_rows, n);
    for (Eigen::Index i = 0; i < kernel_rows; ++i) {
        IntVec u = t.u.row(t.rank + i).head(a.rank()).transpose();
        gens.row(i) = (u.transpose() * a.basis());
    }
    return Sublattice::from_rows(n, gens);
}

bool member(const Sublattice& l, const IntVec& v) {
    return l.member(v);
}

Sublattice integer_kernel(const IntMat& a, Eigen::Index ambient_rank) {
    if (a.rows() == 0)
        return Sublattice::full(ambient_rank);
    if (a.cols() != ambient_rank)
        throw DomainError(errc::rank_mismatch, "matrix width differs from ambient rank");
    HnfTransform t = hnf_with_transform(a.transpose());
    Eigen::Index kernel_rows = ambient_rank - t.rank;
    IntMat gens(kernel_rows, ambient_rank);
    for (Eigen::Index i = 0; i < kernel_rows; ++i)
        gens.row(i) = t.u.row(t.rank + i);
    return Sublattice::from_rows(ambient_rank, gens);
}

Sublattice intersect_with_span(const Sublattice& l, const RatMat& span_rows) {
    Eigen::Index n = l.ambient_rank();
    if (span_rows.rows() > 0 && span_rows.cols() != n)
        throw DomainError(errc::rank_mismatch, "span vector length differs from ambient rank");
    if (span_rows.rows() == 0 || l.rank() == 0)
        return Sublattice::zero(n);
    // normals of the span: rational kernel, cleared to integers row by row
    RatMat k = rat_kernel(span_rows);
    IntMat normals(k.rows(), n);
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        normals.row(i) = primitive_direction(k.row(i).transpose()).transpose();
    if (normals.rows() == 0)
        return l;
    // solve u * (B * N^T) = 0 for coefficient rows u
    IntMat bnt = l.basis() * normals.transpose();
    HnfTransform t = hnf_with_transform(bnt);
    Eigen::Index kernel_rows = l.rank() - t.rank;
    IntMat gens(kernel_rows, n);
    for (Eigen::Index i = 0; i < kernel_rows; ++i)
        gens.row(i) = t.u.row(t.rank + i) * l.basis();
    return Sublattice::from_rows(n, gens);
}

Sublattice saturate(const Sublattice& l) {
    if (l.rank() == 0)
        return l;
    Sublattice orth = integer_kernel(l.basis(), l.ambient_rank());
    return integer_kernel(orth.basis(), l.ambient_rank());
}

} // namespace semifrob
