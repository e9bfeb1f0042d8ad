#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nok/rational.hpp"
#include "nok/semigroup.hpp"

namespace nok {

// The double-description computations below are exact at any dimension but
// are only intended for desk-scale problems.
inline constexpr int kMaxAmbientDim = 8;

// ---------------------------------------------------------------------------
// small exact linear algebra
// ---------------------------------------------------------------------------

// Scale to a primitive integer vector, preserving direction.
inline QVec primitive(QVec v) {
    mpz_class lcm_den(1);
    for (const auto& x : v) {
        mpz_class den = x.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class g(0);
    for (auto& x : v) {
        x *= Rational(lcm_den);
        mpz_class num = x.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

inline bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Rank of the linear span of the given vectors.
inline int linear_rank(std::vector<QVec> rows) {
    int rank = 0;
    std::size_t dim = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const QVec& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / p[col];
            for (std::size_t c = col; c < dim; ++c)
                if (p[c] != 0) rows[r][c] -= f * p[c];
        }
        ++rank;
    }
    return rank;
}

// Dimension of the affine hull of a point set.
inline int affine_rank(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return linear_rank(std::move(diffs));
}

// Determinant by fraction Gaussian elimination.
inline Rational determinant(std::vector<QVec> m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                if (m[col][c] != 0) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// double description: extreme rays of { x : a_i . x >= 0 }
// ---------------------------------------------------------------------------

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    static Bits intersect(const Bits& a, const Bits& b) {
        Bits r(0);
        r.w.resize(a.w.size());
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    static Bits all_set(std::size_t nbits, std::size_t upto) {
        Bits r(nbits);
        for (std::size_t i = 0; i < upto; ++i) r.set(i);
        return r;
    }
};

struct DDRay {
    QVec v;
    Bits active; // tight constraints among those already processed
};

} // namespace detail

struct Cone {
    std::vector<QVec> rays;  // extreme rays, primitive integer vectors, sorted
    std::vector<QVec> lines; // lineality basis; empty for pointed cones
};

inline Cone dd_extreme_rays(const std::vector<QVec>& constraints, int dim) {
    using detail::Bits;
    using detail::DDRay;
    const std::size_t m = constraints.size();

    std::vector<QVec> lines;
    for (int i = 0; i < dim; ++i) {
        QVec e(static_cast<std::size_t>(dim), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (std::size_t ci = 0; ci < m; ++ci) {
        const QVec& a = constraints[ci];

        // A line not orthogonal to the constraint gets consumed: it becomes
        // the one generator on the strict side and everything else is
        // projected into the hyperplane.
        std::size_t crossing = lines.size();
        for (std::size_t li = 0; li < lines.size(); ++li)
            if (dot(a, lines[li]) != 0) { crossing = li; break; }
        if (crossing != lines.size()) {
            QVec l0 = lines[crossing];
            Rational al0 = dot(a, l0);
            if (al0 < 0) {
                for (auto& x : l0) x = -x;
                al0 = -al0;
            }
            lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(crossing));
            for (auto& l : lines) {
                Rational al = dot(a, l);
                if (al == 0) continue;
                for (std::size_t k = 0; k < l.size(); ++k) l[k] = al0 * l[k] - al * l0[k];
                l = primitive(std::move(l));
            }
            for (auto& r : rays) {
                Rational ar = dot(a, r.v);
                if (ar == 0) { r.active.set(ci); continue; }
                for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] = al0 * r.v[k] - ar * l0[k];
                r.v = primitive(std::move(r.v));
                r.active.set(ci);
            }
            DDRay nr;
            nr.v = primitive(std::move(l0));
            nr.active = Bits::all_set(m, ci); // tight on every earlier constraint
            rays.push_back(std::move(nr));
            continue;
        }

        // Lines all lie in the hyperplane; split the rays.
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> plus, zero, minus;
        for (std::size_t ri = 0; ri < rays.size(); ++ri) {
            val[ri] = dot(a, rays[ri].v);
            int s = sgn(val[ri]);
            if (s > 0) plus.push_back(ri);
            else if (s == 0) zero.push_back(ri);
            else minus.push_back(ri);
        }
        if (minus.empty()) {
            for (std::size_t ri : zero) rays[ri].active.set(ci);
            continue;
        }

        auto adjacent = [&](std::size_t p, std::size_t q) {
            Bits z = Bits::intersect(rays[p].active, rays[q].active);
            for (std::size_t r = 0; r < rays.size(); ++r) {
                if (r == p || r == q) continue;
                if (z.subset_of(rays[r].active)) return false;
            }
            return true;
        };

        std::vector<DDRay> fresh;
        for (std::size_t p : plus) {
            for (std::size_t q : minus) {
                if (!adjacent(p, q)) continue;
                QVec w(rays[p].v.size());
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
                w = primitive(std::move(w));
                if (is_zero_vec(w)) continue;
                DDRay nr;
                nr.v = std::move(w);
                nr.active = Bits::intersect(rays[p].active, rays[q].active);
                nr.active.set(ci);
                fresh.push_back(std::move(nr));
            }
        }
        std::vector<DDRay> next;
        for (std::size_t ri : plus) next.push_back(std::move(rays[ri]));
        for (std::size_t ri : zero) {
            rays[ri].active.set(ci);
            next.push_back(std::move(rays[ri]));
        }
        for (auto& r : fresh) next.push_back(std::move(r));
        rays = std::move(next);
    }

    Cone out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.lines = std::move(lines);
    return out;
}

// ---------------------------------------------------------------------------
// polyhedra: paired V- and H-representations
// ---------------------------------------------------------------------------

struct Halfspace {
    QVec normal;
    Rational offset; // meaning: normal . x >= offset
};

struct HPolyhedron {
    int ambient_dim = 0;
    std::vector<Halfspace> halfspaces; // irredundant facet list
};

struct VPolyhedron {
    int ambient_dim = 0;
    std::vector<QVec> vertices; // extreme points, sorted
    std::vector<QVec> rays;     // primitive recession generators, sorted
    HPolyhedron hrep;           // facet description of the same set
};

inline std::vector<QVec> orthant_rays(int dim) {
    std::vector<QVec> rays;
    for (int i = 0; i < dim; ++i) {
        QVec e(static_cast<std::size_t>(dim), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        rays.push_back(std::move(e));
    }
    return rays;
}

inline bool contains_point(const HPolyhedron& H, const QVec& p) {
    for (const auto& h : H.halfspaces)
        if (dot(h.normal, p) < h.offset) return false;
    return true;
}

inline bool contains_ray(const HPolyhedron& H, const QVec& r) {
    for (const auto& h : H.halfspaces)
        if (dot(h.normal, r) < 0) return false;
    return true;
}

namespace detail {

// Facets of cone(generators) via the polar dual; each generator contributes
// one inequality. Returns rays (a) with a . g >= 0 for all generators.
inline Cone facet_cone(const std::vector<QVec>& generators, int dim) {
    return dd_extreme_rays(generators, dim);
}

// Vertex enumeration of { x : normal.x >= offset } via homogenization.
inline std::pair<std::vector<QVec>, std::vector<QVec>> h_to_v(
    const std::vector<Halfspace>& halfspaces, int dim) {
    std::vector<QVec> constraints;
    for (const auto& h : halfspaces) {
        QVec c = h.normal;
        c.push_back(-h.offset);
        constraints.push_back(primitive(std::move(c)));
    }
    QVec last(static_cast<std::size_t>(dim) + 1, Rational(0));
    last.back() = 1;
    constraints.push_back(std::move(last));
    std::sort(constraints.begin(), constraints.end(), lex_less);
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());

    Cone cone = dd_extreme_rays(constraints, dim + 1);
    if (!cone.lines.empty())
        throw internal_error("unexpected lineality in homogenized polyhedron");
    std::vector<QVec> vertices, rays;
    for (const auto& w : cone.rays) {
        Rational lambda = w.back();
        if (lambda > 0) {
            QVec v(w.begin(), w.end() - 1);
            for (auto& x : v) x /= lambda;
            vertices.push_back(std::move(v));
        } else if (lambda == 0) {
            QVec r(w.begin(), w.end() - 1);
            if (!is_zero_vec(r)) rays.push_back(primitive(std::move(r)));
        } else {
            throw internal_error("negative homogenization coordinate in extreme ray");
        }
    }
    std::sort(vertices.begin(), vertices.end(), lex_less);
    std::sort(rays.begin(), rays.end(), lex_less);
    return {std::move(vertices), std::move(rays)};
}

} // namespace detail

// Irredundant V- and H-representation of conv(points) + cone(rays).
// The input must be full-dimensional (always true for the bodies built
// here, whose recession cone is the whole nonnegative orthant).
inline VPolyhedron convex_hull(std::vector<QVec> points, std::vector<QVec> rays) {
    if (points.empty()) throw precondition_error("convex hull of an empty point set");
    const int dim = static_cast<int>(points[0].size());
    if (dim > kMaxAmbientDim)
        throw dimension_too_large("ambient dimension " + std::to_string(dim) + " exceeds the cap of " +
                                  std::to_string(kMaxAmbientDim));
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw precondition_error("mixed point dimensions");
    for (const auto& r : rays)
        if (static_cast<int>(r.size()) != dim) throw precondition_error("mixed ray dimensions");

    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Orthant recession absorbs componentwise-dominated points.
    if (rays == orthant_rays(dim)) {
        std::vector<QVec> kept;
        for (std::size_t i = 0; i < points.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
                if (i == j) continue;
                bool le = true, strict = false;
                for (std::size_t k = 0; k < points[i].size() && le; ++k) {
                    if (points[j][k] > points[i][k]) le = false;
                    else if (points[j][k] < points[i][k]) strict = true;
                }
                if (le && (strict || j < i)) dominated = true;
            }
            if (!dominated) kept.push_back(points[i]);
        }
        points = std::move(kept);
    }

    std::vector<QVec> generators;
    for (const auto& p : points) {
        QVec g = p;
        g.push_back(Rational(1));
        generators.push_back(primitive(std::move(g)));
    }
    for (const auto& r : rays) {
        QVec g = r;
        g.push_back(Rational(0));
        generators.push_back(primitive(std::move(g)));
    }
    std::sort(generators.begin(), generators.end(), lex_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    Cone polar = detail::facet_cone(generators, dim + 1);
    if (!polar.lines.empty())
        throw precondition_error("input is not full-dimensional; convex_hull requires a solid body");

    VPolyhedron P;
    P.ambient_dim = dim;
    P.hrep.ambient_dim = dim;
    for (const auto& f : polar.rays) {
        QVec normal(f.begin(), f.end() - 1);
        if (is_zero_vec(normal)) continue; // homogenization artifact 0.x >= -c
        P.hrep.halfspaces.push_back(Halfspace{std::move(normal), -f.back()});
    }
    std::sort(P.hrep.halfspaces.begin(), P.hrep.halfspaces.end(),
              [](const Halfspace& a, const Halfspace& b) {
                  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
                  return a.offset < b.offset;
              });

    auto [vertices, out_rays] = detail::h_to_v(P.hrep.halfspaces, dim);
    P.vertices = std::move(vertices);
    P.rays = std::move(out_rays);
    if (P.vertices.empty()) throw internal_error("hull lost all vertices");
    return P;
}

// A contained in B, tested against B's facet description.
inline bool polyhedron_subset(const VPolyhedron& A, const VPolyhedron& B) {
    for (const auto& v : A.vertices)
        if (!contains_point(B.hrep, v)) return false;
    for (const auto& r : A.rays)
        if (!contains_ray(B.hrep, r)) return false;
    return true;
}

inline bool polyhedra_equal(const VPolyhedron& A, const VPolyhedron& B) {
    return polyhedron_subset(A, B) && polyhedron_subset(B, A);
}

// Newton polyhedron of a monomial ideal: hull of the minimal generator
// exponents plus the nonnegative orthant.
inline VPolyhedron newton_polyhedron(const HomogeneousIdeal& I) {
    if (!is_monomial_ideal(I)) throw not_monomial("Newton polyhedron requires a monomial ideal");
    std::vector<QVec> points;
    for (const auto& e : minimal_monomial_exponents(I)) {
        QVec p;
        p.reserve(e.size());
        for (int x : e) p.emplace_back(x);
        points.push_back(std::move(p));
    }
    return convex_hull(std::move(points), orthant_rays(I.num_vars));
}

struct SampledBody {
    VPolyhedron body;
    std::optional<bool> stabilized; // hull at t_max equals hull at t_max - 1
    int t_max = 1;
};

// Hull of the scaled semigroup points across all sampled power levels.
inline SampledBody body_from_samples(const std::vector<SemigroupSample>& samples,
                                     const ValuationConfig& cfg) {
    if (samples.empty()) throw precondition_error("no semigroup samples supplied");
    const int dim = cfg.num_vars;
    int t_max = 0;
    for (const auto& s : samples) t_max = std::max(t_max, s.t_level);

    auto points_up_to = [&](int level) {
        std::vector<QVec> pts;
        for (const auto& sample : samples) {
            if (sample.t_level > level) continue;
            for (const auto& [value, s] : sample.points) {
                TauPoint tp = tau_image(value, s, cfg);
                QVec p;
                p.reserve(tp.coords.size());
                for (int x : tp.coords) p.push_back(Rational(x, sample.t_level));
                for (auto& x : p) x.canonicalize();
                pts.push_back(std::move(p));
            }
        }
        return pts;
    };

    std::vector<QVec> all = points_up_to(t_max);
    if (all.empty()) throw precondition_error("semigroup samples contain no points");

    SampledBody out;
    out.t_max = t_max;
    out.body = convex_hull(all, orthant_rays(dim));
    if (t_max >= 2) {
        std::vector<QVec> prev = points_up_to(t_max - 1);
        if (prev.empty()) {
            out.stabilized = std::nullopt;
        } else {
            VPolyhedron prev_body = convex_hull(prev, orthant_rays(dim));
            out.stabilized = polyhedra_equal(prev_body, out.body);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// slices and exact volumes
// ---------------------------------------------------------------------------

// Bounded fiber of the coordinate-sum projection, in the coordinates that
// remain after dropping one.
struct SlicePolytope {
    Rational level;
    std::vector<QVec> vertices;

    bool empty() const { return vertices.empty(); }
};

inline SlicePolytope slice_at_level(const VPolyhedron& P, const Rational& s, int drop_index = 0) {
    const int dim = P.ambient_dim;
    if (drop_index < 0 || drop_index >= dim) throw precondition_error("drop index out of range");
    std::vector<Halfspace> sliced;
    for (const auto& h : P.hrep.halfspaces) {
        const Rational& nd = h.normal[static_cast<std::size_t>(drop_index)];
        QVec normal;
        normal.reserve(static_cast<std::size_t>(dim) - 1);
        for (int i = 0; i < dim; ++i)
            if (i != drop_index) normal.push_back(h.normal[static_cast<std::size_t>(i)] - nd);
        Rational offset = h.offset - nd * s;
        if (is_zero_vec(normal)) {
            if (offset > 0) return SlicePolytope{s, {}}; // infeasible level
            continue;
        }
        sliced.push_back(Halfspace{std::move(normal), std::move(offset)});
    }
    auto [vertices, rays] = detail::h_to_v(sliced, dim - 1);
    if (!rays.empty()) throw internal_error("slice of the body is unbounded");
    return SlicePolytope{s, std::move(vertices)};
}

namespace detail {

// Combinatorial triangulation of conv(pts): star from the first point over
// the facets that do not contain it, recursing on facet charts obtained by
// dropping one coordinate.
inline void triangulate_points(const std::vector<QVec>& pts, const std::vector<std::size_t>& ids,
                               std::vector<std::vector<std::size_t>>& simplices) {
    const std::size_t k = pts[0].size();
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        if (pts[lo][0] != pts[hi][0]) simplices.push_back({ids[lo], ids[hi]});
        return;
    }

    std::vector<QVec> generators;
    for (const auto& p : pts) {
        QVec g = p;
        g.push_back(Rational(1));
        generators.push_back(primitive(std::move(g)));
    }
    std::sort(generators.begin(), generators.end(), lex_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    Cone polar = facet_cone(generators, static_cast<int>(k) + 1);
    if (!polar.lines.empty()) throw internal_error("degenerate facet chart in triangulation");

    for (const auto& f : polar.rays) {
        QVec normal(f.begin(), f.end() - 1);
        if (is_zero_vec(normal)) continue;
        const Rational& c = f.back();
        // Points on this facet: normal . p + c == 0.
        auto on_facet = [&](const QVec& p) { return dot(normal, p) + c == 0; };
        if (on_facet(pts[0])) continue; // apex lies on the facet
        std::size_t chart = normal.size();
        for (std::size_t j = 0; j < normal.size(); ++j)
            if (normal[j] != 0) { chart = j; break; }
        std::vector<QVec> fpts;
        std::vector<std::size_t> fids;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!on_facet(pts[i])) continue;
            QVec q;
            q.reserve(k - 1);
            for (std::size_t j = 0; j < k; ++j)
                if (j != chart) q.push_back(pts[i][j]);
            fpts.push_back(std::move(q));
            fids.push_back(ids[i]);
        }
        std::vector<std::vector<std::size_t>> sub;
        triangulate_points(fpts, fids, sub);
        for (auto& simplex : sub) {
            simplex.push_back(ids[0]);
            simplices.push_back(std::move(simplex));
        }
    }
}

} // namespace detail

// Normalized volume (dim! times the Euclidean volume) of conv(points);
// lower-dimensional sets have volume zero.
inline Rational polytope_normalized_volume(std::vector<QVec> points) {
    if (points.empty()) return Rational(0);
    const std::size_t k = points[0].size();
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= k) return Rational(0);
    if (affine_rank(points) < static_cast<int>(k)) return Rational(0);

    std::vector<std::size_t> ids(points.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<std::vector<std::size_t>> simplices;
    detail::triangulate_points(points, ids, simplices);

    Rational vol(0);
    for (const auto& simplex : simplices) {
        std::vector<QVec> edges;
        const QVec& base = points[simplex.back()]; // apex was appended last
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
            QVec e(k);
            for (std::size_t j = 0; j < k; ++j) e[j] = points[simplex[i]][j] - base[j];
            edges.push_back(std::move(e));
        }
        Rational d = determinant(std::move(edges));
        vol += d < 0 ? -d : d;
    }
    return vol;
}

inline Rational polytope_normalized_volume(const SlicePolytope& Q) {
    return polytope_normalized_volume(Q.vertices);
}

} // namespace nok
