#pragma once

// Polytopes in linked V/H/incidence representation.
//
// A Polytope is only ever produced by convex_hull, so its invariants hold
// by construction: vertices are extreme and sorted lexicographically,
// facets are irredundant relative to the affine hull, each facet normal is
// a primitive integer vector lying in the direction space of the affine
// hull, and incidence is exact.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycalc/double_description.hpp"
#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

/// <normal, x> <= offset, relative to the affine hull of the polytope.
struct Facet {
    RationalVector normal;
    Rational offset;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal == b.normal) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

class Polytope;
Polytope convex_hull(std::vector<RationalVector> points, std::size_t ambient_dim);

class Polytope {
public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    /// Dimension of the affine hull of the vertices.
    int dim() const { return static_cast<int>(aff_.direction_basis.size()); }
    bool full_dimensional() const { return dim() == static_cast<int>(ambient_dim_); }

    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const RationalVector& vertex(std::size_t i) const { return vertices_[i]; }
    std::size_t num_vertices() const { return vertices_.size(); }

    const std::vector<Facet>& facets() const { return facets_; }
    const Facet& facet(std::size_t f) const { return facets_[f]; }
    std::size_t num_facets() const { return facets_.size(); }
    const IntVector& facet_normal_int(std::size_t f) const { return normals_int_[f]; }

    bool incident(std::size_t v, std::size_t f) const { return facet_vertices_[f].test(v); }
    const IndexSet& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }
    const IndexSet& vertex_facets(std::size_t v) const { return vertex_facets_[v]; }

    const AffineSubspace& affine_hull() const { return aff_; }
    /// Orthogonal complement of the direction space of the affine hull.
    const std::vector<RationalVector>& normal_space() const { return normal_space_; }

    std::optional<std::size_t> find_vertex(const RationalVector& p) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
        if (it == vertices_.end() || !(*it == p)) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    IndexSet all_vertices() const { return IndexSet(vertices_.size()).set(); }

    Polytope translated(const RationalVector& t) const {
        std::vector<RationalVector> pts;
        pts.reserve(vertices_.size());
        for (const auto& v : vertices_) pts.push_back(v + t);
        return convex_hull(std::move(pts), ambient_dim_);
    }
    Polytope scaled(const Rational& s) const {
        if (s <= 0) throw DomainError("scaled: factor must be positive");
        std::vector<RationalVector> pts;
        pts.reserve(vertices_.size());
        for (const auto& v : vertices_) pts.push_back(s * v);
        return convex_hull(std::move(pts), ambient_dim_);
    }
    Polytope transformed(const RationalMatrix& m) const {
        if (m.cols() != ambient_dim_ || m.rows() != ambient_dim_)
            throw DimensionMismatch("transformed: matrix does not act on the ambient space");
        std::vector<RationalVector> pts;
        pts.reserve(vertices_.size());
        for (const auto& v : vertices_) pts.push_back(m * v);
        return convex_hull(std::move(pts), ambient_dim_);
    }

    /// Same point set (vertex sets equal).
    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

private:
    friend Polytope convex_hull(std::vector<RationalVector> points, std::size_t ambient_dim);
    Polytope() = default;

    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<IntVector> normals_int_;
    std::vector<IndexSet> facet_vertices_;
    std::vector<IndexSet> vertex_facets_;
    AffineSubspace aff_;
    std::vector<RationalVector> normal_space_;
};

/// Exact convex hull. Lower-dimensional point sets give lower-dimensional
/// polytopes whose facets are taken relative to the affine hull.
inline Polytope convex_hull(std::vector<RationalVector> points, std::size_t ambient_dim) {
    if (points.empty()) throw EmptyInput("convex_hull of an empty point set");
    for (const auto& p : points)
        if (p.size() != ambient_dim)
            throw DimensionMismatch("convex_hull: point of length " + std::to_string(p.size()) +
                                    " in ambient dimension " + std::to_string(ambient_dim));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Polytope poly;
    poly.ambient_dim_ = ambient_dim;

    // Affine hull and a coordinate chart on it.
    IntegerEchelon chart(ambient_dim);
    std::vector<RationalVector> directions;
    for (const auto& p : points) {
        if (chart.full()) break;
        RationalVector diff = p - points.front();
        if (chart.insert(diff)) directions.push_back(std::move(diff));
    }
    const std::size_t r = directions.size();
    poly.aff_ = AffineSubspace{points.front(), directions};
    poly.normal_space_ = r == ambient_dim ? std::vector<RationalVector>{}
                                          : null_space(std::span<const RationalVector>(directions), ambient_dim);

    if (r == 0) {
        poly.vertices_ = {points.front()};
        poly.vertex_facets_ = {IndexSet(0)};
        poly.aff_ = AffineSubspace{points.front(), {}};
        return poly;
    }

    std::vector<std::size_t> chart_cols = chart.pivots();
    std::sort(chart_cols.begin(), chart_cols.end());

    // Homogenised constraint rows (1, y) with y the chart coordinates.
    std::vector<IntVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        RationalVector h(r + 1);
        h[0] = 1;
        for (std::size_t k = 0; k < r; ++k) h[k + 1] = p[chart_cols[k]];
        rows.push_back(primitive_integer(h));
    }
    ConeRays cone = extreme_rays(rows, r + 1);

    // A ray z means alpha.y <= beta with alpha = -(z_1..z_r), beta = z_0.
    struct RawFacet {
        IntVector alpha;
        RationalVector normal;
        Rational offset;
        std::size_t witness;
    };
    std::vector<RawFacet> raw;
    raw.reserve(cone.rays.size());
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
        const IntVector& z = cone.rays[k];
        IntVector alpha(r);
        for (std::size_t c = 0; c < r; ++c) alpha[c] = -z[c + 1];
        make_primitive(alpha);
        RationalVector lifted(ambient_dim);
        for (std::size_t c = 0; c < r; ++c) lifted[chart_cols[c]] = Rational(alpha[c]);
        RationalVector normal =
            r == ambient_dim ? lifted : project_onto_span(lifted, std::span<const RationalVector>(directions));
        normal = to_rational(primitive_integer(normal));
        const std::size_t witness = cone.zero_sets[k].find_first();
        Rational offset = dot(normal, points[witness]);
        raw.push_back({std::move(alpha), std::move(normal), std::move(offset), witness});
    }

    // A point is a vertex iff the facets through it pin it down.
    std::vector<std::vector<std::size_t>> through(points.size());
    for (std::size_t k = 0; k < cone.rays.size(); ++k)
        for (auto i = cone.zero_sets[k].find_first(); i != IndexSet::npos; i = cone.zero_sets[k].find_next(i))
            through[i].push_back(k);
    std::vector<RationalVector> verts;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (through[i].size() < r) continue;
        IntegerEchelon ech(r);
        for (auto k : through[i]) {
            ech.insert(raw[k].alpha);
            if (ech.full()) break;
        }
        if (ech.full()) verts.push_back(points[i]);
    }
    poly.vertices_ = std::move(verts);  // still sorted

    std::vector<Facet> facets;
    facets.reserve(raw.size());
    for (auto& f : raw) facets.push_back({std::move(f.normal), std::move(f.offset)});
    std::sort(facets.begin(), facets.end());
    poly.facets_ = std::move(facets);

    const std::size_t nv = poly.vertices_.size();
    const std::size_t nf = poly.facets_.size();
    poly.facet_vertices_.assign(nf, IndexSet(nv));
    poly.vertex_facets_.assign(nv, IndexSet(nf));
    poly.normals_int_.reserve(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        poly.normals_int_.push_back(primitive_integer(poly.facets_[f].normal));
        for (std::size_t v = 0; v < nv; ++v) {
            if (dot(poly.facets_[f].normal, poly.vertices_[v]) == poly.facets_[f].offset) {
                poly.facet_vertices_[f].set(v);
                poly.vertex_facets_[v].set(f);
            }
        }
    }
    return poly;
}

/// A face as a vertex set, with the facets containing it and its dimension.
/// The empty face has dim -1 and lies in every facet.
struct Face {
    IndexSet vertices;
    IndexSet facets;
    int dim = -1;

    bool empty() const { return vertices.none(); }
    std::vector<std::size_t> vertex_indices() const {
        std::vector<std::size_t> out;
        for (auto i = vertices.find_first(); i != IndexSet::npos; i = vertices.find_next(i)) out.push_back(i);
        return out;
    }
    std::vector<RationalVector> points(const Polytope& p) const {
        std::vector<RationalVector> out;
        for (auto i : vertex_indices()) out.push_back(p.vertex(i));
        return out;
    }

    friend bool operator==(const Face& a, const Face& b) { return a.vertices == b.vertices; }
};

/// Dimension of the face cut out by a set of facets.
inline int face_dim_from_facets(const Polytope& p, const IndexSet& facets) {
    IntegerEchelon ech(p.ambient_dim());
    for (auto f = facets.find_first(); f != IndexSet::npos; f = facets.find_next(f)) {
        ech.insert(p.facet_normal_int(f));
        if (ech.full()) break;
    }
    return p.dim() - static_cast<int>(ech.rank());
}

/// Smallest face containing the given vertices.
inline Face face_of(const Polytope& p, const IndexSet& subset) {
    if (subset.size() != p.num_vertices()) throw DimensionMismatch("face_of: vertex set has the wrong size");
    Face face;
    if (subset.none()) {
        face.vertices = IndexSet(p.num_vertices());
        face.facets = IndexSet(p.num_facets()).set();
        face.dim = -1;
        return face;
    }
    face.facets = IndexSet(p.num_facets());
    face.vertices = p.all_vertices();
    for (std::size_t f = 0; f < p.num_facets(); ++f) {
        if (subset.is_subset_of(p.facet_vertices(f))) {
            face.facets.set(f);
            face.vertices &= p.facet_vertices(f);
        }
    }
    face.dim = face_dim_from_facets(p, face.facets);
    return face;
}

inline Face whole_face(const Polytope& p) { return face_of(p, p.all_vertices()); }

inline bool is_trivial(const Polytope& p, const Face& f) {
    return f.empty() || f.vertices.count() == p.num_vertices();
}

/// x in relint(F): on every facet containing F, strictly inside all others,
/// and inside the affine hull of P.
inline bool in_relative_interior(const Polytope& p, const Face& face, const RationalVector& x) {
    if (x.size() != p.ambient_dim()) throw DimensionMismatch("in_relative_interior: point dimension mismatch");
    if (face.empty()) return false;
    if (p.num_facets() == 0) return x == p.vertex(0);
    if (!p.full_dimensional() && !p.affine_hull().contains(x)) return false;
    for (std::size_t f = 0; f < p.num_facets(); ++f) {
        const Rational slack = dot(p.facet(f).normal, x) - p.facet(f).offset;
        if (face.facets.test(f) ? slack != 0 : slack >= 0) return false;
    }
    return true;
}

/// The origin lies in the relative interior.
inline bool is_centered(const Polytope& p) {
    return in_relative_interior(p, whole_face(p), RationalVector(p.ambient_dim()));
}

/// S(P;c): the face of maximisers of <., c>. c = 0 gives P itself.
inline Face support_set(const Polytope& p, const RationalVector& c) {
    if (c.size() != p.ambient_dim()) throw DimensionMismatch("support_set: direction dimension mismatch");
    IndexSet best(p.num_vertices());
    Rational best_value;
    for (std::size_t v = 0; v < p.num_vertices(); ++v) {
        Rational value = dot(p.vertex(v), c);
        if (best.none() || value > best_value) {
            best.reset();
            best.set(v);
            best_value = std::move(value);
        } else if (value == best_value) {
            best.set(v);
        }
    }
    return face_of(p, best);
}

/// P* = {x : <x, y> <= 1 for all y in P}. Its vertices are the facet
/// normals scaled to offset one.
inline Polytope polar_dual(const Polytope& p) {
    if (!p.full_dimensional())
        throw PreconditionError("polar_dual: polytope is not full-dimensional (dim " + std::to_string(p.dim()) +
                                " in R^" + std::to_string(p.ambient_dim()) + ")");
    if (!is_centered(p)) throw CenteringError("polar_dual: origin is not in the interior, the polar is unbounded");
    std::vector<RationalVector> pts;
    pts.reserve(p.num_facets());
    for (const auto& f : p.facets()) pts.push_back(f.normal * (1 / f.offset));
    return convex_hull(std::move(pts), p.ambient_dim());
}

}  // namespace polycalc
