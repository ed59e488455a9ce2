#pragma once

// Constructions attaining the trivial upper bounds on face numbers of
// Minkowski sums, and checkers for the face relations of sums in R^3.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/polytope.hpp"
#include "polycalc/standard.hpp"

namespace polycalc {

/// Polygons P_i on the rational unit half-circle in span(e_i, e_d),
/// all sharing the last axis.
struct HalfCircleFamily {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rational>> params;
    std::vector<Polytope> polygons;

    std::vector<std::size_t> counts() const {
        std::vector<std::size_t> out;
        for (const auto& t : params) out.push_back(t.size());
        return out;
    }
};

inline HalfCircleFamily build_halfcircle_family(std::size_t d, std::vector<std::vector<Rational>> params) {
    if (d < 3) throw InvalidConstruction("half-circle family needs d >= 3");
    if (params.empty() || params.size() > d - 1)
        throw InvalidConstruction("half-circle family takes between 1 and d-1 polygons");
    for (const auto& ts : params) {
        if (ts.empty()) throw InvalidConstruction("half-circle family: empty parameter list");
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (ts[j] <= 0) throw InvalidConstruction("half-circle family: parameters must be positive");
            if (j > 0 && !(ts[j - 1] < ts[j]))
                throw InvalidConstruction("half-circle family: parameters must be strictly increasing");
        }
    }
    HalfCircleFamily family{d, std::move(params), {}};
    for (std::size_t i = 0; i < family.params.size(); ++i) {
        Polytope poly = polygon_halfcircle(family.params[i], i, d);
        if (poly.num_vertices() != family.params[i].size())
            throw std::logic_error("half-circle family: a circle point is not extreme");
        // Each vertex lies in its own normal cone.
        for (std::size_t v = 0; v < poly.num_vertices(); ++v) {
            const Face s = support_set(poly, poly.vertex(v));
            if (s.vertices.count() != 1 || !s.vertices.test(v))
                throw std::logic_error("half-circle family: vertex outside its normal cone");
        }
        family.polygons.push_back(std::move(poly));
    }
    return family;
}

struct VertexBoundReport {
    Integer vertices = 0;
    Integer bound = 0;
    bool attained() const { return vertices == bound; }
};

inline VertexBoundReport verify_vertex_bound_attained(const HalfCircleFamily& family) {
    const SumContext ctx = minkowski_sum(family.polygons);
    const auto counts = family.counts();
    return {Integer(ctx.sum.num_vertices()), trivial_vertex_bound(counts)};
}

struct ThreeDRelationsReport {
    bool general_position = false;
    std::vector<Integer> sum_f;
    std::vector<std::vector<Integer>> summand_f;
    /// Left minus right side of the three identities.
    std::vector<Integer> residuals;
    Integer pure_formula = 0;   // sum of f_2(P_i)
    Rational mixed_formula;     // (f_1(P) - sum f_1(P_i)) / 2
    Integer pure_observed = 0;  // facets decomposing as one facet plus vertices
    Integer mixed_observed = 0; // facets decomposing as two edges plus vertices

    bool residuals_zero() const {
        for (const auto& r : residuals)
            if (r != 0) return false;
        return true;
    }
    bool accounting_ok() const {
        return pure_observed == pure_formula && Rational(mixed_observed) == mixed_formula &&
               sum_f[2] == pure_observed + mixed_observed;
    }
};

inline void require_3d(std::span<const Polytope> polys, const std::string& who) {
    for (const auto& p : polys)
        if (p.ambient_dim() != 3 || p.dim() != 3)
            throw PreconditionError(who + ": every summand must be a 3-polytope in R^3");
}

inline ThreeDRelationsReport check_3d_relations(const std::vector<Polytope>& summands) {
    if (summands.empty()) throw EmptyInput("check_3d_relations: no summands");
    require_3d(summands, "check_3d_relations");
    const SumContext ctx = minkowski_sum(summands);
    ThreeDRelationsReport r;
    r.general_position = relatively_in_general_position(ctx).in_general_position;
    r.sum_f = f_vector(build_face_lattice(ctx.sum));
    Integer rhs1 = 0, rhs2 = 0, rhs3 = 0, sum_f1 = 0;
    for (const auto& p : summands) {
        auto f = f_vector(build_face_lattice(p));
        rhs1 += 2 * f[2] - f[1];
        rhs2 += f[2] - f[0] + 2;
        rhs3 += f[1] - 2 * f[0] + 4;
        r.pure_formula += f[2];
        sum_f1 += f[1];
        r.summand_f.push_back(std::move(f));
    }
    const auto& f = r.sum_f;
    r.residuals = {2 * f[2] - f[1] - rhs1, f[2] - f[0] + 2 - rhs2, f[1] - 2 * f[0] + 4 - rhs3};
    r.mixed_formula = Rational(f[1] - sum_f1, 2);

    for (std::size_t k = 0; k < ctx.sum.num_facets(); ++k) {
        const auto dec = decompose_face(ctx, face_of(ctx.sum, ctx.sum.facet_vertices(k)));
        int twos = 0, ones = 0, others = 0;
        for (const auto& part : dec.parts) {
            if (part.dim == 2) ++twos;
            else if (part.dim == 1) ++ones;
            else if (part.dim != 0) ++others;
        }
        if (others == 0 && twos == 1 && ones == 0) r.pure_observed += 1;
        if (others == 0 && twos == 0 && ones == 2) r.mixed_observed += 1;
    }
    return r;
}

struct FacetEdgeBoundReport {
    std::vector<Integer> sum_f;
    Integer facet_bound = 0;  // f0 f0' + f0 + f0' - 6
    Integer edge_bound = 0;   // 2 f0 f0' + f0 + f0' - 8
    bool holds() const { return sum_f[2] <= facet_bound && sum_f[1] <= edge_bound; }
    bool attained() const { return sum_f[2] == facet_bound && sum_f[1] == edge_bound; }
    Integer facet_slack() const { return facet_bound - sum_f[2]; }
    Integer edge_slack() const { return edge_bound - sum_f[1]; }
};

inline Integer facet_bound_3d(std::size_t a, std::size_t b) { return Integer(a * b + a + b) - 6; }
inline Integer edge_bound_3d(std::size_t a, std::size_t b) { return Integer(2 * a * b + a + b) - 8; }

inline FacetEdgeBoundReport facet_edge_bounds_3d(const Polytope& p1, const Polytope& p2) {
    const std::vector<Polytope> pair{p1, p2};
    require_3d(pair, "facet_edge_bounds_3d");
    const SumContext ctx = minkowski_sum(pair);
    FacetEdgeBoundReport r;
    r.sum_f = f_vector(build_face_lattice(ctx.sum));
    r.facet_bound = facet_bound_3d(p1.num_vertices(), p2.num_vertices());
    r.edge_bound = edge_bound_3d(p1.num_vertices(), p2.num_vertices());
    return r;
}

struct FacetBoundWitness {
    Polytope first;
    Polytope second;
    Rational first_lift;
    Rational second_lift;
    std::size_t pattern = 0;
    FacetEdgeBoundReport report;
};

/// Tetrahedra built from half-circle quadrilaterals lifted off their plane
/// by lift * pattern_j along the remaining axis. Searches lifts 1/2, 1/4,
/// ..., 2^-depth for each sign pattern until both bounds are attained.
inline std::optional<FacetBoundWitness> search_facet_bound_witness(std::size_t depth = 6) {
    const std::vector<Rational> ts{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
    const std::vector<std::vector<int>> patterns{{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}};
    auto lifted = [&](std::size_t plane_axis, std::size_t lift_axis, const Rational& lift,
                      const std::vector<int>& pattern) {
        std::vector<RationalVector> pts;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const RationalVector c = rational_circle_point(ts[j]);
            RationalVector v(3);
            v[plane_axis] = c[0];
            v[2] = c[1];
            v[lift_axis] = lift * pattern[j];
            pts.push_back(std::move(v));
        }
        return convex_hull(std::move(pts), 3);
    };
    std::vector<Rational> lifts;
    for (std::size_t k = 1; k <= depth; ++k) lifts.push_back(Rational(1, Integer(1) << k));
    for (std::size_t pi = 0; pi < patterns.size(); ++pi)
        for (const auto& a : lifts)
            for (const auto& b : lifts) {
                Polytope p1 = lifted(0, 1, a, patterns[pi]);
                Polytope p2 = lifted(1, 0, b, patterns[pi]);
                if (p1.dim() != 3 || p2.dim() != 3 || p1.num_vertices() != 4 || p2.num_vertices() != 4) continue;
                FacetEdgeBoundReport r = facet_edge_bounds_3d(p1, p2);
                if (r.attained()) return FacetBoundWitness{std::move(p1), std::move(p2), a, b, pi, std::move(r)};
            }
    return std::nullopt;
}

inline std::vector<Polytope> build_cyclic_family(std::size_t d, const std::vector<std::vector<Rational>>& params) {
    if (d < 4) throw InvalidConstruction("cyclic family needs d >= 4");
    if (params.empty() || params.size() > d / 2)
        throw InvalidConstruction("cyclic family takes between 1 and floor(d/2) polytopes");
    std::set<Rational> seen;
    std::size_t total = 0;
    for (const auto& ts : params) {
        if (ts.empty()) throw InvalidConstruction("cyclic family: empty parameter list");
        seen.insert(ts.begin(), ts.end());
        total += ts.size();
    }
    if (seen.size() != total) throw InvalidConstruction("cyclic family: moment-curve parameters must be distinct");
    std::vector<Polytope> family;
    for (const auto& ts : params) family.push_back(cyclic_polytope(d, ts));
    return family;
}

struct KFaceBoundReport {
    std::size_t k = 0;
    Integer faces = 0;
    Integer bound = 0;
    bool attained() const { return faces == bound; }
};

/// Checks f_k(sum) = trivial bound for every 0 <= k <= floor(d/2) - n.
inline std::vector<KFaceBoundReport> verify_kface_bounds_attained(const std::vector<Polytope>& family) {
    if (family.empty()) throw EmptyInput("verify_kface_bounds_attained: empty family");
    const std::size_t d = family.front().ambient_dim();
    const std::size_t n = family.size();
    if (n > d / 2) throw PreconditionError("verify_kface_bounds_attained: too many summands for the dimension");
    std::vector<std::size_t> f0;
    for (const auto& p : family) f0.push_back(p.num_vertices());
    const SumContext ctx = minkowski_sum(family);
    const auto f = f_vector(build_face_lattice(ctx.sum));
    std::vector<KFaceBoundReport> out;
    for (std::size_t k = 0; k + n <= d / 2; ++k) out.push_back({k, f[k], trivial_kface_bound(f0, k)});
    return out;
}

inline KFaceBoundReport verify_kface_bound_attained(const std::vector<Polytope>& family, std::size_t k) {
    if (family.empty()) throw EmptyInput("verify_kface_bound_attained: empty family");
    const std::size_t d = family.front().ambient_dim();
    if (k + family.size() > d / 2) throw PreconditionError("verify_kface_bound_attained: k exceeds floor(d/2) - n");
    return verify_kface_bounds_attained(family).at(k);
}

/// Every m-subset of vertices is exactly the vertex set of a face.
inline bool is_neighbourly(const Polytope& p, std::size_t m) {
    const std::size_t n = p.num_vertices();
    if (m > n) return false;
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    for (;;) {
        IndexSet s(n);
        for (auto i : pick) s.set(i);
        if (face_of(p, s).vertices != s) return false;
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == n - m + i - 1) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace polycalc
