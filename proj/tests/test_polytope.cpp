#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polycalc/errors.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/polytope.hpp"
#include "polycalc/standard.hpp"

using namespace polycalc;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::set<std::vector<std::size_t>> hull_facet_sets(const Polytope& p) {
    std::set<std::vector<std::size_t>> out;
    for (std::size_t f = 0; f < p.num_facets(); ++f) {
        Face face;
        face.vertices = p.facet_vertices(f);
        out.insert(face.vertex_indices());
    }
    return out;
}

/// Oracle facet sets re-indexed to the hull's vertex numbering.
std::set<std::vector<std::size_t>> oracle_facet_sets(const Polytope& p, const std::vector<RationalVector>& input) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : oracle::facet_vertex_sets(input)) {
        std::vector<std::size_t> ids;
        for (auto i : s)
            if (auto v = p.find_vertex(input[i])) ids.push_back(*v);
        std::sort(ids.begin(), ids.end());
        out.insert(ids);
    }
    return out;
}

std::vector<RationalVector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = Rational(num(rng), den(rng));
        pts.push_back(v);
    }
    return pts;
}

std::vector<Polytope> centered_test_polytopes() {
    std::vector<Polytope> out{cube(2), cube(3), cube(4), cross_polytope(3), cross_polytope(4), simplex(3),
                              simplex(4), tetrahedron_pc()};
    for (std::uint64_t s = 0; s < 4; ++s)
        out.push_back(box(RationalVector{q(-1), q(-2), q(-1, 2)}, RationalVector{q(3), q(1), q(2)})
                          .transformed(random_rational_rotation(3, s)));
    return out;
}

}  // namespace

TEST(ConvexHull, SquarePlusCentreDropsInteriorPoint) {
    const Polytope p = convex_hull({RationalVector{q(0), q(0)}, RationalVector{q(1), q(0)}, RationalVector{q(0), q(1)},
                                    RationalVector{q(1), q(1)}, RationalVector{q(1, 2), q(1, 2)}},
                                   2);
    EXPECT_EQ(p.num_vertices(), 4u);
    EXPECT_EQ(p.num_facets(), 4u);
    EXPECT_FALSE(p.find_vertex(RationalVector{q(1, 2), q(1, 2)}));
}

TEST(ConvexHull, CubeFromSignVectors) {
    const Polytope p = cube(3);
    EXPECT_EQ(p.num_vertices(), 8u);
    EXPECT_EQ(p.num_facets(), 6u);
    EXPECT_EQ(f_vector(build_face_lattice(p)), (std::vector<Integer>{8, 12, 6}));
}

TEST(ConvexHull, SinglePointIsZeroDimensional) {
    const Polytope p = convex_hull({RationalVector{q(2), q(2), q(2)}, RationalVector{q(2), q(2), q(2)}}, 3);
    EXPECT_EQ(p.dim(), 0);
    EXPECT_EQ(p.num_vertices(), 1u);
    EXPECT_EQ(p.num_facets(), 0u);
}

TEST(ConvexHull, LowerDimensionalFacetsAreRelative) {
    // Triangle in the plane z = 1 of R^3: three relative facets (edges).
    const Polytope p = convex_hull({RationalVector{q(0), q(0), q(1)}, RationalVector{q(2), q(0), q(1)},
                                    RationalVector{q(0), q(2), q(1)}, RationalVector{q(1, 2), q(1, 2), q(1)}},
                                   3);
    EXPECT_EQ(p.dim(), 2);
    EXPECT_EQ(p.num_vertices(), 3u);
    EXPECT_EQ(p.num_facets(), 3u);
    for (std::size_t f = 0; f < p.num_facets(); ++f) EXPECT_EQ(p.facet_vertices(f).count(), 2u);
    EXPECT_EQ(p.normal_space().size(), 1u);
}

TEST(ConvexHull, EmptyInputThrows) { EXPECT_THROW(convex_hull({}, 3), EmptyInput); }

TEST(ConvexHull, MixedDimensionsThrow) {
    EXPECT_THROW(convex_hull({RationalVector{q(1), q(0)}, RationalVector{q(1), q(0), q(0)}}, 2), DimensionMismatch);
}

TEST(ConvexHull, MatchesBruteForceFacetOracle) {
    std::mt19937_64 rng(3);
    for (std::size_t d = 2; d <= 4; ++d)
        for (int trial = 0; trial < 12; ++trial) {
            const auto pts = random_points(rng, d + 4 + trial % 4, d);
            const Polytope p = convex_hull(pts, d);
            if (!p.full_dimensional()) continue;
            EXPECT_EQ(hull_facet_sets(p), oracle_facet_sets(p, pts)) << "d=" << d << " trial=" << trial;
        }
}

TEST(ConvexHull, VerticesAreExactlyNonRedundantPoints) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_points(rng, 9, 3);
        const Polytope p = convex_hull(pts, 3);
        for (const auto& x : pts) {
            // x is a vertex iff it is not in the hull of the other points
            std::vector<RationalVector> others;
            for (const auto& y : pts)
                if (y != x) others.push_back(y);
            const Polytope rest = convex_hull(others, 3);
            bool inside = rest.affine_hull().contains(x);
            for (const auto& f : rest.facets()) inside = inside && dot(f.normal, x) <= f.offset;
            EXPECT_EQ(p.find_vertex(x).has_value(), !inside);
        }
    }
}

TEST(ConvexHull, IncidenceIsExact) {
    for (const auto& p : centered_test_polytopes())
        for (std::size_t v = 0; v < p.num_vertices(); ++v)
            for (std::size_t f = 0; f < p.num_facets(); ++f) {
                const Rational lhs = dot(p.facet(f).normal, p.vertex(v));
                EXPECT_LE(lhs, p.facet(f).offset);
                EXPECT_EQ(p.incident(v, f), lhs == p.facet(f).offset);
            }
}

TEST(ConvexHull, Idempotent) {
    for (const auto& p : centered_test_polytopes()) {
        const Polytope again = convex_hull(p.vertices(), p.ambient_dim());
        EXPECT_EQ(again, p);
        EXPECT_EQ(again.facets(), p.facets());
    }
}

TEST(ConvexHull, CubeFVectorMatchesStandardCount) {
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto f = f_vector(build_face_lattice(cube(d)));
        for (std::size_t k = 0; k < d; ++k)
            EXPECT_EQ(f[k], binomial(d, k) * (Integer(1) << (d - k))) << "d=" << d << " k=" << k;
    }
}

TEST(PolarDual, CubeGivesCrossPolytope) {
    const Polytope dual = polar_dual(cube(3));
    EXPECT_EQ(dual, cross_polytope(3));
    EXPECT_EQ(f_vector(build_face_lattice(dual)), (std::vector<Integer>{6, 12, 8}));
}

TEST(PolarDual, TetrahedronGivesReflectedTetrahedron) {
    const Polytope t = tetrahedron_pc();
    const Polytope dual = polar_dual(t);
    EXPECT_EQ(dual.num_vertices(), 4u);
    EXPECT_EQ(dual.num_facets(), 4u);
    std::vector<RationalVector> reflected;
    for (const auto& v : t.vertices()) reflected.push_back(-v);
    EXPECT_EQ(dual, convex_hull(reflected, 3));
}

TEST(PolarDual, AgreesWithBruteForceVertexEnumeration) {
    for (const auto& p : centered_test_polytopes()) {
        const Polytope dual = polar_dual(p);
        const auto expected = oracle::polar_vertices(p);
        EXPECT_EQ(dual.vertices(), expected);
    }
}

TEST(PolarDual, Involution) {
    for (const auto& p : centered_test_polytopes()) EXPECT_EQ(polar_dual(polar_dual(p)), p);
}

TEST(PolarDual, RequiresCenteredFullDimensionalInput) {
    EXPECT_THROW(polar_dual(cube(2).translated(RationalVector{q(1), q(0)})), CenteringError);
    EXPECT_THROW(polar_dual(segment(RationalVector{q(-1), q(0)}, RationalVector{q(1), q(0)})), PreconditionError);
}

TEST(IsCentered, SpecExamples) {
    EXPECT_TRUE(is_centered(cube(3)));
    EXPECT_FALSE(is_centered(cube(2).translated(RationalVector{q(1), q(0)})));
    EXPECT_TRUE(is_centered(segment(RationalVector{q(-1), q(0)}, RationalVector{q(1), q(0)})));
    EXPECT_FALSE(is_centered(segment(RationalVector{q(-1), q(1)}, RationalVector{q(1), q(1)})));
}

TEST(SupportSet, SpecExamples) {
    const Polytope c = cube(3);
    const Face edge = support_set(c, RationalVector{q(1), q(1), q(0)});
    EXPECT_EQ(edge.dim, 1);
    EXPECT_EQ(edge.points(c), (std::vector<RationalVector>{{q(1), q(1), q(-1)}, {q(1), q(1), q(1)}}));
    const Face vertex = support_set(c, RationalVector{q(1), q(2), q(3)});
    EXPECT_EQ(vertex.dim, 0);
    EXPECT_EQ(vertex.points(c), (std::vector<RationalVector>{{q(1), q(1), q(1)}}));
    const Face all = support_set(c, RationalVector(3));
    EXPECT_EQ(all.dim, 3);
    EXPECT_EQ(all.vertices.count(), 8u);
    EXPECT_THROW(support_set(c, RationalVector(2)), DimensionMismatch);
}

TEST(SupportSet, ClosedUnderIncidenceOnRandomDirections) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (const auto& p : centered_test_polytopes())
        for (int trial = 0; trial < 20; ++trial) {
            RationalVector c(p.ambient_dim());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = coef(rng);
            const Face s = support_set(p, c);
            EXPECT_EQ(s.vertex_indices(), oracle::maximisers(p, c));
            IndexSet meet = p.all_vertices();
            for (std::size_t f = 0; f < p.num_facets(); ++f)
                if (s.vertices.is_subset_of(p.facet_vertices(f))) meet &= p.facet_vertices(f);
            EXPECT_EQ(meet, s.vertices);
        }
}

TEST(Standard, CrossAndSimplexShapes) {
    EXPECT_EQ(f_vector(build_face_lattice(cross_polytope(4))), (std::vector<Integer>{8, 24, 32, 16}));
    EXPECT_EQ(f_vector(build_face_lattice(simplex(4))), (std::vector<Integer>{5, 10, 10, 5}));
    EXPECT_TRUE(is_centered(simplex(5)));
    EXPECT_THROW(cube(0), InvalidConstruction);
}

TEST(Standard, TetrahedronIsCenteredAndRegular) {
    const Polytope t = tetrahedron_pc();
    EXPECT_TRUE(is_centered(t));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const RationalVector e = t.vertex(i) - t.vertex(j);
            EXPECT_EQ(dot(e, e), 8);
        }
}

TEST(Standard, CyclicPolytopeIsTwoNeighbourly) {
    std::vector<Rational> ts;
    for (long t = 1; t <= 6; ++t) ts.emplace_back(t);
    const Polytope p = cyclic_polytope(4, ts);
    ASSERT_EQ(p.num_vertices(), 6u);
    // (t-a)^2 (t-b)^2 >= 0 vanishes only at a and b, so minimising it over
    // the moment curve is a linear functional exposing the pair {a, b}.
    for (long a = 1; a <= 6; ++a)
        for (long b = a + 1; b <= 6; ++b) {
            const Rational s = a + b, p2 = a * a + b * b + 4 * a * b, s3 = 2 * a * b * (a + b);
            // (t-a)^2 (t-b)^2 = t^4 - 2s t^3 + (a^2+b^2+4ab) t^2 - 2ab(a+b) t + a^2 b^2
            const RationalVector c{s3, -p2, 2 * s, q(-1)};
            const Face f = support_set(p, c);
            EXPECT_EQ(f.points(p), (std::vector<RationalVector>{moment_curve_point(a, 4), moment_curve_point(b, 4)}));
            EXPECT_EQ(f.dim, 1);
        }
}

TEST(Standard, DuplicateParametersRejected) {
    const std::vector<Rational> ts{q(1), q(2), q(1)};
    EXPECT_THROW(cyclic_polytope(4, ts), InvalidConstruction);
    EXPECT_THROW(polygon_halfcircle(ts, 0, 3), InvalidConstruction);
}

TEST(Standard, HalfCirclePolygonLiesInItsPlane) {
    const std::vector<Rational> ts{q(1, 3), q(1, 2), q(1), q(2)};
    const Polytope p = polygon_halfcircle(ts, 1, 4);
    EXPECT_EQ(p.dim(), 2);
    EXPECT_EQ(p.num_vertices(), 4u);
    for (const auto& v : p.vertices()) {
        EXPECT_EQ(v[0], 0);
        EXPECT_EQ(v[2], 0);
        EXPECT_EQ(v[1] * v[1] + v[3] * v[3], 1);
    }
}

TEST(Transforms, TranslateScaleRotate) {
    const Polytope c = cube(3);
    const Polytope shifted = c.translated(RationalVector{q(1), q(2), q(3)});
    EXPECT_EQ(shifted.vertex(0), (RationalVector{q(0), q(1), q(2)}));
    EXPECT_EQ(c.scaled(q(1, 2)).vertex(0), (RationalVector{q(-1, 2), q(-1, 2), q(-1, 2)}));
    EXPECT_THROW(c.scaled(q(0)), DomainError);
    const Polytope r = c.transformed(random_rational_rotation(3, 1));
    EXPECT_EQ(f_vector(build_face_lattice(r)), (std::vector<Integer>{8, 12, 6}));
}
