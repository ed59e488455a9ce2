#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polycalc/errors.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/standard.hpp"

using namespace polycalc;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::vector<Polytope> sample_polytopes() {
    std::vector<Polytope> out{cube(2), cube(3), cube(4), cross_polytope(3), cross_polytope(4), tetrahedron_pc(),
                              simplex(4)};
    std::vector<Rational> ts;
    for (long t = -3; t <= 3; ++t) ts.emplace_back(t);
    out.push_back(cyclic_polytope(4, ts));
    out.push_back(box(RationalVector{q(-1), q(-2), q(-1, 2)}, RationalVector{q(3), q(1), q(2)})
                      .transformed(random_rational_rotation(3, 9)));
    return out;
}

Face face_from_indices(const Polytope& p, std::initializer_list<RationalVector> pts) {
    IndexSet s(p.num_vertices());
    for (const auto& x : pts) s.set(*p.find_vertex(x));
    return face_of(p, s);
}

}  // namespace

TEST(FaceLattice, CubeCounts) {
    const FaceLattice l = build_face_lattice(cube(3));
    EXPECT_EQ(f_vector(l), (std::vector<Integer>{8, 12, 6}));
    EXPECT_EQ(l.size(), 28u);
    EXPECT_TRUE(l.faces[l.bottom()].empty());
    EXPECT_EQ(l.faces[l.top()].dim, 3);
    EXPECT_EQ(euler_residual(l), 0);
}

TEST(FaceLattice, TetrahedronVertexCoveredByThreeEdges) {
    const FaceLattice l = build_face_lattice(tetrahedron_pc());
    EXPECT_EQ(f_vector(l), (std::vector<Integer>{4, 6, 4}));
    for (auto v : l.of_dim(0)) {
        int up = 0;
        for (const auto& [lo, hi] : l.covers)
            if (lo == v) ++up;
        EXPECT_EQ(up, 3);
    }
}

TEST(FaceLattice, CyclicFourSixIsNeighbourly) {
    std::vector<Rational> ts;
    for (long t = 1; t <= 6; ++t) ts.emplace_back(t);
    const FaceLattice l = build_face_lattice(cyclic_polytope(4, ts));
    EXPECT_EQ(f_vector(l)[1], binomial(6, 2));
    EXPECT_EQ(euler_residual(l), 0);
}

TEST(FaceLattice, CrossPolytopeFour) {
    const FaceLattice l = build_face_lattice(cross_polytope(4));
    EXPECT_EQ(f_vector(l), (std::vector<Integer>{8, 24, 32, 16}));
    EXPECT_EQ(euler_residual(l), 0);
}

TEST(FaceLattice, EulerResidualOfSums) {
    const SumContext ctx = minkowski_sum({cube(3), tetrahedron_pc().transformed(random_rational_rotation(3, 2))});
    EXPECT_EQ(euler_residual(build_face_lattice(ctx.sum)), 0);
    const std::vector<Integer> bad{8, 12, 7};
    EXPECT_EQ(euler_residual(bad, 3), 1);
}

TEST(FaceLattice, LowerDimensionalPolygon) {
    const std::vector<Rational> ts{q(1, 3), q(1, 2), q(1), q(2), q(3)};
    const FaceLattice l = build_face_lattice(polygon_halfcircle(ts, 0, 4));
    EXPECT_EQ(l.dim, 2);
    EXPECT_EQ(f_vector(l), (std::vector<Integer>{5, 5}));
    EXPECT_EQ(euler_residual(l), 0);
}

TEST(FaceLattice, DimensionsAgreeWithAffineHullRank) {
    for (const auto& p : sample_polytopes()) {
        const FaceLattice l = build_face_lattice(p);
        for (const auto& f : l.faces) {
            if (f.empty()) continue;
            const auto pts = f.points(p);
            EXPECT_EQ(f.dim, affine_hull(pts).dim());
        }
    }
}

TEST(FaceLattice, MatchesBruteForceFaceEnumeration) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t d = 3 + trial % 2;
        std::vector<RationalVector> pts;
        for (int i = 0; i < 9; ++i) {
            RationalVector v(d);
            for (std::size_t c = 0; c < d; ++c) v[c] = Rational(num(rng), den(rng));
            pts.push_back(v);
        }
        const Polytope p = convex_hull(pts, d);
        ASSERT_TRUE(p.full_dimensional());
        // faces: empty set, P, and every nonempty intersection of oracle facets
        std::vector<std::vector<std::size_t>> facet_sets;
        for (const auto& s : oracle::facet_vertex_sets(p.vertices())) facet_sets.push_back(s);
        std::set<std::vector<std::size_t>> expected{{}};
        std::vector<std::size_t> all(p.num_vertices());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        expected.insert(all);
        const std::size_t n = p.num_vertices();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i);
            std::vector<std::size_t> meet = all;
            for (const auto& f : facet_sets)
                if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
                    std::vector<std::size_t> next;
                    std::set_intersection(meet.begin(), meet.end(), f.begin(), f.end(), std::back_inserter(next));
                    meet = next;
                }
            if (meet == s) expected.insert(s);
        }
        std::set<std::vector<std::size_t>> computed;
        for (const auto& f : build_face_lattice(p).faces) computed.insert(f.vertex_indices());
        EXPECT_EQ(computed, expected) << "trial " << trial;
    }
}

TEST(FaceLattice, DiamondProperty) {
    for (const auto& p : sample_polytopes()) EXPECT_TRUE(has_diamond_property(build_face_lattice(p)));
}

TEST(FaceLattice, CoversDifferByOneDimension) {
    for (const auto& p : sample_polytopes()) {
        const FaceLattice l = build_face_lattice(p);
        for (const auto& [lo, hi] : l.covers) {
            EXPECT_EQ(l.faces[lo].dim + 1, l.faces[hi].dim);
            EXPECT_TRUE(l.faces[lo].vertices.is_subset_of(l.faces[hi].vertices));
        }
    }
}

TEST(FaceLattice, TextAndDotExport) {
    const FaceLattice l = build_face_lattice(segment(RationalVector{q(0)}, RationalVector{q(1)}));
    EXPECT_EQ(lattice_to_text(l), "-1:\n0: 0\n0: 1\n1: 0 1\n");
    const std::string dot = lattice_to_dot(l);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
}

TEST(NormalCone, CubeVertexAndFacet) {
    const Polytope c = cube(3);
    const Cone vertex_cone = normal_cone(c, face_from_indices(c, {{q(1), q(1), q(1)}}));
    std::set<RationalVector> gens(vertex_cone.generators().begin(), vertex_cone.generators().end());
    EXPECT_EQ(gens, (std::set<RationalVector>{RationalVector::unit(3, 0), RationalVector::unit(3, 1),
                                              RationalVector::unit(3, 2)}));
    const Face facet = support_set(c, RationalVector::unit(3, 0));
    const Cone facet_cone = normal_cone(c, facet);
    ASSERT_EQ(facet_cone.generators().size(), 1u);
    EXPECT_EQ(facet_cone.generators()[0], RationalVector::unit(3, 0));
}

TEST(NormalCone, TetrahedronEdgeHasTwoGenerators) {
    const Polytope t = tetrahedron_pc();
    const FaceLattice l = build_face_lattice(t);
    for (auto e : l.of_dim(1)) {
        const Cone c = normal_cone(t, l.faces[e]);
        EXPECT_EQ(c.generators().size(), 2u);
        EXPECT_EQ(c.dim(), 2);
    }
}

TEST(NormalCone, TrivialFacesRejected) {
    const Polytope c = cube(2);
    EXPECT_THROW(normal_cone(c, whole_face(c)), TrivialFaceError);
    EXPECT_THROW(normal_cone(c, face_of(c, IndexSet(c.num_vertices()))), TrivialFaceError);
}

TEST(NormalCone, InteriorPoint) {
    const Cone two(3, {RationalVector::unit(3, 0), RationalVector::unit(3, 1)});
    EXPECT_EQ(cone_interior_point(two), (RationalVector{q(1), q(1), q(0)}));
    const RationalVector g{q(2), q(-1, 3)};
    EXPECT_EQ(cone_interior_point(Cone(2, {g})), g);
    EXPECT_THROW(cone_interior_point(Cone(2, {})), DomainError);
    EXPECT_TRUE(two.relint_contains(RationalVector{q(1), q(5), q(0)}));
    EXPECT_FALSE(two.relint_contains(RationalVector{q(1), q(0), q(0)}));
    EXPECT_TRUE(two.contains(RationalVector{q(1), q(0), q(0)}));
}

TEST(NormalCone, ClosureOrderEquivalence) {
    for (const auto& p : {cube(3), tetrahedron_pc(), cross_polytope(3), simplex(4)}) {
        const FaceLattice l = build_face_lattice(p);
        const auto nt = l.nontrivial();
        std::vector<Cone> cones;
        for (auto i : nt) cones.push_back(normal_cone(p, l.faces[i]));
        for (std::size_t a = 0; a < nt.size(); ++a)
            for (std::size_t b = 0; b < nt.size(); ++b) {
                const bool sub = l.faces[nt[a]].vertices.is_subset_of(l.faces[nt[b]].vertices);
                EXPECT_EQ(sub, cones[a].contains(cones[b]));  // G ⊆ F iff N(F) ⊆ N(G)
            }
    }
}

TEST(NormalCone, FanIsCompleteAndSupportSetsExposeFaces) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> num(-1000, 1000);
    for (const auto& p : sample_polytopes()) {
        for (int trial = 0; trial < 20; ++trial) {
            RationalVector c(p.ambient_dim());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(num(rng), 997);
            if (c.is_zero()) continue;
            const Face s = support_set(p, c);
            if (p.full_dimensional()) {
                EXPECT_EQ(s.dim, 0);
            }
            EXPECT_TRUE(normal_cone(p, s).relint_contains(c));
        }
    }
}

TEST(DualFace, CubeExamples) {
    const Polytope c = cube(3);
    const Polytope dual = polar_dual(c);
    const Face corner = dual_face(c, dual, face_from_indices(c, {{q(1), q(1), q(1)}}));
    EXPECT_EQ(corner.dim, 2);
    EXPECT_EQ(corner.points(dual), (std::vector<RationalVector>{RationalVector::unit(3, 2), RationalVector::unit(3, 1),
                                                                RationalVector::unit(3, 0)}));
    const Face tip = dual_face(c, dual, support_set(c, RationalVector::unit(3, 0)));
    EXPECT_EQ(tip.points(dual), (std::vector<RationalVector>{RationalVector::unit(3, 0)}));
    EXPECT_THROW(dual_face(c, dual, whole_face(c)), TrivialFaceError);
}

TEST(DualFace, DimensionsAreComplementary) {
    for (const auto& p : {cube(3), cube(4), tetrahedron_pc(), cross_polytope(4), simplex(4)}) {
        const Polytope dual = polar_dual(p);
        const FaceLattice l = build_face_lattice(p);
        const int d = static_cast<int>(p.ambient_dim());
        for (auto i : l.nontrivial()) EXPECT_EQ(l.faces[i].dim + dual_face(p, dual, l.faces[i]).dim, d - 1);
    }
}
