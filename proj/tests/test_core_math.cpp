#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/lp.hpp"
#include "polycalc/rational.hpp"

using namespace polycalc;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

RationalMatrix mat(std::initializer_list<RationalVector> rows) {
    std::vector<RationalVector> r(rows);
    return RationalMatrix::from_rows(r);
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/4"), q(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
    EXPECT_EQ(parse_rational("7"), q(7));
    EXPECT_EQ(parse_rational("0.5"), q(1, 2));
    EXPECT_EQ(parse_rational("-3.5"), q(-7, 2));
    EXPECT_EQ(to_string(q(-3, 4)), "-3/4");
    EXPECT_EQ(to_string(q(4, 2)), "2");
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, ArithmeticIsExactOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        EXPECT_EQ((a + b) - b, a);
        if (b != 0) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(RationalVector, OperationsAndDimensionChecks) {
    const RationalVector a{q(1), q(2), q(3)}, b{q(1, 2), q(0), q(-1)};
    EXPECT_EQ(dot(a, b), q(-5, 2));
    EXPECT_EQ(a + b, (RationalVector{q(3, 2), q(2), q(2)}));
    EXPECT_EQ(a * q(2), (RationalVector{q(2), q(4), q(6)}));
    EXPECT_THROW(dot(a, RationalVector{q(1)}), DimensionMismatch);
    EXPECT_EQ(primitive_integer(RationalVector{q(1, 2), q(-1, 3), q(0)}), (IntVector{3, -2, 0}));
}

TEST(Rank, SpecExamples) {
    const std::vector<RationalVector> id{{q(1), q(0)}, {q(0), q(1)}};
    const std::vector<RationalVector> col{{q(1), q(1)}, {q(2), q(2)}};
    const std::vector<RationalVector> none;
    EXPECT_EQ(rank(id), 2u);
    EXPECT_EQ(rank(col), 1u);
    EXPECT_EQ(rank(none), 0u);
}

TEST(Rank, MismatchedRowLengthsThrow) {
    const std::vector<RationalVector> rows{{q(1), q(0)}, {q(0), q(1), q(2)}};
    EXPECT_THROW(rank(rows), DimensionMismatch);
}

TEST(Rank, InvariantUnderRowScaling) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RationalVector> rows;
        for (int i = 0; i < 4; ++i) {
            RationalVector r(5);
            for (std::size_t c = 0; c < 5; ++c) r[c] = random_rational(rng);
            rows.push_back(r);
        }
        rows.push_back(rows[0] + rows[1] * q(3, 7));
        auto scaled = rows;
        for (auto& r : scaled) {
            Rational s = random_rational(rng);
            if (s == 0) s = 1;
            r *= s;
        }
        EXPECT_EQ(rank(rows), rank(scaled));
        EXPECT_LE(rank(rows), 4u);
    }
}

TEST(LinearAlgebra, SolveInverseDeterminantNullSpace) {
    const RationalMatrix a = mat({{q(2), q(1)}, {q(1), q(3)}});
    EXPECT_EQ(determinant(a), q(5));
    const auto x = solve(a, RationalVector{q(3), q(4)});
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, (RationalVector{q(3), q(4)}));
    const auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(a * *inv, RationalMatrix::identity(2));
    EXPECT_FALSE(inverse(mat({{q(1), q(2)}, {q(2), q(4)}})));

    const std::vector<RationalVector> rows{{q(1), q(1), q(1)}};
    const auto ns = null_space(rows, 3);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_EQ(dot(v, rows[0]), 0);
    EXPECT_EQ(rank(ns), 2u);
}

TEST(AffineHull, SpecExamples) {
    const std::vector<RationalVector> line{{q(1), q(0)}, {q(0), q(1)}};
    const std::vector<RationalVector> point{{q(2), q(2), q(2)}};
    const std::vector<RationalVector> tri{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}};
    EXPECT_EQ(affine_hull(line).dim(), 1);
    EXPECT_EQ(affine_hull(point).dim(), 0);
    EXPECT_EQ(affine_hull(tri).dim(), 2);
    EXPECT_TRUE(affine_hull(line).contains(RationalVector{q(1, 2), q(1, 2)}));
    EXPECT_FALSE(affine_hull(line).contains(RationalVector{q(1), q(1)}));
}

TEST(AffineHull, EmptyInputThrows) {
    const std::vector<RationalVector> none;
    EXPECT_THROW(affine_hull(none), EmptyInput);
}

TEST(Projection, OriginOntoPlane) {
    const AffineSubspace plane{RationalVector{q(3), q(0), q(0)},
                               {RationalVector{q(1), q(-1), q(0)}, RationalVector{q(1), q(0), q(-1)}}};
    EXPECT_EQ(project_onto_affine(RationalVector(3), plane), (RationalVector{q(1), q(1), q(1)}));
    const RationalVector inside{q(1), q(2), q(0)};
    EXPECT_EQ(project_onto_affine(inside, plane), inside);
}

TEST(Projection, OrthogonalityResidualIsZero) {
    const AffineSubspace line{RationalVector{q(1), q(1)}, {RationalVector{q(1), q(-1)}}};
    const RationalVector p = project_onto_affine(RationalVector(2), line);
    EXPECT_TRUE(line.contains(p));
    EXPECT_EQ(dot(p, line.direction_basis[0]), 0);
    EXPECT_EQ(p, (RationalVector{q(1), q(1)}));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<RationalVector> pts;
        for (int i = 0; i < 3; ++i) {
            RationalVector v(4);
            for (std::size_t c = 0; c < 4; ++c) v[c] = random_rational(rng);
            pts.push_back(v);
        }
        const AffineSubspace a = affine_hull(pts);
        RationalVector x(4);
        for (std::size_t c = 0; c < 4; ++c) x[c] = random_rational(rng);
        const RationalVector proj = project_onto_affine(x, a);
        EXPECT_TRUE(a.contains(proj));
        for (const auto& b : a.direction_basis) EXPECT_EQ(dot(x - proj, b), 0);
    }
}

TEST(Projection, DimensionMismatchThrows) {
    const AffineSubspace line{RationalVector{q(1), q(1)}, {RationalVector{q(1), q(-1)}}};
    EXPECT_THROW(project_onto_affine(RationalVector(3), line), DimensionMismatch);
}

TEST(CirclePoint, SpecExamples) {
    EXPECT_EQ(rational_circle_point(q(1)), (RationalVector{q(0), q(1)}));
    EXPECT_EQ(rational_circle_point(q(1, 2)), (RationalVector{q(3, 5), q(4, 5)}));
    EXPECT_EQ(rational_circle_point(q(2)), (RationalVector{q(-3, 5), q(4, 5)}));
    EXPECT_THROW(rational_circle_point(q(0)), DomainError);
    EXPECT_THROW(rational_circle_point(q(-1, 3)), DomainError);
}

TEST(CirclePoint, UnitNormAndAngleOrder) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(1, 400), den(1, 60);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        const RationalVector p = rational_circle_point(a), r = rational_circle_point(b);
        EXPECT_EQ(dot(p, p), 1);
        EXPECT_GT(p[1], 0);
        // increasing t turns counter-clockwise
        EXPECT_GT(p[0] * r[1] - p[1] * r[0], 0);
    }
}

TEST(Cayley, ZeroGivesIdentity) {
    const auto qm = cayley_transform(RationalMatrix(3, 3));
    ASSERT_TRUE(qm);
    EXPECT_EQ(*qm, RationalMatrix::identity(3));
}

TEST(Cayley, HandEvaluatedTwoByTwo) {
    // (I - A)(I + A)^{-1} with A = [[0,1/2],[-1/2,0]]:
    // I - A = [[1,-1/2],[1/2,1]], (I + A)^{-1} = (4/5)[[1,-1/2],[1/2,1]].
    const auto qm = cayley_transform(mat({{q(0), q(1, 2)}, {q(-1, 2), q(0)}}));
    ASSERT_TRUE(qm);
    EXPECT_EQ(*qm, mat({{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}}));
}

TEST(Cayley, RejectsNonSkewInput) {
    EXPECT_THROW(cayley_transform(mat({{q(1), q(0)}, {q(0), q(0)}})), DomainError);
}

TEST(RandomRotation, OrthogonalWithUnitDeterminant) {
    for (std::size_t d = 2; d <= 5; ++d)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const RationalMatrix m = random_rational_rotation(d, seed);
            EXPECT_EQ(m.transpose() * m, RationalMatrix::identity(d));
            const Rational det = determinant(m);
            EXPECT_TRUE(det == 1 || det == -1);
        }
}

TEST(RandomRotation, DeterministicPerSeed) {
    EXPECT_EQ(random_rational_rotation(3, 42), random_rational_rotation(3, 42));
    EXPECT_FALSE(random_rational_rotation(3, 42) == random_rational_rotation(3, 43));
    EXPECT_THROW(random_rational_rotation(1, 0), DomainError);
}

TEST(NonnegativeCombination, FindsCertificateOrReportsInfeasible) {
    const std::vector<RationalVector> cols{{q(1), q(0)}, {q(1), q(1)}};
    const auto inside = nonnegative_combination(cols, RationalVector{q(3), q(1)});
    ASSERT_TRUE(inside);
    EXPECT_EQ(cols[0] * (*inside)[0] + cols[1] * (*inside)[1], (RationalVector{q(3), q(1)}));
    for (const auto& x : *inside) EXPECT_GE(x, 0);
    EXPECT_FALSE(nonnegative_combination(cols, RationalVector{q(0), q(1)}));
    EXPECT_FALSE(nonnegative_combination(cols, RationalVector{q(-1), q(0)}));
}
