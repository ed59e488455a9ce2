#pragma once

// Standard constructions: cubes, cross-polytopes, simplices, the rational
// regular tetrahedron, cyclic polytopes on the moment curve, and polygons
// on the rational unit half-circle.

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/polytope.hpp"

namespace polycalc {

/// [-1, 1]^d
inline Polytope cube(std::size_t d) {
    if (d == 0) throw InvalidConstruction("cube: dimension must be positive");
    std::vector<RationalVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        RationalVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), d);
}

/// conv{±e_i}
inline Polytope cross_polytope(std::size_t d) {
    if (d == 0) throw InvalidConstruction("cross: dimension must be positive");
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(RationalVector::unit(d, i));
        pts.push_back(-RationalVector::unit(d, i));
    }
    return convex_hull(std::move(pts), d);
}

/// conv{e_1, ..., e_d, -(1, ..., 1)}; the origin is its vertex centroid.
inline Polytope simplex(std::size_t d) {
    if (d == 0) throw InvalidConstruction("simplex: dimension must be positive");
    std::vector<RationalVector> pts;
    RationalVector apex(d);
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(RationalVector::unit(d, i));
        apex[i] = -1;
    }
    pts.push_back(std::move(apex));
    return convex_hull(std::move(pts), d);
}

/// Regular tetrahedron with rational vertices, centred at the origin.
inline Polytope tetrahedron_pc() {
    return convex_hull({RationalVector{1, 1, 1}, RationalVector{1, -1, -1}, RationalVector{-1, 1, -1},
                        RationalVector{-1, -1, 1}},
                       3);
}

/// Axis-aligned box prod [lower_i, upper_i].
inline Polytope box(const RationalVector& lower, const RationalVector& upper) {
    lower.check_same(upper);
    const std::size_t d = lower.size();
    for (std::size_t i = 0; i < d; ++i)
        if (!(lower[i] < upper[i])) throw InvalidConstruction("box: lower bound must be below upper bound");
    std::vector<RationalVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        RationalVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? upper[i] : lower[i];
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), d);
}

inline void require_distinct(std::span<const Rational> params, const std::string& what) {
    std::set<Rational> seen(params.begin(), params.end());
    if (seen.size() != params.size()) throw InvalidConstruction(what + ": duplicate parameter");
}

/// (t, t^2, ..., t^d)
inline RationalVector moment_curve_point(const Rational& t, std::size_t d) {
    RationalVector v(d);
    Rational power = 1;
    for (std::size_t i = 0; i < d; ++i) {
        power *= t;
        v[i] = power;
    }
    return v;
}

inline Polytope cyclic_polytope(std::size_t d, std::span<const Rational> params) {
    if (d == 0) throw InvalidConstruction("cyclic: dimension must be positive");
    if (params.empty()) throw InvalidConstruction("cyclic: no parameters");
    require_distinct(params, "cyclic");
    std::vector<RationalVector> pts;
    for (const auto& t : params) pts.push_back(moment_curve_point(t, d));
    return convex_hull(std::move(pts), d);
}

/// Rational circle points x e_axis + y e_{d-1}, one per parameter.
inline Polytope polygon_halfcircle(std::span<const Rational> params, std::size_t axis, std::size_t ambient) {
    if (ambient < 2 || axis + 1 >= ambient)
        throw InvalidConstruction("polygon_halfcircle: axis must differ from the last coordinate");
    if (params.empty()) throw InvalidConstruction("polygon_halfcircle: no parameters");
    require_distinct(params, "polygon_halfcircle");
    std::vector<RationalVector> pts;
    for (const auto& t : params) {
        const RationalVector c = rational_circle_point(t);
        RationalVector v(ambient);
        v[axis] = c[0];
        v[ambient - 1] = c[1];
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), ambient);
}

inline Polytope segment(const RationalVector& a, const RationalVector& b) {
    a.check_same(b);
    return convex_hull({a, b}, a.size());
}

inline Polytope from_points(std::vector<RationalVector> pts) {
    if (pts.empty()) throw EmptyInput("from_points: no points");
    const std::size_t d = pts.front().size();
    return convex_hull(std::move(pts), d);
}

}  // namespace polycalc
