#pragma once

// Minkowski sums with vertex provenance, unique face decomposition, and the
// trivial upper bounds on face numbers of a sum.

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/polytope.hpp"

namespace polycalc {

struct SumContext {
    std::vector<Polytope> summands;
    Polytope sum;
    /// provenance[v][i] is the vertex of summands[i] used by sum vertex v.
    std::vector<std::vector<std::size_t>> provenance;
};

/// P_1 + ... + P_n, folded left: each partial sum is reduced to its
/// vertices before the next summand is added.
inline SumContext minkowski_sum(std::vector<Polytope> summands) {
    if (summands.empty()) throw EmptyInput("minkowski_sum: no summands");
    const std::size_t d = summands.front().ambient_dim();
    for (const auto& p : summands)
        if (p.ambient_dim() != d)
            throw DimensionMismatch("minkowski_sum: summands live in R^" + std::to_string(d) + " and R^" +
                                    std::to_string(p.ambient_dim()));

    Polytope acc = summands.front();
    std::vector<std::vector<std::size_t>> prov;
    for (std::size_t v = 0; v < acc.num_vertices(); ++v) prov.push_back({v});

    for (std::size_t s = 1; s < summands.size(); ++s) {
        const Polytope& next = summands[s];
        std::map<RationalVector, std::pair<std::size_t, std::size_t>> origin;
        std::vector<RationalVector> pts;
        pts.reserve(acc.num_vertices() * next.num_vertices());
        for (std::size_t a = 0; a < acc.num_vertices(); ++a)
            for (std::size_t b = 0; b < next.num_vertices(); ++b) {
                RationalVector p = acc.vertex(a) + next.vertex(b);
                origin.emplace(p, std::make_pair(a, b));
                pts.push_back(std::move(p));
            }
        Polytope merged = convex_hull(std::move(pts), d);
        std::vector<std::vector<std::size_t>> merged_prov;
        merged_prov.reserve(merged.num_vertices());
        for (const auto& v : merged.vertices()) {
            const auto& [a, b] = origin.at(v);
            auto tuple = prov[a];
            tuple.push_back(b);
            merged_prov.push_back(std::move(tuple));
        }
        acc = std::move(merged);
        prov = std::move(merged_prov);
    }
    return SumContext{std::move(summands), std::move(acc), std::move(prov)};
}

/// F = F_1 + ... + F_k with F_i faces of the summands.
struct FaceDecomposition {
    Face face;
    std::vector<Face> parts;
    /// dim(face) = sum of dim(parts).
    bool exact = false;
};

/// A direction c with S(sum; c) = F (c = 0 for F = sum).
inline RationalVector face_witness_direction(const Polytope& p, const Face& face) {
    if (face.empty()) throw TrivialFaceError("face_witness_direction: empty face");
    if (is_trivial(p, face)) return RationalVector(p.ambient_dim());
    return cone_interior_point(normal_cone(p, face));
}

inline FaceDecomposition decompose_face(const SumContext& ctx, const Face& face) {
    if (face.empty()) throw TrivialFaceError("decompose_face: empty face");
    const RationalVector c = face_witness_direction(ctx.sum, face);
    FaceDecomposition dec{face, {}, false};
    int dims = 0;
    for (const auto& p : ctx.summands) {
        dec.parts.push_back(support_set(p, c));
        dims += dec.parts.back().dim;
    }
    dec.exact = dims == face.dim;

    // Re-sum: the sum vertices whose provenance lies in the parts are F.
    IndexSet resummed(ctx.sum.num_vertices());
    for (std::size_t v = 0; v < ctx.sum.num_vertices(); ++v) {
        bool inside = true;
        for (std::size_t i = 0; i < ctx.summands.size() && inside; ++i)
            inside = dec.parts[i].vertices.test(ctx.provenance[v][i]);
        if (inside) resummed.set(v);
    }
    if (resummed != face.vertices) throw std::logic_error("decompose_face: parts do not re-sum to the face");
    return dec;
}

struct GeneralPositionReport {
    bool in_general_position = true;
    /// Facet indices of the sum whose decomposition is not exact.
    std::vector<std::size_t> violating_facets;
};

/// Every facet of the sum decomposes exactly.
inline GeneralPositionReport relatively_in_general_position(const SumContext& ctx) {
    GeneralPositionReport report;
    for (std::size_t f = 0; f < ctx.sum.num_facets(); ++f) {
        const Face face = face_of(ctx.sum, ctx.sum.facet_vertices(f));
        if (!decompose_face(ctx, face).exact) report.violating_facets.push_back(f);
    }
    report.in_general_position = report.violating_facets.empty();
    return report;
}

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer result = 1;
    k = std::min(k, n - k);
    for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

/// prod f_0(P_i)
inline Integer trivial_vertex_bound(std::span<const std::size_t> f0) {
    Integer product = 1;
    for (auto n : f0) {
        if (n == 0) throw DomainError("trivial_vertex_bound: vertex counts must be positive");
        product *= n;
    }
    return product;
}

/// sum over s_1 + ... + s_n = k + n, 1 <= s_i <= f_0(P_i), of prod C(f_0(P_i), s_i).
inline Integer trivial_kface_bound(std::span<const std::size_t> f0, std::size_t k) {
    for (auto n : f0)
        if (n == 0) throw DomainError("trivial_kface_bound: vertex counts must be positive");
    const std::size_t n = f0.size();
    Integer total = 0;
    auto recurse = [&](auto&& self, std::size_t i, std::size_t remaining, Integer product) -> void {
        if (i == n) {
            if (remaining == 0) total += product;
            return;
        }
        const std::size_t left_after = n - i - 1;  // each later s_j >= 1
        for (std::size_t s = 1; s <= f0[i] && s + left_after <= remaining; ++s)
            self(self, i + 1, remaining - s, product * binomial(f0[i], s));
    };
    recurse(recurse, 0, k + n, Integer(1));
    return total;
}

}  // namespace polycalc
