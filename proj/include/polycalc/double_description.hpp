#pragma once

// Double description method for pointed polyhedral cones
//
//     C = { z in Q^n : <h_i, z> >= 0 for all i }.
//
// Rays are primitive integer vectors. Adjacency between a positive and a
// negative ray is decided combinatorially on their common zero sets,
// which is valid because the working ray set is kept minimal.

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

using IndexSet = boost::dynamic_bitset<>;

struct ConeRays {
    std::vector<IntVector> rays;
    /// zero_sets[r][i] is set iff <h_i, rays[r]> == 0.
    std::vector<IndexSet> zero_sets;
};

namespace detail {

inline Integer int_dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

/// Extreme rays of C. The constraint rows must span Q^n (C pointed).
inline ConeRays extreme_rays(std::span<const IntVector> constraints, std::size_t n) {
    const std::size_t m = constraints.size();
    for (const auto& h : constraints)
        if (h.size() != n) throw DimensionMismatch("extreme_rays: constraint length mismatch");

    // Initial basis: the first n independent constraints.
    IntegerEchelon ech(n);
    std::vector<std::size_t> initial;
    std::vector<bool> used(m, false);
    for (std::size_t i = 0; i < m && !ech.full(); ++i)
        if (ech.insert(constraints[i])) {
            initial.push_back(i);
            used[i] = true;
        }
    if (initial.size() != n) throw PreconditionError("extreme_rays: cone is not pointed (constraints do not span)");

    RationalMatrix basis_rows(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) basis_rows(r, c) = Rational(constraints[initial[r]][c]);
    auto inv = inverse(basis_rows);
    if (!inv) throw PreconditionError("extreme_rays: singular initial basis");

    ConeRays cur;
    for (std::size_t k = 0; k < n; ++k) {
        cur.rays.push_back(primitive_integer(inv->column(k)));
        IndexSet z(m);
        for (std::size_t r = 0; r < n; ++r)
            if (r != k) z.set(initial[r]);
        cur.zero_sets.push_back(std::move(z));
    }

    std::vector<Integer> value;
    for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        const IntVector& h = constraints[i];
        const std::size_t count = cur.rays.size();
        value.assign(count, Integer(0));
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t r = 0; r < count; ++r) {
            value[r] = detail::int_dot(h, cur.rays[r]);
            const int s = value[r].sign();
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zero) cur.zero_sets[r].set(i);
            continue;
        }

        ConeRays next;
        next.rays.reserve(pos.size() + zero.size());
        for (auto r : pos) {
            next.rays.push_back(cur.rays[r]);
            next.zero_sets.push_back(cur.zero_sets[r]);
        }
        for (auto r : zero) {
            next.rays.push_back(cur.rays[r]);
            next.zero_sets.push_back(cur.zero_sets[r]);
            next.zero_sets.back().set(i);
        }

        std::vector<std::size_t> zero_counts(count);
        for (std::size_t r = 0; r < count; ++r) zero_counts[r] = cur.zero_sets[r].count();
        const std::size_t needed = n >= 2 ? n - 2 : 0;

        for (auto p : pos) {
            if (zero_counts[p] < needed) continue;
            for (auto q : neg) {
                if (zero_counts[q] < needed) continue;
                IndexSet common = cur.zero_sets[p] & cur.zero_sets[q];
                if (common.count() < needed) continue;
                bool adjacent = true;
                for (std::size_t w = 0; w < count && adjacent; ++w) {
                    if (w == p || w == q || zero_counts[w] < needed) continue;
                    if (common.is_subset_of(cur.zero_sets[w])) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector z(n);
                const Integer& vp = value[p];
                const Integer vq = -value[q];
                for (std::size_t c = 0; c < n; ++c) z[c] = vp * cur.rays[q][c] + vq * cur.rays[p][c];
                make_primitive(z);
                common.set(i);
                next.rays.push_back(std::move(z));
                next.zero_sets.push_back(std::move(common));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace polycalc
