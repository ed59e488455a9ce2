#pragma once

// Exact feasibility for nonnegative combinations: phase one of the simplex
// method with Bland's rule, over Q. Only used for cone membership, so the
// systems are tiny (d rows, a few dozen columns).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polycalc/rational.hpp"

namespace polycalc {

/// Finds lambda >= 0 with sum_j lambda_j * columns[j] = target, if one exists.
inline std::optional<std::vector<Rational>> nonnegative_combination(std::span<const RationalVector> columns,
                                                                    const RationalVector& target) {
    const std::size_t m = target.size();
    const std::size_t n = columns.size();
    for (const auto& c : columns) target.check_same(c);

    // Tableau: m rows over n originals + m artificials + rhs.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = target[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-columns[j][i]) : columns[j][i];
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rational(-target[i]) : target[i];
        basis[i] = n + i;
    }

    auto reduced_cost = [&](std::size_t j) {
        // Minimising the sum of artificials.
        Rational cost = j >= n && j < n + m ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) cost -= t[i][j];
        return cost;
    };

    for (;;) {
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (reduced_cost(j) < 0) {
                entering = j;
                break;
            }
        }
        if (!entering) break;
        const std::size_t e = *entering;
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][e] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][e];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave) break;  // unbounded direction; cannot happen in phase one
        const std::size_t r = *leave;
        const Rational piv = t[r][e];
        for (auto& x : t[r]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t[i][e] == 0) continue;
            const Rational f = t[i][e];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = e;
    }

    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n && t[i][width - 1] != 0) return std::nullopt;
    std::vector<Rational> lambda(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) lambda[basis[i]] = t[i][width - 1];
    return lambda;
}

}  // namespace polycalc
