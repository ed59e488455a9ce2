#pragma once

// Verification suites run by `polycalc verify`. Each suite appends checks to
// a Report; all randomness comes from the explicit seed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/extremal.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/nesterov.hpp"
#include "polycalc/report.hpp"
#include "polycalc/standard.hpp"

namespace polycalc {

struct SuiteOptions {
    std::optional<std::size_t> dim;
    std::uint64_t seed = 7;
    std::optional<std::size_t> size;
};

struct NamedPolytope {
    std::string name;
    Polytope polytope;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Rotated copies of tetrahedron/cube/cross summands whose sum is relatively
/// in general position. Instance i uses two summands, or three when i % 3 == 2;
/// rotations are redrawn until general position holds.
inline std::vector<Polytope> general_position_instance(std::uint64_t seed, std::size_t i) {
    const std::vector<Polytope> shapes{tetrahedron_pc(), cube(3), cross_polytope(3)};
    const std::size_t count = (i % 3 == 2) ? 3 : 2;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::vector<Polytope> summands;
        for (std::size_t j = 0; j < count; ++j) {
            const Polytope& base = shapes[(i + j) % shapes.size()];
            if (j == 0) {
                summands.push_back(base);
                continue;
            }
            const std::uint64_t s = seed * 1000003ULL + i * 1009ULL + j * 101ULL + attempt;
            summands.push_back(base.transformed(random_rational_rotation(3, s)));
        }
        if (relatively_in_general_position(minkowski_sum(summands)).in_general_position) return summands;
    }
    throw std::logic_error("general_position_instance: no general-position rotation found");
}

/// Standard shapes plus `count` random boxes. Boxes are centered at the
/// origin and rotated, except every fourth one, which is shifted so that
/// the origin lies outside it.
inline std::vector<NamedPolytope> perfect_centering_test_set(std::uint64_t seed, std::size_t count) {
    std::vector<NamedPolytope> out;
    for (std::size_t d = 2; d <= 4; ++d) {
        out.push_back({"cube(" + std::to_string(d) + ")", cube(d)});
        out.push_back({"cross(" + std::to_string(d) + ")", cross_polytope(d)});
    }
    out.push_back({"tetrahedron_pc", tetrahedron_pc()});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 6), den(1, 4);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t d = 2 + i % 2;
        RationalVector half(d);
        for (std::size_t c = 0; c < d; ++c) half[c] = Rational(num(rng), den(rng));
        Polytope p = box(-half, half);
        std::string name = "box " + to_string(half);
        if (i % 4 == 3) {
            RationalVector shift(d);
            shift[0] = half[0] * 2;
            p = p.translated(shift);
            name += " shifted";
        } else {
            p = p.transformed(random_rational_rotation(d, seed + i));
            name += " rotated";
        }
        out.push_back({std::move(name), std::move(p)});
    }
    return out;
}

/// Perfectly centered rounding: dims, order, witnesses and f-vector.
inline void suite_rounding_lattice(Report& report, const SuiteOptions& opt) {
    std::vector<NamedPolytope> polys;
    const std::size_t d = opt.dim.value_or(3);
    if (d < 2) throw DomainError("rounding-lattice: --dim must be at least 2");
    if (d == 3) polys.push_back({"tetrahedron_pc", tetrahedron_pc()});
    polys.push_back({"cube(" + std::to_string(d) + ")", cube(d)});
    if (d != 3) polys.push_back({"cross(" + std::to_string(d) + ")", cross_polytope(d)});
    for (const auto& [name, p] : polys) {
        const RoundingVerification v = verify_rounding(p);
        report.add("rounding-lattice/" + name, v.passed(),
                   "order- and dimension-preserving bijection, f=" + format_counts(v.predicted_f),
                   "bijection=" + yes_no(v.bijection) + " dims=" + yes_no(v.dims_preserved) +
                       " order=" + yes_no(v.order_preserved) + " witnesses=" + yes_no(v.witnesses_compose) +
                       " f=" + format_counts(v.computed_f) + (v.failure.empty() ? "" : " (" + v.failure + ")"));
    }
    const Polytope& first = polys.front().polytope;
    for (const Rational& alpha : {Rational(1, 3), Rational(5, 2)}) {
        const RoundingVerification v = verify_rounding(first, alpha);
        report.add("rounding-lattice/" + polys.front().name + " alpha=" + to_string(alpha), v.passed(),
                   "f=" + format_counts(v.predicted_f), "f=" + format_counts(v.computed_f));
    }
}

inline void closed_form_suite(Report& report, const SuiteOptions& opt, ClosedFormKind kind) {
    const std::string suite = kind == ClosedFormKind::Simplex ? "simplex-fvector" : "cube-fvector";
    const std::size_t geometric_dim = opt.dim.value_or(3);
    if (kind == ClosedFormKind::Simplex && geometric_dim != 3) {
        report.add(suite + "/geometric d=" + std::to_string(geometric_dim), Status::Skipped,
                   "perfectly centered rational simplex", "only available for d=3");
    } else if (kind == ClosedFormKind::Cube && (geometric_dim < 2 || geometric_dim > 4)) {
        report.add(suite + "/geometric d=" + std::to_string(geometric_dim), Status::Skipped, "d in 2..4",
                   "geometric rounding limited to d <= 4");
    } else {
        const Polytope p = kind == ClosedFormKind::Simplex ? tetrahedron_pc() : cube(geometric_dim);
        const auto f = f_vector(build_face_lattice(nesterov_round(p).sum));
        const auto expected = closed_form_fvector(kind, geometric_dim);
        report.add(suite + "/geometric d=" + std::to_string(geometric_dim), f == expected, format_counts(expected),
                   format_counts(f));
    }
    std::size_t lo = 2, hi = opt.size.value_or(8);
    if (opt.dim && !opt.size) lo = hi = *opt.dim;
    if (hi > 10) throw DomainError(suite + ": combinatorial check limited to d <= 10");
    for (std::size_t d = lo; d <= hi; ++d) {
        const Polytope p = kind == ClosedFormKind::Simplex ? simplex(d) : cube(d);
        const auto pred = predicted_rounding_lattice(build_face_lattice(p), static_cast<int>(d)).f_vector();
        const auto expected = closed_form_fvector(kind, d);
        const bool ok = pred == expected && euler_residual(expected, static_cast<int>(d)) == 0;
        report.add(suite + "/pairs d=" + std::to_string(d), ok, format_counts(expected), format_counts(pred));
    }
}

inline void suite_simplex_fvector(Report& report, const SuiteOptions& opt) {
    closed_form_suite(report, opt, ClosedFormKind::Simplex);
}

inline void suite_cube_fvector(Report& report, const SuiteOptions& opt) {
    closed_form_suite(report, opt, ClosedFormKind::Cube);
}

inline void suite_repeated_rounding(Report& report, const SuiteOptions& opt) {
    if (opt.dim && *opt.dim != 3) {
        report.add("repeated-rounding", Status::Skipped, "d=3", "only defined in R^3");
        return;
    }
    const std::size_t n = opt.size.value_or(2);
    const RepeatedRoundingReport r = repeated_round_check(tetrahedron_pc(), n);
    for (const auto& s : r.steps) {
        const bool ok = s.computed_f == s.predicted_f && s.euler == 0 && s.perfectly_centered;
        report.add("repeated-rounding/n=" + std::to_string(s.iteration), ok,
                   format_counts(s.predicted_f) + " perfectly centered",
                   format_counts(s.computed_f) + " perfectly centered=" + yes_no(s.perfectly_centered));
    }
    const std::vector<Integer> first = closed_form_fvector(ClosedFormKind::Simplex, 3);
    std::vector<Rational> ratios;
    std::string trace;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto f = repeated_rounding_fvector(first, k);
        ratios.emplace_back(f[2], f[0]);
        trace += (k > 1 ? "," : "") + to_string(ratios.back());
    }
    bool monotone = true;
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        if (ratios[k] < 1) monotone = false;
        if (k > 0 && ratios[k - 1] < ratios[k]) monotone = false;
    }
    monotone = monotone && ratios.back() - 1 < ratios.front() - 1;
    report.add("repeated-rounding/facet-vertex ratio n=1..3", monotone, "non-increasing toward 1", trace);
}

inline void suite_vertex_bound(Report& report, const SuiteOptions& opt) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cases;
    if (!opt.dim || *opt.dim == 3) {
        cases.push_back({3, {4, 4}});
        cases.push_back({3, {5, 6}});
    }
    if (!opt.dim || *opt.dim == 4) cases.push_back({4, {3, 3, 3}});
    if (opt.dim && *opt.dim > 4) cases.push_back({*opt.dim, std::vector<std::size_t>(*opt.dim - 1, 3)});
    if (opt.dim && *opt.dim < 3) throw DomainError("vertex-bound: --dim must be at least 3");
    for (const auto& [d, counts] : cases) {
        std::vector<std::vector<Rational>> params;
        for (auto c : counts) {
            std::vector<Rational> ts;
            for (std::size_t j = 0; j < c; ++j) ts.emplace_back(static_cast<long>(j + 1), static_cast<long>(c - j));
            params.push_back(std::move(ts));
        }
        const VertexBoundReport r = verify_vertex_bound_attained(build_halfcircle_family(d, params));
        std::string label;
        for (std::size_t i = 0; i < counts.size(); ++i) label += (i ? "," : "") + std::to_string(counts[i]);
        report.add("vertex-bound/d=" + std::to_string(d) + " counts=(" + label + ")", r.attained(),
                   "f0=" + r.bound.str(), "f0=" + r.vertices.str());
    }
}

inline void suite_3d_relations(Report& report, const SuiteOptions& opt) {
    if (opt.dim && *opt.dim != 3) {
        report.add("3d-relations", Status::Skipped, "d=3", "only defined in R^3");
        return;
    }
    const std::size_t count = opt.size.value_or(10);
    for (std::size_t i = 0; i < count; ++i) {
        const auto summands = general_position_instance(opt.seed, i);
        const ThreeDRelationsReport r = check_3d_relations(summands);
        std::string res;
        for (std::size_t k = 0; k < r.residuals.size(); ++k) res += (k ? "," : "") + r.residuals[k].str();
        report.add("3d-relations/instance " + std::to_string(i) + " (" + std::to_string(summands.size()) + " summands)",
                   r.general_position && r.residuals_zero() && r.accounting_ok(),
                   "residuals=(0,0,0) pure+mixed=" + r.sum_f[2].str(),
                   "residuals=(" + res + ") pure=" + r.pure_observed.str() + " mixed=" + r.mixed_observed.str() +
                       " f=" + format_counts(r.sum_f));
    }
    const bool aligned = relatively_in_general_position(minkowski_sum({cube(3), cube(3).scaled(2)})).in_general_position;
    report.add("3d-relations/aligned cubes flagged", !aligned, "general position=no",
               "general position=" + yes_no(aligned));
}

inline void suite_facet_bounds(Report& report, const SuiteOptions& opt) {
    if (opt.dim && *opt.dim != 3) {
        report.add("facet-bounds", Status::Skipped, "d=3", "only defined in R^3");
        return;
    }
    const std::size_t count = opt.size.value_or(10);
    for (std::size_t i = 0; i < count; ++i) {
        const auto summands = general_position_instance(opt.seed, 3 * (i / 2) + (i % 2));
        const FacetEdgeBoundReport r = facet_edge_bounds_3d(summands[0], summands[1]);
        report.add("facet-bounds/inequalities pair " + std::to_string(i), r.holds(),
                   "f2<=" + r.facet_bound.str() + " f1<=" + r.edge_bound.str(), "f=" + format_counts(r.sum_f));
    }
    const auto witness = search_facet_bound_witness();
    if (witness) {
        report.add("facet-bounds/attainment f0=(4,4)", Status::Pass, "f2=18 f1=32",
                   "f2=" + witness->report.sum_f[2].str() + " f1=" + witness->report.sum_f[1].str() +
                       " lifts=" + to_string(witness->first_lift) + "," + to_string(witness->second_lift));
    } else {
        report.add("facet-bounds/attainment f0=(4,4)", Status::Inconclusive, "f2=18 f1=32",
                   "no witness on the search grid");
    }
}

inline void suite_cyclic_bounds(Report& report, const SuiteOptions& opt) {
    struct Case {
        std::size_t d;
        std::vector<std::vector<Rational>> params;
    };
    auto ints = [](std::initializer_list<long> xs) {
        std::vector<Rational> out;
        for (long x : xs) out.emplace_back(x);
        return out;
    };
    std::vector<Case> cases;
    const std::size_t d = opt.dim.value_or(4) < 4 ? 4 : opt.dim.value_or(4);
    if (d == 4) {
        cases.push_back({4, {ints({-2, -1, 0, 1, 2}), {Rational(-3, 2), Rational(-1, 2), Rational(1, 2),
                                                       Rational(3, 2), Rational(3), Rational(-3)}}});
        cases.push_back({4, {ints({1, 2, 3, 4, 5, 6, 7})}});
    }
    if (d == 4 || d == 6) cases.push_back({6, {ints({-3, -1, 1, 3}), ints({-2, 0, 2, 4})}});
    if (d != 4 && d != 6) {
        std::vector<Rational> a, b;
        for (long j = 0; j < 4; ++j) {
            a.emplace_back(2 * j - 3);
            b.emplace_back(2 * j - 2);
        }
        cases.push_back({d, {a, b}});
    }
    for (const auto& c : cases) {
        const auto family = build_cyclic_family(c.d, c.params);
        std::string label;
        for (std::size_t i = 0; i < family.size(); ++i)
            label += (i ? "," : "") + std::to_string(family[i].num_vertices());
        for (const auto& r : verify_kface_bounds_attained(family))
            report.add("cyclic-bounds/d=" + std::to_string(c.d) + " counts=(" + label + ") k=" + std::to_string(r.k),
                       r.attained(), "f" + std::to_string(r.k) + "=" + r.bound.str(),
                       "f" + std::to_string(r.k) + "=" + r.faces.str());
    }
}

using SuiteFn = std::function<void(Report&, const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"rounding-lattice", suite_rounding_lattice}, {"simplex-fvector", suite_simplex_fvector},
        {"cube-fvector", suite_cube_fvector},         {"repeated-rounding", suite_repeated_rounding},
        {"vertex-bound", suite_vertex_bound},         {"3d-relations", suite_3d_relations},
        {"facet-bounds", suite_facet_bounds},         {"cyclic-bounds", suite_cyclic_bounds},
    };
    return table;
}

inline Report run_suite(const std::string& name, const SuiteOptions& opt) {
    Report report("verify " + name);
    bool found = false;
    for (const auto& [suite, fn] : suites()) {
        if (name == "all" || name == suite) {
            fn(report, opt);
            found = true;
        }
    }
    if (!found) throw DomainError("unknown suite '" + name + "'");
    return report;
}

}  // namespace polycalc
