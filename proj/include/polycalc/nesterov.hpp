#pragma once

// Perfectly centered polytopes and the Minkowski sum P + alpha P*.
//
// A polytope is perfectly centered when every nonempty face F meets its
// own outer normal cone N(F;P). Such a point is orthogonal to the direction
// space of aff(F), so the only candidate is the foot of the perpendicular
// from the origin onto aff(F); the checker tests exactly that point.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/polytope.hpp"

namespace polycalc {

struct FaceWitness {
    std::size_t face = 0;  // index into PerfectCenterReport::lattice
    int dim = 0;
    std::optional<RationalVector> witness;
    std::string failure;
};

struct PerfectCenterReport {
    FaceLattice lattice;
    bool centered = false;
    /// One entry per nontrivial face, in lattice order.
    std::vector<FaceWitness> faces;
    bool overall = false;

    const FaceWitness* entry_for(std::size_t face) const {
        for (const auto& e : faces)
            if (e.face == face) return &e;
        return nullptr;
    }
};

/// The unique point of relint(F) ∩ N(F;P), if any.
inline std::optional<RationalVector> perfect_center_witness(const Polytope& p, const Face& face,
                                                            std::string* failure = nullptr) {
    const auto pts = face.points(p);
    const RationalVector foot = project_onto_affine(RationalVector(p.ambient_dim()), affine_hull(pts));
    if (!in_relative_interior(p, face, foot)) {
        if (failure) *failure = "foot of perpendicular " + to_string(foot) + " is outside relint(F)";
        return std::nullopt;
    }
    if (!(support_set(p, foot).vertices == face.vertices)) {
        if (failure) *failure = "foot of perpendicular " + to_string(foot) + " is not in N(F;P)";
        return std::nullopt;
    }
    return foot;
}

inline PerfectCenterReport perfectly_centered_witnesses(const Polytope& p) {
    if (!p.full_dimensional()) throw PreconditionError("perfectly_centered_witnesses: polytope is not full-dimensional");
    PerfectCenterReport report;
    report.lattice = build_face_lattice(p);
    report.centered = is_centered(p);
    bool all = report.centered;
    for (auto i : report.lattice.nontrivial()) {
        FaceWitness entry;
        entry.face = i;
        entry.dim = report.lattice.faces[i].dim;
        entry.witness = perfect_center_witness(p, report.lattice.faces[i], &entry.failure);
        all = all && entry.witness.has_value();
        report.faces.push_back(std::move(entry));
    }
    report.overall = all;
    return report;
}

inline bool is_perfectly_centered(const Polytope& p) { return perfectly_centered_witnesses(p).overall; }

/// P + alpha P*; the second summand is the (scaled) polar.
inline SumContext nesterov_round(const Polytope& p, const Rational& alpha = 1) {
    Polytope dual = polar_dual(p);
    if (alpha != 1) dual = dual.scaled(alpha);
    return minkowski_sum({p, std::move(dual)});
}

/// The lattice of ordered pairs G ⊆ F of nontrivial faces of P, ordered by
/// (G1, F1) <= (G2, F2) iff G1 ⊆ G2 and F1 ⊇ F2.
struct PredictedLattice {
    int ambient_dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> elements;  // (G, F) lattice indices
    std::vector<int> dims;  // dim G + d - 1 - dim F
    std::vector<IndexSet> face_vertices;  // of the source lattice
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;

    std::size_t size() const { return elements.size(); }

    bool leq(std::size_t a, std::size_t b) const {
        const auto& [ga, fa] = elements[a];
        const auto& [gb, fb] = elements[b];
        return face_vertices[ga].is_subset_of(face_vertices[gb]) && face_vertices[fb].is_subset_of(face_vertices[fa]);
    }

    std::vector<Integer> f_vector() const {
        std::vector<Integer> f(ambient_dim > 0 ? ambient_dim : 0);
        for (int k : dims)
            if (k >= 0 && k < ambient_dim) f[k] += 1;
        return f;
    }
};

inline PredictedLattice predicted_rounding_lattice(const FaceLattice& lattice, int d) {
    PredictedLattice pred;
    pred.ambient_dim = d;
    for (const auto& f : lattice.faces) pred.face_vertices.push_back(f.vertices);
    const auto nontrivial = lattice.nontrivial();
    for (auto f : nontrivial)
        for (auto g : nontrivial) {
            if (!lattice.contains(f, g)) continue;
            pred.lookup.emplace(std::make_pair(g, f), pred.elements.size());
            pred.elements.emplace_back(g, f);
            pred.dims.push_back(lattice.faces[g].dim + d - 1 - lattice.faces[f].dim);
        }
    return pred;
}

struct RoundingVerification {
    std::size_t sum_faces = 0;  // nontrivial faces of the rounding
    std::size_t predicted_elements = 0;
    bool bijection = false;
    bool dims_preserved = false;
    bool order_preserved = false;
    bool witnesses_compose = false;
    std::vector<Integer> computed_f;
    std::vector<Integer> predicted_f;
    std::string failure;

    bool passed() const {
        return bijection && dims_preserved && order_preserved && witnesses_compose && computed_f == predicted_f;
    }
};

/// Maps every nontrivial face H of P + alpha P* to its decomposition
/// G + F^D and checks the map is an order- and dimension-preserving
/// bijection onto the predicted pair lattice.
inline RoundingVerification verify_rounding(const Polytope& p, const Rational& alpha = 1) {
    const PerfectCenterReport pc = perfectly_centered_witnesses(p);
    if (!pc.overall) throw PreconditionError("verify_rounding: polytope is not perfectly centered");
    const Polytope dual = polar_dual(p);
    const PerfectCenterReport pc_dual = perfectly_centered_witnesses(dual);
    if (!pc_dual.overall) throw std::logic_error("verify_rounding: polar of a perfectly centered polytope failed");

    const int d = static_cast<int>(p.ambient_dim());
    const FaceLattice& lp = pc.lattice;
    const PredictedLattice pred = predicted_rounding_lattice(lp, d);
    const SumContext ctx = nesterov_round(p, alpha);
    const FaceLattice lr = build_face_lattice(ctx.sum);

    RoundingVerification out;
    out.predicted_elements = pred.size();
    out.computed_f = f_vector(lr);
    out.predicted_f = pred.f_vector();

    const auto sum_faces = lr.nontrivial();
    out.sum_faces = sum_faces.size();
    std::vector<std::size_t> image(lr.size(), pred.size());
    std::vector<bool> hit(pred.size(), false);
    bool injective = true;
    bool dims_ok = true;
    for (auto h : sum_faces) {
        const FaceDecomposition dec = decompose_face(ctx, lr.faces[h]);
        const Face& g_part = dec.parts[0];
        const Face& d_part = dec.parts[1];  // indices agree with the unscaled polar
        if (is_trivial(p, g_part) || is_trivial(dual, d_part)) {
            out.failure = "face " + std::to_string(h) + " has a trivial part";
            return out;
        }
        const Face f_face = dual_face(dual, p, d_part);
        const auto gi = lp.find(g_part.vertices);
        const auto fi = lp.find(f_face.vertices);
        if (!gi || !fi) {
            out.failure = "decomposition part is not a face of P";
            return out;
        }
        auto it = pred.lookup.find({*gi, *fi});
        if (it == pred.lookup.end()) {
            out.failure = "face " + std::to_string(h) + " maps to a pair with G not contained in F";
            return out;
        }
        if (hit[it->second]) injective = false;
        hit[it->second] = true;
        image[h] = it->second;
        if (pred.dims[it->second] != lr.faces[h].dim) dims_ok = false;
    }
    const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    out.bijection = injective && surjective;
    out.dims_preserved = dims_ok;

    bool order_ok = true;
    for (auto a : sum_faces)
        for (auto b : sum_faces)
            if (lr.contains(b, a) != pred.leq(image[a], image[b])) order_ok = false;
    out.order_preserved = order_ok;

    // m_G + alpha m_{F^D} selects exactly G + alpha F^D.
    bool compose_ok = true;
    for (std::size_t e = 0; e < pred.size() && compose_ok; ++e) {
        const auto& [g, f] = pred.elements[e];
        const Face fd = dual_face(p, dual, lp.faces[f]);
        const auto fdi = pc_dual.lattice.find(fd.vertices);
        const FaceWitness* wg = pc.entry_for(g);
        const FaceWitness* wf = fdi ? pc_dual.entry_for(*fdi) : nullptr;
        if (!wg || !wf || !wg->witness || !wf->witness) {
            compose_ok = false;
            break;
        }
        const RationalVector m = *wg->witness + alpha * *wf->witness;
        const Face selected = support_set(ctx.sum, m);
        IndexSet expected(ctx.sum.num_vertices());
        for (std::size_t v = 0; v < ctx.sum.num_vertices(); ++v)
            if (lp.faces[g].vertices.test(ctx.provenance[v][0]) && fd.vertices.test(ctx.provenance[v][1]))
                expected.set(v);
        compose_ok = selected.vertices == expected;
    }
    out.witnesses_compose = compose_ok;
    return out;
}

enum class ClosedFormKind { Simplex, Cube };

/// f-vector of the rounding of a perfectly centered simplex or of a cube.
inline std::vector<Integer> closed_form_fvector(ClosedFormKind kind, std::size_t d) {
    if (d == 0) throw DomainError("closed_form_fvector: dimension must be positive");
    std::vector<Integer> f(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (kind == ClosedFormKind::Simplex) {
            f[k] = binomial(d + 1, k + 2) * (boost::multiprecision::pow(Integer(2), k + 2) - 2);
        } else {
            f[k] = binomial(d, k + 1) * boost::multiprecision::pow(Integer(2), d - k - 1) *
                   (boost::multiprecision::pow(Integer(3), k + 1) - 1);
        }
    }
    return f;
}

/// f^(n) from f^(1) for repeated rounding in R^3.
inline std::vector<Integer> repeated_rounding_fvector(const std::vector<Integer>& first, std::size_t n) {
    if (first.size() != 3) throw DimensionMismatch("repeated_rounding_fvector: needs a 3-dimensional f-vector");
    if (n == 0) throw DomainError("repeated_rounding_fvector: n starts at 1");
    const Integer scale = boost::multiprecision::pow(Integer(4), static_cast<unsigned>(n - 1));
    return {scale * first[0], 2 * scale * first[0], first[2] + (scale - 1) * first[0]};
}

struct RoundingStep {
    std::size_t iteration = 0;
    std::vector<Integer> computed_f;
    std::vector<Integer> predicted_f;
    Integer euler = 0;
    bool perfectly_centered = false;
    Rational facet_vertex_ratio;  // f_2 / f_0
};

struct RepeatedRoundingReport {
    std::vector<RoundingStep> steps;
    bool passed() const {
        for (const auto& s : steps)
            if (s.computed_f != s.predicted_f || s.euler != 0 || !s.perfectly_centered) return false;
        return !steps.empty();
    }
};

/// Rounds n times, checking perfect centering and the recurrences after
/// every step. A perfect-centering failure of an iterate throws.
inline RepeatedRoundingReport repeated_round_check(const Polytope& p, std::size_t n) {
    if (p.ambient_dim() != 3 || !p.full_dimensional())
        throw PreconditionError("repeated_round_check: needs a 3-dimensional polytope in R^3");
    if (!is_perfectly_centered(p)) throw PreconditionError("repeated_round_check: polytope is not perfectly centered");
    RepeatedRoundingReport report;
    Polytope cur = p;
    std::vector<Integer> first;
    for (std::size_t i = 1; i <= n; ++i) {
        cur = nesterov_round(cur).sum;
        const PerfectCenterReport pc = perfectly_centered_witnesses(cur);
        RoundingStep step;
        step.iteration = i;
        step.computed_f = f_vector(pc.lattice);
        if (i == 1) first = step.computed_f;
        step.predicted_f = repeated_rounding_fvector(first, i);
        step.euler = euler_residual(pc.lattice);
        step.perfectly_centered = pc.overall;
        step.facet_vertex_ratio = Rational(step.computed_f[2], step.computed_f[0]);
        report.steps.push_back(std::move(step));
        if (!pc.overall)
            throw std::logic_error("repeated_round_check: iterate " + std::to_string(i) + " is not perfectly centered");
    }
    return report;
}

}  // namespace polycalc
