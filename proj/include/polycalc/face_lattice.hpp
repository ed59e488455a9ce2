#pragma once

// Face lattices, normal cones and dual faces.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/lp.hpp"
#include "polycalc/polytope.hpp"

namespace polycalc {

/// All faces of a polytope, ranked by dimension, with Hasse covers.
struct FaceLattice {
    int dim = -1;
    /// Sorted by (dim, vertex index list). faces.front() is the empty face,
    /// faces.back() is the polytope itself.
    std::vector<Face> faces;
    /// (lower, upper) with dim(upper) = dim(lower) + 1.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::unordered_map<IndexSet, std::size_t> index;

    std::size_t size() const { return faces.size(); }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return faces.size() - 1; }

    std::optional<std::size_t> find(const IndexSet& vertices) const {
        auto it = index.find(vertices);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    bool is_nontrivial(std::size_t i) const { return i != bottom() && i != top(); }

    std::vector<std::size_t> of_dim(int k) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i].dim == k) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> nontrivial() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i + 1 < faces.size(); ++i) out.push_back(i);
        return out;
    }

    /// G is a face of F.
    bool contains(std::size_t f, std::size_t g) const {
        return faces[g].vertices.is_subset_of(faces[f].vertices);
    }
};

namespace detail {

inline bool face_order(const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    // Lexicographic on sorted vertex index lists.
    auto i = a.vertices.find_first();
    auto j = b.vertices.find_first();
    while (i != IndexSet::npos && j != IndexSet::npos) {
        if (i != j) return i < j;
        i = a.vertices.find_next(i);
        j = b.vertices.find_next(j);
    }
    return i == IndexSet::npos && j != IndexSet::npos;
}

}  // namespace detail

/// Closes the family of facet vertex sets under intersection.
inline FaceLattice build_face_lattice(const Polytope& p) {
    std::unordered_map<IndexSet, bool> seen;
    std::deque<IndexSet> queue;
    const IndexSet all = p.all_vertices();
    seen.emplace(all, true);
    queue.push_back(all);
    while (!queue.empty()) {
        IndexSet cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t f = 0; f < p.num_facets(); ++f) {
            IndexSet next = cur & p.facet_vertices(f);
            if (next == cur) continue;
            if (seen.emplace(next, true).second) queue.push_back(std::move(next));
        }
    }
    seen.emplace(IndexSet(p.num_vertices()), true);

    FaceLattice lattice;
    lattice.dim = p.dim();
    lattice.faces.reserve(seen.size());
    for (const auto& [vs, unused] : seen) lattice.faces.push_back(face_of(p, vs));
    std::sort(lattice.faces.begin(), lattice.faces.end(), detail::face_order);
    for (std::size_t i = 0; i < lattice.faces.size(); ++i) lattice.index.emplace(lattice.faces[i].vertices, i);

    // Facets of a face F are the (dim F - 1)-dimensional sets F ∩ facet.
    for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
        const Face& f = lattice.faces[i];
        if (f.dim == 0) {
            lattice.covers.emplace_back(lattice.bottom(), i);
            continue;
        }
        if (f.dim < 1) continue;
        std::vector<std::size_t> below;
        for (std::size_t k = 0; k < p.num_facets(); ++k) {
            if (f.facets.test(k)) continue;
            const std::size_t g = lattice.index.at(f.vertices & p.facet_vertices(k));
            if (lattice.faces[g].dim == f.dim - 1) below.push_back(g);
        }
        std::sort(below.begin(), below.end());
        below.erase(std::unique(below.begin(), below.end()), below.end());
        for (auto g : below) lattice.covers.emplace_back(g, i);
    }
    std::sort(lattice.covers.begin(), lattice.covers.end());
    return lattice;
}

/// (f_0, ..., f_{dim-1}); excludes the empty face and the polytope.
inline std::vector<Integer> f_vector(const FaceLattice& lattice) {
    std::vector<Integer> f(lattice.dim > 0 ? lattice.dim : 0);
    for (const auto& face : lattice.faces)
        if (face.dim >= 0 && face.dim < lattice.dim) f[face.dim] += 1;
    return f;
}

/// sum (-1)^k f_k - (1 - (-1)^dim); zero for every polytope.
inline Integer euler_residual(std::span<const Integer> f, int dim) {
    Integer alternating = 0;
    for (std::size_t k = 0; k < f.size(); ++k) alternating += (k % 2 == 0) ? f[k] : Integer(-f[k]);
    const Integer expected = (dim % 2 == 0) ? 0 : 2;
    return alternating - expected;
}

inline Integer euler_residual(const FaceLattice& lattice) {
    const auto f = f_vector(lattice);
    return euler_residual(f, lattice.dim);
}

/// Every interval of length two has exactly two middle elements.
inline bool has_diamond_property(const FaceLattice& lattice) {
    std::vector<std::vector<std::size_t>> up(lattice.size());
    for (const auto& [lo, hi] : lattice.covers) up[lo].push_back(hi);
    for (std::size_t g = 0; g < lattice.size(); ++g) {
        std::map<std::size_t, int> middles;
        for (auto h : up[g])
            for (auto f : up[h]) ++middles[f];
        for (const auto& [f, count] : middles)
            if (count != 2) return false;
    }
    return true;
}

/// Polyhedral cone {sum lambda_i g_i + l : lambda >= 0, l in span(lineality)}.
class Cone {
public:
    Cone(std::size_t ambient, std::vector<RationalVector> generators, std::vector<RationalVector> lineality = {})
        : ambient_(ambient), generators_(std::move(generators)), lineality_(std::move(lineality)) {
        for (const auto& g : generators_) {
            if (g.size() != ambient_) throw DimensionMismatch("Cone: generator dimension mismatch");
            if (g.is_zero()) throw DomainError("Cone: zero generator");
        }
        for (const auto& l : lineality_)
            if (l.size() != ambient_) throw DimensionMismatch("Cone: lineality dimension mismatch");
    }

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<RationalVector>& generators() const { return generators_; }
    const std::vector<RationalVector>& lineality() const { return lineality_; }

    int dim() const {
        std::vector<RationalVector> rows = generators_;
        rows.insert(rows.end(), lineality_.begin(), lineality_.end());
        return static_cast<int>(rank(rows));
    }

    /// Membership in the (closed) cone.
    bool contains(const RationalVector& x) const {
        if (x.size() != ambient_) throw DimensionMismatch("Cone::contains: dimension mismatch");
        return nonnegative_combination(columns_with_lineality(), x).has_value();
    }

    /// Membership in the relative interior: x = sum lambda_i g_i + l with
    /// every lambda_i > 0. Homogenised as t x = sum (1 + mu_i) g_i + l with
    /// t, mu >= 0; pointedness modulo the lineality space forces t > 0.
    bool relint_contains(const RationalVector& x) const {
        if (x.size() != ambient_) throw DimensionMismatch("Cone::relint_contains: dimension mismatch");
        if (generators_.empty()) return nonnegative_combination(columns_with_lineality(), x).has_value();
        std::vector<RationalVector> cols;
        RationalVector target(ambient_);
        cols.push_back(x);
        for (const auto& g : generators_) {
            cols.push_back(-g);
            target += g;
        }
        for (const auto& l : lineality_) {
            cols.push_back(l);
            cols.push_back(-l);
        }
        return nonnegative_combination(cols, target).has_value();
    }

    /// Every generator of `other` lies in this closed cone.
    bool contains(const Cone& other) const {
        for (const auto& g : other.generators_)
            if (!contains(g)) return false;
        for (const auto& l : other.lineality_)
            if (!contains(l) || !contains(-l)) return false;
        return true;
    }

private:
    std::vector<RationalVector> columns_with_lineality() const {
        std::vector<RationalVector> cols = generators_;
        for (const auto& l : lineality_) {
            cols.push_back(l);
            cols.push_back(-l);
        }
        return cols;
    }

    std::size_t ambient_;
    std::vector<RationalVector> generators_;
    std::vector<RationalVector> lineality_;
};

/// Closure of the outer normal cone N(F;P): generated by the normals of the
/// facets containing F, plus the orthogonal complement of aff(P).
inline Cone normal_cone(const Polytope& p, const Face& face) {
    if (is_trivial(p, face)) throw TrivialFaceError("normal_cone: face is trivial");
    std::vector<RationalVector> gens;
    for (auto f = face.facets.find_first(); f != IndexSet::npos; f = face.facets.find_next(f))
        gens.push_back(p.facet(f).normal);
    return Cone(p.ambient_dim(), std::move(gens), p.normal_space());
}

/// Sum of the generators: a point of the relative interior.
inline RationalVector cone_interior_point(const Cone& cone) {
    if (cone.generators().empty()) throw DomainError("cone_interior_point: cone has no rays");
    RationalVector sum(cone.ambient_dim());
    for (const auto& g : cone.generators()) sum += g;
    if (sum.is_zero()) throw DomainError("cone_interior_point: cone is not pointed");
    return sum;
}

/// F^D in `dual`, where `dual` is the polar of `p`: the dual vertices w
/// with <w, f> = 1 for every vertex f of F.
inline Face dual_face(const Polytope& p, const Polytope& dual, const Face& face) {
    if (is_trivial(p, face)) throw TrivialFaceError("dual_face: face is trivial");
    if (p.ambient_dim() != dual.ambient_dim()) throw DimensionMismatch("dual_face: ambient dimension mismatch");
    IndexSet selected(dual.num_vertices());
    const auto verts = face.vertex_indices();
    for (std::size_t w = 0; w < dual.num_vertices(); ++w) {
        bool on_all = std::all_of(verts.begin(), verts.end(),
                                  [&](std::size_t v) { return dot(dual.vertex(w), p.vertex(v)) == 1; });
        if (on_all) selected.set(w);
    }
    return face_of(dual, selected);
}

inline Face dual_face(const Polytope& p, const Face& face) { return dual_face(p, polar_dual(p), face); }

/// One line per face: "dim: i j k".
inline std::string lattice_to_text(const FaceLattice& lattice) {
    std::ostringstream os;
    for (const auto& face : lattice.faces) {
        os << face.dim << ':';
        for (auto v : face.vertex_indices()) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

/// Hasse diagram in Graphviz DOT, bottom to top.
inline std::string lattice_to_dot(const FaceLattice& lattice, const std::string& name = "lattice") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Face& f = lattice.faces[i];
        os << "  n" << i << " [label=\"";
        if (f.empty()) {
            os << "{}";
        } else {
            os << '{';
            bool first = true;
            for (auto v : f.vertex_indices()) {
                os << (first ? "" : ",") << v;
                first = false;
            }
            os << '}';
        }
        os << "\\ndim " << f.dim << "\"];\n";
    }
    for (const auto& [lo, hi] : lattice.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace polycalc
