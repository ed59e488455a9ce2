#pragma once

// Exact linear algebra over Q: rank, solving, affine hulls, orthogonal
// projection, and the rational constructions (circle points, Cayley
// rotations) used by the extremal families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static RationalMatrix from_rows(std::span<const RationalVector> rows) {
        if (rows.empty()) return {};
        RationalMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rows.front().check_same(rows[i]);
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const {
        RationalVector r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    RationalVector column(std::size_t j) const {
        RationalVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
        if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        RationalVector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Incremental fraction-free row echelon form over Z.
///
/// Rows are kept primitive after every elimination step, which keeps the
/// coefficient growth of Bareiss-style updates in check. Row k is zero in
/// the pivot columns of rows 0..k-1.
class IntegerEchelon {
public:
    explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    IntVector reduce(IntVector r) const {
        if (r.size() != cols_) throw DimensionMismatch("row length " + std::to_string(r.size()) +
                                                       " does not match " + std::to_string(cols_));
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (r[p] == 0) continue;
            const Integer a = rows_[k][p];
            const Integer b = r[p];
            for (std::size_t j = 0; j < cols_; ++j) r[j] = a * r[j] - b * rows_[k][j];
            make_primitive(r);
        }
        return r;
    }

    /// Returns true when the row was independent of the rows already held.
    bool insert(IntVector r) {
        if (rows_.size() == cols_) {
            if (r.size() != cols_) throw DimensionMismatch("row length mismatch");
            return false;
        }
        r = reduce(std::move(r));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r[j] != 0) {
                rows_.push_back(std::move(r));
                pivots_.push_back(j);
                return true;
            }
        }
        return false;
    }
    bool insert(const RationalVector& r) { return insert(primitive_integer(r)); }

    bool full() const { return rows_.size() == cols_; }

private:
    std::size_t cols_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(std::span<const RationalVector> rows) {
    if (rows.empty()) return 0;
    IntegerEchelon ech(rows.front().size());
    for (const auto& r : rows) {
        if (r.size() != ech.cols()) throw DimensionMismatch("rank: rows of different lengths");
        ech.insert(r);
    }
    return ech.rank();
}

inline std::size_t rank(std::span<const IntVector> rows, std::size_t cols) {
    IntegerEchelon ech(cols);
    for (const auto& r : rows) {
        ech.insert(r);
        if (ech.full()) break;
    }
    return ech.rank();
}

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
inline std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DimensionMismatch("solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        const Rational inv = 1 / a(col, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[i] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
    return x;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("inverse: matrix not square");
    RationalMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = solve(a, RationalVector::unit(n, j));
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    return inv;
}

inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("determinant: matrix not square");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

/// Basis of {x : <x, r> = 0 for every row r}.
inline std::vector<RationalVector> null_space(std::span<const RationalVector> rows, std::size_t dim) {
    // Reduced row echelon form over Q.
    std::vector<RationalVector> m(rows.begin(), rows.end());
    for (const auto& r : m)
        if (r.size() != dim) throw DimensionMismatch("null_space: row length mismatch");
    std::vector<std::size_t> pivot_cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < dim && lead < m.size(); ++col) {
        std::size_t piv = lead;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[lead]);
        const Rational inv = 1 / m[lead][col];
        m[lead] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == lead || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            m[i] -= f * m[lead];
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(dim);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k][free];
        basis.push_back(to_rational(primitive_integer(v)));
    }
    return basis;
}

/// basepoint + span(direction_basis); the basis is linearly independent.
struct AffineSubspace {
    RationalVector basepoint;
    std::vector<RationalVector> direction_basis;

    std::size_t ambient_dim() const { return basepoint.size(); }
    int dim() const { return static_cast<int>(direction_basis.size()); }

    bool contains(const RationalVector& p) const {
        basepoint.check_same(p);
        std::vector<RationalVector> rows = direction_basis;
        rows.push_back(p - basepoint);
        return rank(rows) == direction_basis.size();
    }
};

inline AffineSubspace affine_hull(std::span<const RationalVector> points) {
    if (points.empty()) throw EmptyInput("affine_hull of an empty point set");
    AffineSubspace a{points.front(), {}};
    IntegerEchelon ech(points.front().size());
    for (const auto& p : points) {
        points.front().check_same(p);
        if (ech.full()) continue;
        RationalVector diff = p - points.front();
        if (ech.insert(diff)) a.direction_basis.push_back(std::move(diff));
    }
    return a;
}

/// Orthogonal projection of p onto span(basis) + base, via the normal equations.
inline RationalVector project_onto_affine(const RationalVector& p, const AffineSubspace& a) {
    a.basepoint.check_same(p);
    const std::size_t k = a.direction_basis.size();
    if (k == 0) return a.basepoint;
    RationalMatrix gram(k, k);
    RationalVector rhs(k);
    const RationalVector offset = p - a.basepoint;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            gram(i, j) = dot(a.direction_basis[i], a.direction_basis[j]);
            gram(j, i) = gram(i, j);
        }
        rhs[i] = dot(a.direction_basis[i], offset);
    }
    auto coeffs = solve(gram, rhs);
    if (!coeffs) throw DomainError("project_onto_affine: direction basis is not independent");
    RationalVector q = a.basepoint;
    for (std::size_t i = 0; i < k; ++i) q += (*coeffs)[i] * a.direction_basis[i];
    return q;
}

/// Orthogonal projection of v onto the linear span of basis.
inline RationalVector project_onto_span(const RationalVector& v, std::span<const RationalVector> basis) {
    AffineSubspace through_origin{RationalVector(v.size()), {basis.begin(), basis.end()}};
    return project_onto_affine(v, through_origin);
}

/// Point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the open upper unit half-circle.
/// The angle increases strictly with t.
inline RationalVector rational_circle_point(const Rational& t) {
    if (t <= 0) throw DomainError("rational_circle_point needs t > 0, got " + to_string(t));
    const Rational denom = 1 + t * t;
    return RationalVector{(1 - t * t) / denom, 2 * t / denom};
}

/// Q = (I - A)(I + A)^{-1}; orthogonal whenever A is skew-symmetric.
inline std::optional<RationalMatrix> cayley_transform(const RationalMatrix& skew) {
    const std::size_t n = skew.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (skew(i, j) != -skew(j, i)) throw DomainError("cayley_transform: matrix is not skew-symmetric");
    const RationalMatrix id = RationalMatrix::identity(n);
    auto inv = inverse(id + skew);
    if (!inv) return std::nullopt;
    return (id - skew) * *inv;
}

/// Exactly orthogonal d x d rational matrix, deterministic in the seed.
inline RationalMatrix random_rational_rotation(std::size_t d, std::uint64_t seed) {
    if (d < 2) throw DomainError("random_rational_rotation needs d >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(2, 7);
    for (;;) {
        RationalMatrix a(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                a(i, j) = Rational(num(rng), den(rng));
                a(j, i) = -a(i, j);
            }
        // I + A is never singular for skew-symmetric A over Q; resample anyway.
        if (auto q = cayley_transform(a)) return *q;
    }
}

}  // namespace polycalc
