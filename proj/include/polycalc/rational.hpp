#pragma once

// Exact scalars and vectors. Every geometric predicate in the library
// bottoms out in these types; there is no floating point anywhere below
// the figure exporters.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "polycalc/errors.hpp"

namespace polycalc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "p/q" or a finite decimal such as "-3.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto to_integer = [](std::string_view s) {
        std::string owned(s);
        if (!owned.empty() && owned.front() == '+') owned.erase(0, 1);
        return Integer(owned);
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = trim(text.substr(0, slash));
        auto den = trim(text.substr(slash + 1));
        if (!is_integer(num) || !is_integer(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
        Integer d = to_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(to_integer(num), d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        std::string_view digits_whole = whole;
        if (!digits_whole.empty() && (digits_whole.front() == '-' || digits_whole.front() == '+'))
            digits_whole.remove_prefix(1);
        bool ok = (!digits_whole.empty() || !frac.empty()) &&
                  std::all_of(digits_whole.begin(), digits_whole.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                  std::all_of(frac.begin(), frac.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (!ok) throw ParseError("malformed decimal '" + std::string(text) + "'");
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer w = digits_whole.empty() ? Integer(0) : Integer(std::string(digits_whole));
        Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
        Rational value(w * scale + f, scale);
        return negative ? Rational(-value) : value;
    }
    if (!is_integer(text)) throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(to_integer(text));
}

/// A point or direction in Q^d.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim) {}
    RationalVector(std::initializer_list<Rational> values) : coords_(values) {}
    explicit RationalVector(std::vector<Rational> values) : coords_(std::move(values)) {}

    static RationalVector unit(std::size_t dim, std::size_t axis) {
        RationalVector e(dim);
        e[axis] = 1;
        return e;
    }

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
    }

    RationalVector& operator+=(const RationalVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    RationalVector& operator-=(const RationalVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    RationalVector& operator*=(const Rational& s) {
        for (auto& q : coords_) q *= s;
        return *this;
    }

    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator-(RationalVector a) {
        for (auto& q : a.coords_) q = -q;
        return a;
    }
    friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
    friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
    // Lexicographic; shorter vectors first.
    friend bool operator<(const RationalVector& a, const RationalVector& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                            b.coords_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
        return os << ')';
    }

    void check_same(const RationalVector& o) const {
        if (o.size() != size())
            throw DimensionMismatch("vector lengths differ: " + std::to_string(size()) + " vs " +
                                    std::to_string(o.size()));
    }

private:
    std::vector<Rational> coords_;
};

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    a.check_same(b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

using IntVector = std::vector<Integer>;

inline Integer lcm_of_denominators(const RationalVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator_of(q));
    return l;
}

/// Positive multiple of v with coprime integer entries (zero stays zero).
inline IntVector primitive_integer(const RationalVector& v) {
    Integer l = lcm_of_denominators(v);
    IntVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

inline void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const auto& z : v) g = boost::multiprecision::gcd(g, z);
    if (g > 1)
        for (auto& z : v) z /= g;
}

inline RationalVector to_rational(const IntVector& v) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

/// Approximate rendering, for figures only.
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace polycalc
