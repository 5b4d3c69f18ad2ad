#pragma once

// Exact genus-1 model of a fixed-point-free real structure.
//
// X = C / (Z + tau Z) with tau purely imaginary, and sigma(z) = conj(z) + 1/2.
// A point x + tau y is stored as the rational pair (x, y) mod 1, so that
//
//     sigma(x, y) = (x + 1/2, -y).
//
// Divisor classes are decided by Abel's theorem: two divisors are linearly
// equivalent iff they have the same degree and the difference sums to 0 in
// the group law. The real part of the period is 0 here, which matches the
// odd-genus canonical Re P = A/2 at genus 1.

#include "kleinjac/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace kleinjac::genus1 {

struct ModelPoint {
    Rational x;
    Rational y;

    ModelPoint() = default;
    ModelPoint(Rational px, Rational py) : x(frac_part(px)), y(frac_part(py)) {}

    friend bool operator==(const ModelPoint& a, const ModelPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const ModelPoint& a, const ModelPoint& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }

    friend ModelPoint operator+(const ModelPoint& a, const ModelPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend ModelPoint operator-(const ModelPoint& a, const ModelPoint& b) { return {a.x - b.x, a.y - b.y}; }

    friend std::ostream& operator<<(std::ostream& os, const ModelPoint& p) { return os << '(' << p.x << ',' << p.y << ')'; }
};

inline ModelPoint origin() { return {Rational(0), Rational(0)}; }

inline ModelPoint sigma_point(const ModelPoint& p) { return {p.x + make_rational(1, 2), -p.y}; }

/// Finite formal sum of points. Zero multiplicities are never stored.
class Divisor {
public:
    using Multiplicity = long long;

    Divisor() = default;

    static Divisor point(const ModelPoint& p, Multiplicity m = 1) {
        Divisor d;
        d.add(p, m);
        return d;
    }

    void add(const ModelPoint& p, Multiplicity m) {
        if (m == 0) return;
        auto [it, inserted] = support_.try_emplace(p, m);
        if (!inserted && (it->second += m) == 0) support_.erase(it);
    }

    const std::map<ModelPoint, Multiplicity>& support() const noexcept { return support_; }
    bool empty() const noexcept { return support_.empty(); }

    Multiplicity degree() const {
        Multiplicity d = 0;
        for (const auto& [p, m] : support_) d += m;
        return d;
    }

    /// Sum of |multiplicity| over the support.
    Multiplicity total_multiplicity() const {
        Multiplicity t = 0;
        for (const auto& [p, m] : support_) t += m < 0 ? -m : m;
        return t;
    }

    Divisor& operator+=(const Divisor& o) {
        for (const auto& [p, m] : o.support_) add(p, m);
        return *this;
    }
    Divisor& operator-=(const Divisor& o) {
        for (const auto& [p, m] : o.support_) add(p, -m);
        return *this;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(Multiplicity k, const Divisor& d) {
        Divisor out;
        for (const auto& [p, m] : d.support_) out.add(p, k * m);
        return out;
    }

    friend bool operator==(const Divisor&, const Divisor&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Divisor& d) {
        if (d.empty()) return os << '0';
        bool first = true;
        for (const auto& [p, m] : d.support_) {
            os << (first ? "" : " ") << (m < 0 ? "-" : (first ? "" : "+")) << (m < 0 ? -m : m) << p;
            first = false;
        }
        return os;
    }

private:
    std::map<ModelPoint, Multiplicity> support_;
};

/// (p) + (sigma p): the basic invariant divisor, degree 2.
inline Divisor orbit_pair(const ModelPoint& p) { return Divisor::point(p) + Divisor::point(sigma_point(p)); }

inline Divisor sigma_divisor(const Divisor& d) {
    Divisor out;
    for (const auto& [p, m] : d.support()) out.add(sigma_point(p), m);
    return out;
}

/// Group-law sum of a degree-0 divisor.
inline ModelPoint abel_jacobi(const Divisor& d) {
    if (d.degree() != 0) throw std::domain_error("abel_jacobi: divisor has nonzero degree");
    Rational x = 0, y = 0;
    for (const auto& [p, m] : d.support()) {
        x += m * p.x;
        y += m * p.y;
    }
    return {x, y};
}

inline bool linearly_equivalent(const Divisor& a, const Divisor& b) {
    if (a.degree() != b.degree()) return false;
    return abel_jacobi(a - b) == origin();
}

enum class ClassLabel { T1, T2, not_fixed, nonzero_degree };

inline std::string_view to_string(ClassLabel c) noexcept {
    switch (c) {
        case ClassLabel::T1: return "T1";
        case ClassLabel::T2: return "T2";
        case ClassLabel::not_fixed: return "NOT_FIXED";
        case ClassLabel::nonzero_degree: return "NONZERO_DEGREE";
    }
    return "?";
}

/// Label of a degree-0 class by its Abel-Jacobi image a: sigma* acts on a as
/// (a_x, a_y) -> (a_x, -a_y), so the class is fixed iff 2 a_y is integral.
inline ClassLabel classify_aj(const ModelPoint& a) {
    if (a.y == 0) return ClassLabel::T1;
    if (a.y == make_rational(1, 2)) return ClassLabel::T2;
    return ClassLabel::not_fixed;
}

inline ClassLabel classify_fixed_class(const Divisor& d) {
    if (d.degree() != 0) return ClassLabel::nonzero_degree;
    return classify_aj(abel_jacobi(d));
}

/// A sigma-invariant divisor linearly equivalent to d, when one exists.
///
/// For a = (a_x, 0) the divisor (p) + (sigma p) - (O) - (sigma O) with
/// p = (a_x / 2, 0) works. Invariant degree-0 divisors are integer combinations
/// of orbit pairs, whose images all have y = 0, so T2 classes have none.
inline std::optional<Divisor> invariant_representative(const Divisor& d) {
    const ClassLabel label = classify_fixed_class(d);
    if (label != ClassLabel::T1 && label != ClassLabel::T2)
        throw std::domain_error("invariant_representative: class is not a fixed degree-0 class");
    if (label == ClassLabel::T2) return std::nullopt;
    const ModelPoint a = abel_jacobi(d);
    if (a == origin()) return Divisor{};
    return orbit_pair({a.x / 2, Rational(0)}) - orbit_pair(origin());
}

/// Fixed degree-0 divisor without invariant representative: (0, 1/2) - (0, 0).
inline Divisor translation_class_X() {
    return Divisor::point({Rational(0), make_rational(1, 2)}) - Divisor::point(origin());
}

/// Moves d to degree 0 or 1 by subtracting (or adding) copies of the orbit pair at O.
inline Divisor reduce_degree_invariant(const Divisor& d) {
    const Divisor::Multiplicity deg = d.degree();
    Divisor::Multiplicity k = deg / 2;
    if (deg < 0 && deg % 2 != 0) --k;  // floor division
    return d - k * orbit_pair(origin());
}

/// Points (i/n, j/n), 0 <= i, j < n, in lexicographic order.
inline std::vector<ModelPoint> torsion_points(unsigned n) {
    if (n == 0) throw std::invalid_argument("torsion_points: n must be positive");
    std::vector<ModelPoint> pts;
    pts.reserve(std::size_t{n} * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) pts.emplace_back(make_rational(i, n), make_rational(j, n));
    return pts;
}

namespace detail {

// Calls f(indices) for every non-decreasing sequence of length k over [0, n).
template <class F>
void for_each_multiset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k, 0);
    if (k == 0) {
        f(idx);
        return;
    }
    if (n == 0) return;
    for (;;) {
        f(idx);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - 1) --pos;
        if (pos == 0) return;
        const std::size_t v = ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = v;
    }
}

}  // namespace detail

/// Exhaustive search for an invariant divisor linearly equivalent to d among
/// degree-0 invariant divisors on n-torsion points with total multiplicity at
/// most max_total_mult. Every candidate is checked for invariance directly.
inline std::optional<Divisor> search_invariant_representative(const Divisor& d, unsigned n = 12,
                                                              unsigned max_total_mult = 6) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("search_invariant_representative: torsion order must be even");
    if (d.degree() != 0) return std::nullopt;

    // One point per sigma-orbit: x in [0, 1/2).
    std::vector<ModelPoint> reps;
    for (const ModelPoint& p : torsion_points(n))
        if (p.x < make_rational(1, 2)) reps.push_back(p);
    std::vector<Divisor> pairs;
    pairs.reserve(reps.size());
    for (const auto& p : reps) pairs.push_back(orbit_pair(p));

    // Degree 0 forces as many positive as negative orbit pairs; each pair
    // contributes 2 to the total multiplicity.
    std::optional<Divisor> found;
    for (std::size_t k = 0; 4 * k <= max_total_mult && !found; ++k) {
        detail::for_each_multiset(pairs.size(), k, [&](const std::vector<std::size_t>& plus) {
            if (found) return;
            detail::for_each_multiset(pairs.size(), k, [&](const std::vector<std::size_t>& minus) {
                if (found) return;
                Divisor e;
                for (auto i : plus) e += pairs[i];
                for (auto i : minus) e -= pairs[i];
                if (sigma_divisor(e) != e) throw std::logic_error("search_invariant_representative: candidate not invariant");
                if (linearly_equivalent(d, e)) found = std::move(e);
            });
        });
    }
    return found;
}

/// Brute-force census of degree-0 divisor classes on n-torsion points.
struct TorsionCensus {
    unsigned n = 0;
    unsigned max_support = 0;
    std::size_t divisors_examined = 0;

    /// One representative divisor per Abel-Jacobi value, by label.
    std::map<ModelPoint, Divisor> t1;
    std::map<ModelPoint, Divisor> t2;
    std::map<ModelPoint, Divisor> not_fixed;

    /// Label agrees with the direct test [D] == [sigma* D] on every divisor.
    bool fixedness_consistent = true;
    /// Fixed values are exactly the n points with y = 0 and the n with y = 1/2.
    bool circles_exact = false;
    bool t1_subgroup = false;
    /// T2 == T1 + AJ(X).
    bool t2_is_translate = false;
    /// Every T1 sample has a verified invariant representative.
    bool t1_representatives = false;
    /// Every T2 sample has no invariant representative, by construction and by exhaustive search.
    bool t2_no_representative = false;

    bool all_pass() const noexcept {
        return fixedness_consistent && circles_exact && t1_subgroup && t2_is_translate && t1_representatives &&
               t2_no_representative;
    }
};

/// Enumerates sum_{i<=k} (p_i) - sum_{i<=k} (q_i) over n-torsion points for
/// 2k <= max_support and checks the fixed-class structure. search_n and
/// search_mult bound the exhaustive negative search run on each T2 sample.
inline TorsionCensus enumerate_torsion_suite(unsigned n, unsigned max_support, unsigned search_n = 12,
                                             unsigned search_mult = 6) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("enumerate_torsion_suite: torsion order must be even");
    if (max_support == 0) throw std::invalid_argument("enumerate_torsion_suite: max_support must be positive");

    TorsionCensus c;
    c.n = n;
    c.max_support = max_support;
    const std::vector<ModelPoint> pts = torsion_points(n);

    for (std::size_t k = 0; 2 * k <= max_support; ++k) {
        detail::for_each_multiset(pts.size(), k, [&](const std::vector<std::size_t>& plus) {
            detail::for_each_multiset(pts.size(), k, [&](const std::vector<std::size_t>& minus) {
                Divisor d;
                for (auto i : plus) d.add(pts[i], 1);
                for (auto i : minus) d.add(pts[i], -1);
                ++c.divisors_examined;

                const ClassLabel label = classify_fixed_class(d);
                const bool fixed = linearly_equivalent(d, sigma_divisor(d));
                if (fixed != (label == ClassLabel::T1 || label == ClassLabel::T2)) c.fixedness_consistent = false;

                auto& bucket = label == ClassLabel::T1 ? c.t1 : label == ClassLabel::T2 ? c.t2 : c.not_fixed;
                bucket.try_emplace(abel_jacobi(d), d);
            });
        });
    }

    std::set<ModelPoint> expected_t1, expected_t2, seen_t1, seen_t2;
    for (unsigned i = 0; i < n; ++i) {
        expected_t1.emplace(make_rational(i, n), Rational(0));
        expected_t2.emplace(make_rational(i, n), make_rational(1, 2));
    }
    for (const auto& [a, d] : c.t1) seen_t1.insert(a);
    for (const auto& [a, d] : c.t2) seen_t2.insert(a);
    c.circles_exact = seen_t1 == expected_t1 && seen_t2 == expected_t2;

    c.t1_subgroup = seen_t1.count(origin()) == 1;
    for (const auto& a : seen_t1) {
        if (!seen_t1.count(origin() - a)) c.t1_subgroup = false;
        for (const auto& b : seen_t1)
            if (!seen_t1.count(a + b)) c.t1_subgroup = false;
    }

    const ModelPoint shift = abel_jacobi(translation_class_X());
    std::set<ModelPoint> translated;
    for (const auto& a : seen_t1) translated.insert(a + shift);
    c.t2_is_translate = translated == seen_t2;

    c.t1_representatives = true;
    for (const auto& [a, d] : c.t1) {
        const auto e = invariant_representative(d);
        if (!e || sigma_divisor(*e) != *e || !linearly_equivalent(d, *e)) c.t1_representatives = false;
    }
    c.t2_no_representative = true;
    for (const auto& [a, d] : c.t2) {
        if (invariant_representative(d) || search_invariant_representative(d, search_n, search_mult))
            c.t2_no_representative = false;
    }
    return c;
}

}  // namespace kleinjac::genus1
