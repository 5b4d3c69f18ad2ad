#pragma once

// Fixed locus of the conjugation involution on the Jacobian torus C^g / (Z^g + P Z^g).
//
// Points are written z = x + P y with x, y in R^g / Z^g. Since conj(z) =
// (x + 2 Re P y) + P (-y), the involution acts on (x, y) coordinates as
//
//     (x, y) -> (x + 2 Re P y, -y)   mod Z^2g
//
// and only 2 Re P enters. All decisions are made with exact rationals; the
// floating point Im P is used only by the brute-force scan at the bottom.

#include "kleinjac/gf2.hpp"
#include "kleinjac/homology_action.hpp"
#include "kleinjac/integer_matrix.hpp"
#include "kleinjac/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace kleinjac {

/// Re P stored as the integral matrix 2 Re P.
class RealPartMatrix {
public:
    RealPartMatrix(unsigned genus, Parity parity, IntegerMatrix doubled)
        : genus_(genus), parity_(parity), doubled_(std::move(doubled)) {
        require_genus_parity(genus_, parity_);
        if (doubled_.rows() != genus_ || doubled_.cols() != genus_)
            throw std::invalid_argument("RealPartMatrix: 2 Re P must be genus x genus");
        if (!doubled_.is_symmetric()) throw std::invalid_argument("RealPartMatrix: Re P must be symmetric");
    }

    /// Builds from rational entries; rejects anything that is not half-integral.
    static RealPartMatrix from_rationals(unsigned genus, Parity parity, const std::vector<std::vector<Rational>>& re) {
        if (re.size() != genus) throw std::invalid_argument("RealPartMatrix: wrong row count");
        IntegerMatrix d(genus, genus);
        for (std::size_t i = 0; i < genus; ++i) {
            if (re[i].size() != genus) throw std::invalid_argument("RealPartMatrix: wrong column count");
            for (std::size_t j = 0; j < genus; ++j) {
                const Rational twice = 2 * re[i][j];
                if (!is_integer(twice)) throw std::invalid_argument("RealPartMatrix: Re P is not half-integral");
                d(i, j) = boost::multiprecision::numerator(twice);
            }
        }
        return RealPartMatrix(genus, parity, std::move(d));
    }

    unsigned genus() const noexcept { return genus_; }
    Parity parity() const noexcept { return parity_; }
    const IntegerMatrix& doubled() const noexcept { return doubled_; }
    Rational entry(std::size_t i, std::size_t j) const { return Rational(doubled_.at(i, j), Integer(2)); }

    friend bool operator==(const RealPartMatrix&, const RealPartMatrix&) = default;

private:
    unsigned genus_;
    Parity parity_;
    IntegerMatrix doubled_;
};

/// Re P = -I - K/2 for even genus, Re P = A/2 for odd genus (from P = A - conj(P)).
inline RealPartMatrix canonical_real_part(unsigned genus, Parity parity) {
    require_genus_parity(genus, parity);
    if (parity == Parity::even) {
        IntegerMatrix d = Integer(-2) * IntegerMatrix::identity(genus) - k_matrix(genus);
        return RealPartMatrix(genus, parity, std::move(d));
    }
    return RealPartMatrix(genus, parity, a_matrix(genus, parity));
}

/// Im P, floating point. Must be symmetric positive definite.
class ImagPartMatrix {
public:
    ImagPartMatrix(std::size_t n, std::vector<double> entries, double tol = 1e-9) : n_(n), entries_(std::move(entries)) {
        if (n_ == 0 || entries_.size() != n_ * n_) throw std::invalid_argument("ImagPartMatrix: bad dimensions");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol)
                    throw std::invalid_argument("ImagPartMatrix: Im P must be symmetric");
        for (std::size_t k = 1; k <= n_; ++k)
            if (!(leading_minor(k) > tol))
                throw std::invalid_argument("ImagPartMatrix: Im P is not positive definite (degenerate minor)");
    }

    static ImagPartMatrix identity(std::size_t n) {
        std::vector<double> e(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
        return ImagPartMatrix(n, std::move(e));
    }

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// Determinant of the top-left k x k block (partial-pivot LU).
    double leading_minor(std::size_t k) const {
        std::vector<double> a(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i * k + j] = (*this)(i, j);
        double det = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            for (std::size_t i = c + 1; i < k; ++i)
                if (std::abs(a[i * k + c]) > std::abs(a[p * k + c])) p = i;
            if (a[p * k + c] == 0.0) return 0.0;
            if (p != c) {
                for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
                det = -det;
            }
            det *= a[c * k + c];
            for (std::size_t i = c + 1; i < k; ++i) {
                const double f = a[i * k + c] / a[c * k + c];
                for (std::size_t j = c; j < k; ++j) a[i * k + j] -= f * a[c * k + j];
            }
        }
        return det;
    }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// Point of R^2g / Z^2g in (x, y) coordinates, z = x + P y. Entries are kept in [0, 1).
struct TorusPointXY {
    std::vector<Rational> x;
    std::vector<Rational> y;

    TorusPointXY() = default;
    TorusPointXY(std::vector<Rational> xs, std::vector<Rational> ys) : x(std::move(xs)), y(std::move(ys)) {
        if (x.size() != y.size()) throw std::invalid_argument("TorusPointXY: x and y differ in length");
        for (auto& v : x) v = frac_part(v);
        for (auto& v : y) v = frac_part(v);
    }

    std::size_t dimension() const noexcept { return x.size(); }

    /// Integer lattice translation (x + n, y + m); a no-op on the torus.
    TorusPointXY translated(const std::vector<long long>& n, const std::vector<long long>& m) const {
        if (n.size() != x.size() || m.size() != y.size())
            throw std::invalid_argument("TorusPointXY::translated: size mismatch");
        std::vector<Rational> xs = x, ys = y;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] += n[i];
            ys[i] += m[i];
        }
        return {std::move(xs), std::move(ys)};
    }

    friend bool operator==(const TorusPointXY&, const TorusPointXY&) = default;
};

/// Lift of the involution in (x, y) coordinates.
inline TorusPointXY involution_xy(const RealPartMatrix& rp, const TorusPointXY& p) {
    const std::size_t g = rp.genus();
    if (p.dimension() != g) throw std::invalid_argument("involution_xy: point dimension differs from genus");
    std::vector<Rational> xs(g), ys(g);
    for (std::size_t i = 0; i < g; ++i) {
        Rational shift = 0;
        for (std::size_t j = 0; j < g; ++j) shift += Rational(rp.doubled()(i, j)) * p.y[j];
        xs[i] = p.x[i] + shift;
        ys[i] = -p.y[i];
    }
    return {std::move(xs), std::move(ys)};
}

inline bool is_fixed_point(const RealPartMatrix& rp, const TorusPointXY& p) { return involution_xy(rp, p) == p; }

/// Connected components of the fixed locus. Component i is the real g-torus
/// { (x, offsets[i]) : x in R^g / Z^g }. offsets[0] is always 0.
struct FixedLocus {
    unsigned genus = 0;
    std::vector<Gf2Vector> kernel_basis;
    std::vector<std::vector<Rational>> offsets;

    std::size_t count() const noexcept { return offsets.size(); }
};

/// Fixed points are (x, y) with 2y in Z^g and 2 Re P y in Z^g. Writing y = k/2
/// the second condition is (2 Re P) k = 0 mod 2, so components are indexed by
/// the GF(2) kernel of 2 Re P.
inline FixedLocus fixed_components(const RealPartMatrix& rp, std::size_t max_kernel_dim = 20) {
    FixedLocus locus;
    locus.genus = rp.genus();
    locus.kernel_basis = gf2_kernel(rp.doubled());
    const std::size_t dim = locus.kernel_basis.size();
    if (dim > max_kernel_dim) throw std::length_error("fixed_components: too many components to enumerate");

    const std::size_t g = rp.genus();
    std::vector<Gf2Vector> ks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        Gf2Vector k(g, 0);
        for (std::size_t b = 0; b < dim; ++b)
            if (mask >> b & 1U)
                for (std::size_t i = 0; i < g; ++i) k[i] ^= locus.kernel_basis[b][i];
        ks.push_back(std::move(k));
    }
    std::sort(ks.begin(), ks.end());
    for (const auto& k : ks) {
        std::vector<Rational> off(g);
        for (std::size_t i = 0; i < g; ++i) off[i] = k[i] ? make_rational(1, 2) : Rational(0);
        locus.offsets.push_back(std::move(off));
    }
    return locus;
}

/// 0-based component index of a fixed point; nullopt when p is not fixed.
inline std::optional<std::size_t> component_of(const RealPartMatrix& rp, const FixedLocus& locus, const TorusPointXY& p) {
    if (!is_fixed_point(rp, p)) return std::nullopt;
    for (std::size_t i = 0; i < locus.offsets.size(); ++i)
        if (locus.offsets[i] == p.y) return i;
    throw std::logic_error("component_of: fixed point matches no component offset");
}

inline std::optional<std::size_t> component_of(const RealPartMatrix& rp, const TorusPointXY& p) {
    return component_of(rp, fixed_components(rp), p);
}

/// The half-period offset (x = 0, y = offset) carrying the first component onto
/// the second. nullopt when the locus is connected; only defined for two components.
inline std::optional<TorusPointXY> second_component_offset(const RealPartMatrix& rp) {
    const FixedLocus locus = fixed_components(rp);
    if (locus.count() == 1) return std::nullopt;
    if (locus.count() != 2) throw std::domain_error("second_component_offset: fixed locus has more than two components");
    return TorusPointXY(std::vector<Rational>(rp.genus(), Rational(0)), locus.offsets[1]);
}

struct ScanResult {
    std::size_t points_scanned = 0;
    std::size_t points_accepted = 0;
    /// Distinct y-coordinates (as multiples of 1/grid) among accepted points.
    std::set<std::vector<long long>> y_clusters;
    std::size_t grid = 0;

    std::size_t count() const noexcept { return y_clusters.size(); }
};

/// Numerical oracle: samples (x, y) on the grid (1/grid) Z^2g in [0,1)^2g, forms
/// z = x + P y with P = Re P + i Im P, and accepts z when some lattice vector
/// (n, m) with |n_i|, |m_i| <= lattice_bound makes |conj(z) - z - n - P m|_inf < tol.
/// Accepted points are grouped by their y-coordinate.
inline ScanResult brute_force_fixed_scan(const RealPartMatrix& rp, const ImagPartMatrix& im, std::size_t grid,
                                         int lattice_bound, double tol) {
    using cplx = std::complex<double>;
    const std::size_t g = rp.genus();
    if (im.size() != g) throw std::invalid_argument("brute_force_fixed_scan: Im P has wrong size");
    if (grid < 4 || grid % 2 != 0) throw std::invalid_argument("brute_force_fixed_scan: grid must be even and >= 4");
    if (lattice_bound < 0) throw std::invalid_argument("brute_force_fixed_scan: lattice bound must be non-negative");
    if (!(tol > 0)) throw std::invalid_argument("brute_force_fixed_scan: tolerance must be positive");

    std::vector<cplx> p(g * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) p[i * g + j] = cplx(rp.entry(i, j).convert_to<double>(), im(i, j));

    // P m for every m in [-bound, bound]^g.
    const auto side = static_cast<std::size_t>(2 * lattice_bound + 1);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < g; ++i) combos *= side;
    std::vector<cplx> pm(combos * g);
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        std::vector<double> m(g);
        for (std::size_t i = 0; i < g; ++i) {
            m[i] = static_cast<double>(static_cast<long long>(rest % side) - lattice_bound);
            rest /= side;
        }
        for (std::size_t i = 0; i < g; ++i) {
            cplx s = 0;
            for (std::size_t j = 0; j < g; ++j) s += p[i * g + j] * m[j];
            pm[c * g + i] = s;
        }
    }

    ScanResult result;
    result.grid = grid;
    std::vector<std::size_t> idx(2 * g, 0);  // x indices then y indices
    std::vector<cplx> z(g), r(g);
    const double step = 1.0 / static_cast<double>(grid);
    const double bound = lattice_bound;
    for (;;) {
        for (std::size_t i = 0; i < g; ++i) {
            cplx s = static_cast<double>(idx[i]) * step;
            for (std::size_t j = 0; j < g; ++j) s += p[i * g + j] * (static_cast<double>(idx[g + j]) * step);
            z[i] = s;
        }
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < combos && best >= tol; ++c) {
            double worst = 0.0;
            for (std::size_t i = 0; i < g; ++i) {
                r[i] = std::conj(z[i]) - z[i] - pm[c * g + i];
                // n only shifts the real part of coordinate i, so the best n_i is
                // the nearest admissible integer.
                const double n = std::clamp(std::round(r[i].real()), -bound, bound);
                worst = std::max(worst, std::abs(r[i] - n));
            }
            best = std::min(best, worst);
        }
        ++result.points_scanned;
        if (best < tol) {
            ++result.points_accepted;
            std::vector<long long> key(g);
            for (std::size_t j = 0; j < g; ++j) key[j] = static_cast<long long>(idx[g + j]);
            result.y_clusters.insert(std::move(key));
        }

        std::size_t d = 0;
        while (d < 2 * g && ++idx[d] == grid) idx[d++] = 0;
        if (d == 2 * g) break;
    }
    return result;
}

}  // namespace kleinjac
