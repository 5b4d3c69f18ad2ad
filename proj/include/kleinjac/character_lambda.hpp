#pragma once

// Sign character on bundles L with sigma^* conj(L) isomorphic to L.
//
// An isomorphism alpha: L -> sigma^* conj(L) composes with its conjugate to
// c * Id_L for a nonzero real c. Rescaling alpha by z multiplies c by |z|^2, so
// the sign of c is an invariant of L; alpha / sqrt|c| realizes it as +-Id_L.
// Reality of c is taken as a precondition here.

#include "kleinjac/genus1_divisor_model.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace kleinjac {

using Sign = int;  // +1 or -1

struct IsoScalar {
    double c;

    explicit IsoScalar(double value) : c(value) {
        if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("IsoScalar: c must be a nonzero real");
    }

    Sign sign() const noexcept { return c > 0 ? 1 : -1; }
};

struct NormalizedIso {
    Sign sign;
    double scale;  // alpha_0 = scale * alpha
};

inline NormalizedIso normalize_iso(const IsoScalar& s) { return {s.sign(), 1.0 / std::sqrt(std::abs(s.c))}; }

/// Scalar of (z alpha) composed with its conjugate: |z|^2 c.
inline IsoScalar rescale_iso(const IsoScalar& s, std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("rescale_iso: z must be nonzero");
    return IsoScalar(std::norm(z) * s.c);
}

/// Whether a bundle of this degree can have lambda = -1: degree = genus + 1 mod 2.
inline bool lambda_minus_allowed(unsigned genus, long long degree) {
    if (genus == 0) throw std::invalid_argument("lambda_minus_allowed: genus must be positive");
    const long long lhs = ((degree % 2) + 2) % 2;
    return lhs == static_cast<long long>((genus + 1) % 2);
}

/// Genus, degree and (optionally known) lambda of a bundle class. Rejects a
/// lambda of -1 at a degree of the wrong parity.
struct BundleClassMeta {
    unsigned genus;
    long long degree;
    std::optional<Sign> lambda;

    BundleClassMeta(unsigned g, long long d, std::optional<Sign> l = std::nullopt) : genus(g), degree(d), lambda(l) {
        if (genus == 0) throw std::invalid_argument("BundleClassMeta: genus must be positive");
        if (lambda && *lambda != 1 && *lambda != -1) throw std::invalid_argument("BundleClassMeta: lambda must be +-1");
        if (lambda == -1 && !lambda_minus_allowed(genus, degree))
            throw std::invalid_argument("BundleClassMeta: lambda = -1 needs degree = genus + 1 mod 2");
    }
};

/// lambda on fixed degree-0 classes of the genus-1 model: +1 on T1 (classes with
/// an invariant representative), -1 on T2. nullopt for anything else.
inline std::optional<Sign> lambda_of_model_class(const genus1::Divisor& d) {
    switch (genus1::classify_fixed_class(d)) {
        case genus1::ClassLabel::T1: return 1;
        case genus1::ClassLabel::T2: return -1;
        default: return std::nullopt;
    }
}

/// Index of the image of the real-structure map inside the fixed part of J^0:
/// 1 for even genus, 2 for odd genus.
inline unsigned theorem_index(unsigned genus) {
    if (genus == 0) throw std::invalid_argument("theorem_index: genus must be positive");
    return genus % 2 == 0 ? 1U : 2U;
}

}  // namespace kleinjac
