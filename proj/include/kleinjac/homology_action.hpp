#pragma once

// Action of the anti-holomorphic involution on H_1(X, Z) in a symplectic
// basis, the basis change that makes the gamma-cycles invariant, and the
// checks that tie them together. Everything here is exact integer algebra.
//
// Matrices are indexed as displayed: for odd genus the blocks of the action
// and of the basis change sit in row/column order 1, g-1, 1, g-1.

#include "kleinjac/integer_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kleinjac {

enum class Parity { even, odd };

inline Parity parity_of(unsigned genus) noexcept { return genus % 2 == 0 ? Parity::even : Parity::odd; }

inline std::string_view to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

inline Parity parse_parity(std::string_view s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("unknown parity '" + std::string(s) + "'");
}

inline void require_genus_parity(unsigned genus, Parity parity) {
    if (genus == 0) throw std::invalid_argument("genus must be positive");
    if (parity_of(genus) != parity)
        throw std::invalid_argument("genus " + std::to_string(genus) + " is not " + std::string(to_string(parity)));
}

/// n x n matrix with ones on the anti-diagonal.
inline IntegerMatrix k_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("k_matrix: n must be positive");
    IntegerMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) k(i, n - 1 - i) = 1;
    return k;
}

/// J = [[0, -I_g], [I_g, 0]].
inline IntegerMatrix standard_intersection(unsigned genus) {
    if (genus == 0) throw std::invalid_argument("standard_intersection: genus must be positive");
    IntegerMatrix j(2 * genus, 2 * genus);
    j.set_block(0, genus, -IntegerMatrix::identity(genus));
    j.set_block(genus, 0, IntegerMatrix::identity(genus));
    return j;
}

namespace detail {

// K_n that tolerates n = 0 (empty block).
inline IntegerMatrix k_block(std::size_t n) { return n == 0 ? IntegerMatrix() : k_matrix(n); }

}  // namespace detail

inline IntegerMatrix sigma_action(unsigned genus, Parity parity) {
    require_genus_parity(genus, parity);
    if (parity == Parity::even) return k_matrix(2 * genus);

    const std::size_t h = genus - 1;
    const IntegerMatrix k = detail::k_block(h);
    IntegerMatrix s(2 * genus, 2 * genus);
    s(0, 0) = 1;
    s(genus, genus) = -1;
    s.set_block(1, genus + 1, k);
    s.set_block(genus + 1, 1, k);
    return s;
}

inline IntegerMatrix basis_change(unsigned genus, Parity parity) {
    require_genus_parity(genus, parity);
    if (parity == Parity::even) {
        const IntegerMatrix id = IntegerMatrix::identity(genus);
        const IntegerMatrix k = k_matrix(genus);
        IntegerMatrix c(2 * genus, 2 * genus);
        c.set_block(0, 0, -id);
        c.set_block(0, genus, id + k);
        c.set_block(genus, 0, -k);
        c.set_block(genus, genus, k);
        return c;
    }

    const std::size_t h = genus - 1;
    const IntegerMatrix id = IntegerMatrix::identity(h);
    const IntegerMatrix k = detail::k_block(h);
    IntegerMatrix c(2 * genus, 2 * genus);
    c(0, 0) = 1;
    c(genus, genus) = 1;
    c.set_block(1, 1, -id);
    c.set_block(1, genus + 1, id + k);
    c.set_block(genus + 1, 1, -k);
    c.set_block(genus + 1, genus + 1, k);
    return c;
}

/// C^-1 S C, exact. C must be unimodular so that the result stays integral.
inline IntegerMatrix conjugate_action(const IntegerMatrix& c, const IntegerMatrix& s) {
    if (!c.is_square() || !s.is_square() || c.rows() != s.rows())
        throw std::invalid_argument("conjugate_action: size mismatch");
    if (!c.is_unimodular()) throw std::domain_error("conjugate_action: basis change is not unimodular");
    return c.inverse() * s * c;
}

/// Upper-right block of the transformed action: -2I - K (even), diag(0, -2I - K) (odd).
inline IntegerMatrix a_matrix(unsigned genus, Parity parity) {
    require_genus_parity(genus, parity);
    auto minus_two_i_minus_k = [](std::size_t n) {
        return Integer(-2) * IntegerMatrix::identity(n) - detail::k_block(n);
    };
    if (parity == Parity::even) return minus_two_i_minus_k(genus);
    IntegerMatrix a(genus, genus);
    a.set_block(1, 1, minus_two_i_minus_k(genus - 1));
    return a;
}

/// Succeeds iff S = [[I_g, A], [0, -I_g]], i.e. the first g basis cycles are
/// fixed by the action; returns A.
inline std::optional<IntegerMatrix> check_inv_condition(const IntegerMatrix& s) {
    if (!s.is_square() || s.rows() % 2 != 0 || s.rows() == 0) return std::nullopt;
    const std::size_t g = s.rows() / 2;
    if (s.block(0, 0, g, g) != IntegerMatrix::identity(g)) return std::nullopt;
    if (!s.block(g, 0, g, g).is_zero()) return std::nullopt;
    if (s.block(g, g, g, g) != -IntegerMatrix::identity(g)) return std::nullopt;
    return s.block(0, g, g, g);
}

inline bool is_symplectic(const IntegerMatrix& c) {
    if (!c.is_square() || c.rows() % 2 != 0 || c.rows() == 0) return false;
    const IntegerMatrix j = standard_intersection(static_cast<unsigned>(c.rows() / 2));
    return c.transpose() * j * c == j;
}

struct HomologyAction {
    unsigned genus = 0;
    Parity parity = Parity::even;
    IntegerMatrix action;
    IntegerMatrix basis_change;
    IntegerMatrix transformed;
};

/// Assembles the action, basis change and transformed action for a genus and
/// verifies the involution, symplecticity and block-form invariants.
inline HomologyAction make_homology_action(unsigned genus, Parity parity) {
    HomologyAction h;
    h.genus = genus;
    h.parity = parity;
    h.action = sigma_action(genus, parity);
    h.basis_change = kleinjac::basis_change(genus, parity);
    h.transformed = conjugate_action(h.basis_change, h.action);

    const IntegerMatrix id = IntegerMatrix::identity(2 * genus);
    if (h.action * h.action != id) throw std::logic_error("homology action is not an involution");
    if (!is_symplectic(h.basis_change)) throw std::logic_error("basis change is not symplectic");
    if (!check_inv_condition(h.transformed)) throw std::logic_error("transformed action lacks [[I, A], [0, -I]] form");
    return h;
}

}  // namespace kleinjac
