#pragma once

// Verification suites behind the command-line tool. Each suite returns a
// Report: a list of named checks, each with a short statement of the identity
// being checked, a pass/fail status and witness data.

#include "kleinjac/character_lambda.hpp"
#include "kleinjac/genus1_divisor_model.hpp"
#include "kleinjac/homology_action.hpp"
#include "kleinjac/json_io.hpp"
#include "kleinjac/torus_fixed_locus.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kleinjac {

inline constexpr const char* kToolName = "kleinjac";
inline constexpr const char* kToolVersion = "0.1.0";

struct Check {
    std::string name;
    std::string anchor;
    bool passed = false;
    json witness = json::object();
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string name, std::string anchor, bool passed, json witness = json::object()) {
        checks.push_back({std::move(name), std::move(anchor), passed, std::move(witness)});
    }

    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.passed ? 0 : 1;
        return n;
    }

    json to_json() const {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
        return {{"tool", kToolName},     {"version", kToolVersion}, {"command", command},
                {"checks", std::move(arr)}, {"passed", all_passed()}, {"failures", failures()}};
    }
};

// ---------------------------------------------------------------------------
// homology

inline Report sigma_action_suite(unsigned genus) {
    const Parity parity = parity_of(genus);
    const std::string g = std::to_string(genus);
    Report r;

    const IntegerMatrix s = sigma_action(genus, parity);
    const IntegerMatrix c = basis_change(genus, parity);
    const IntegerMatrix id = IntegerMatrix::identity(2 * genus);

    r.add("g" + g + ".sigma_involution", "sigma_# * sigma_# = I", s * s == id, {{"sigma", to_json_value(s)}});
    r.add("g" + g + ".basis_unimodular", "det C = +-1", c.is_unimodular(),
          {{"C", to_json_value(c)}, {"det", c.determinant().convert_to<long long>()}});
    r.add("g" + g + ".symplectic", "C^t J C = J", is_symplectic(c));

    if (!c.is_unimodular()) return r;
    const IntegerMatrix t = conjugate_action(c, s);
    const auto a = check_inv_condition(t);
    r.add("g" + g + ".inv_condition", "C^-1 sigma_# C = [[I, A], [0, -I]]", a.has_value(), {{"transformed", to_json_value(t)}});
    if (a) {
        const IntegerMatrix expected = a_matrix(genus, parity);
        r.add("g" + g + ".a_matrix", parity == Parity::even ? "A = -2I - K" : "A = diag(0, -2I - K)", *a == expected,
              {{"A", to_json_value(*a)}, {"expected", to_json_value(expected)}});
        r.add("g" + g + ".transformed_involution", "[[I, A], [0, -I]]^2 = I", t * t == id);
    }
    return r;
}

// ---------------------------------------------------------------------------
// torus

struct OracleOptions {
    std::size_t grid = 8;
    int lattice_bound = 2;
    double tol = 1e-9;
};

inline Report components_suite(const RealPartMatrix& rp, std::optional<OracleOptions> oracle = std::nullopt) {
    const std::string g = std::to_string(rp.genus());
    Report r;
    const FixedLocus locus = fixed_components(rp);
    json witness = to_json_value(locus);
    witness["re"] = to_json_value(rp);

    // Every half-lattice offset is fixed exactly when it is listed.
    bool offsets_ok = true;
    const std::size_t n = rp.genus();
    if (n <= 12) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<Rational> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = (mask >> i & 1U) ? make_rational(1, 2) : Rational(0);
            const TorusPointXY p(std::vector<Rational>(n, Rational(0)), y);
            const bool listed = std::find(locus.offsets.begin(), locus.offsets.end(), p.y) != locus.offsets.end();
            if (listed != is_fixed_point(rp, p)) offsets_ok = false;
        }
    }
    r.add("g" + g + ".components", "fixed locus = union of {(x, y0)} over GF(2) kernel of 2 Re P", offsets_ok,
          std::move(witness));

    if (oracle) {
        const ScanResult scan =
            brute_force_fixed_scan(rp, ImagPartMatrix::identity(rp.genus()), oracle->grid, oracle->lattice_bound, oracle->tol);
        r.add("g" + g + ".oracle_agreement", "grid scan of conj(z) = z + n + Pm", scan.count() == locus.count(),
              {{"exact", locus.count()},
               {"oracle", scan.count()},
               {"grid", scan.grid},
               {"points_scanned", scan.points_scanned},
               {"points_accepted", scan.points_accepted}});
    }
    return r;
}

/// Component counts of the canonical real parts; even genus gives one
/// component, odd genus two, and the second is the first shifted by y = (1/2, 0, ..., 0).
inline Report canonical_components_suite(unsigned genus, std::optional<OracleOptions> oracle = std::nullopt) {
    const Parity parity = parity_of(genus);
    const RealPartMatrix rp = canonical_real_part(genus, parity);
    Report r = components_suite(rp, oracle);
    const std::string g = std::to_string(genus);
    const std::size_t expected = parity == Parity::even ? 1 : 2;
    const FixedLocus locus = fixed_components(rp);
    r.add("g" + g + ".component_count", parity == Parity::even ? "one component" : "two components",
          locus.count() == expected, {{"count", locus.count()}, {"expected", expected}});

    const auto second = second_component_offset(rp);
    if (parity == Parity::odd) {
        std::vector<Rational> half_p1(genus, Rational(0));
        half_p1[0] = make_rational(1, 2);
        const bool ok = second && second->y == half_p1 && second->x == std::vector<Rational>(genus, Rational(0));
        r.add("g" + g + ".second_component", "T2 = T1 + p_1 / 2", ok,
              {{"offset", second ? rational_row(second->y) : json(nullptr)}});
    } else {
        r.add("g" + g + ".second_component", "no second component", !second.has_value());
    }
    r.add("g" + g + ".theorem_index", "index 1 (even) / 2 (odd) equals component count",
          theorem_index(genus) == locus.count(), {{"index", theorem_index(genus)}});
    return r;
}

// ---------------------------------------------------------------------------
// divisors and lambda

inline Report divisor_suite(unsigned torsion, unsigned max_support) {
    using namespace genus1;
    Report r;
    const TorsionCensus c = enumerate_torsion_suite(torsion, max_support);
    const std::string tag = "N" + std::to_string(torsion);
    const json counts = {{"T1", c.t1.size()},
                         {"T2", c.t2.size()},
                         {"NOT_FIXED", c.not_fixed.size()},
                         {"divisors", c.divisors_examined},
                         {"max_support", c.max_support}};

    r.add(tag + ".fixedness", "[D] fixed iff D ~ sigma*(D)", c.fixedness_consistent, counts);
    r.add(tag + ".two_circles", "fixed classes lie on y = 0 and y = 1/2, N points each", c.circles_exact, counts);
    r.add(tag + ".t1_subgroup", "T1 is a subgroup", c.t1_subgroup);
    r.add(tag + ".t2_translate", "T2 = T1 + [X]", c.t2_is_translate);
    r.add(tag + ".t1_invariant_rep", "T1 classes have sigma-invariant representatives", c.t1_representatives);
    r.add(tag + ".t2_no_invariant_rep", "T2 classes have no sigma-invariant representative", c.t2_no_representative);

    // Translation bijection and lambda homomorphism over all pairs of fixed samples.
    const Divisor x = translation_class_X();
    bool bijection = true;
    bool multiplicative = true;
    std::vector<Divisor> fixed;
    for (const auto& [a, d] : c.t1) fixed.push_back(d);
    for (const auto& [a, d] : c.t2) fixed.push_back(d);
    for (const auto& d : fixed) {
        const bool in_t1 = classify_fixed_class(d) == ClassLabel::T1;
        if (in_t1 != (classify_fixed_class(d + x) == ClassLabel::T2)) bijection = false;
    }
    for (const auto& d : fixed)
        for (const auto& e : fixed)
            if (lambda_of_model_class(d + e) != *lambda_of_model_class(d) * *lambda_of_model_class(e)) multiplicative = false;
    for (const auto& [a, d] : c.not_fixed) {
        if (classify_fixed_class(d + x) == ClassLabel::T1 || classify_fixed_class(d + x) == ClassLabel::T2)
            bijection = false;
    }
    r.add(tag + ".translation_bijection", "[D] in T1 iff [D + X] in T2", bijection);
    r.add(tag + ".lambda_multiplicative", "lambda(D + E) = lambda(D) lambda(E)", multiplicative,
          {{"pairs", fixed.size() * fixed.size()}});
    r.add(tag + ".lambda_surjective", "lambda(X) = -1", lambda_of_model_class(x) == -1);
    r.add(tag + ".theorem_index", "index 2 at genus 1 equals number of fixed cosets",
          theorem_index(1) == (c.t1.empty() ? 0U : 1U) + (c.t2.empty() ? 0U : 1U));
    return r;
}

inline Report lambda_rescale_suite(std::uint64_t seed, std::size_t samples = 200) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> part(-10.0, 10.0);
    std::uniform_real_distribution<double> mag(0.1, 50.0);
    std::bernoulli_distribution neg(0.5);
    bool ok = true;
    std::size_t tested = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::complex<double> z(part(rng), part(rng));
        if (z == std::complex<double>(0.0, 0.0)) continue;
        const IsoScalar s(neg(rng) ? -mag(rng) : mag(rng));
        const IsoScalar t = rescale_iso(s, z);
        const NormalizedIso n = normalize_iso(t);
        if (n.sign != normalize_iso(s).sign) ok = false;
        if (std::abs(n.scale * n.scale * t.c - n.sign) > 1e-12) ok = false;
        ++tested;
    }
    Report r;
    r.add("lambda.rescale_invariance", "sign of |z|^2 c equals sign of c", ok && tested == samples,
          {{"seed", seed}, {"samples", tested}});
    return r;
}

inline Report parity_law_suite(unsigned max_genus = 8, long long degree_bound = 4) {
    bool ok = true;
    for (unsigned g = 1; g <= max_genus; ++g)
        for (long long d = -degree_bound; d <= degree_bound; ++d) {
            const bool expected = ((d - static_cast<long long>(g) - 1) % 2) == 0;
            if (lambda_minus_allowed(g, d) != expected) ok = false;
        }
    Report r;
    r.add("lambda.parity_law", "lambda = -1 only when deg = genus + 1 mod 2", ok,
          {{"genus", {1, max_genus}}, {"degree", {-degree_bound, degree_bound}}});
    return r;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::uint64_t seed = 0;
    unsigned genus_lo = 1;
    unsigned genus_hi = 6;
};

/// Every check at once: homology identities, component counts with the
/// numerical oracle on small genera, the torsion census, lambda properties.
inline Report verify_all(const VerifyOptions& opt) {
    Report r;
    json counts = json::object();
    for (unsigned g = opt.genus_lo; g <= opt.genus_hi; ++g) {
        r.append(sigma_action_suite(g));
        std::optional<OracleOptions> oracle;
        if (g <= 3) oracle = OracleOptions{};
        r.append(canonical_components_suite(g, oracle));
        counts[std::to_string(g)] = fixed_components(canonical_real_part(g, parity_of(g))).count();
    }
    bool by_parity = true;
    for (unsigned g = opt.genus_lo; g <= opt.genus_hi; ++g)
        if (counts[std::to_string(g)].get<std::size_t>() != (g % 2 == 0 ? 1U : 2U)) by_parity = false;
    r.add("component_counts", "even genus: 1, odd genus: 2", by_parity, {{"counts", counts}});

    // Random half-integral Re P against the grid oracle.
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> entry(-2, 2);  // keeps |n| within the scan bound
    bool random_ok = true;
    json samples = json::array();
    for (int trial = 0; trial < 4; ++trial) {
        const unsigned g = 1 + static_cast<unsigned>(trial % 2);
        IntegerMatrix d(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i; j < g; ++j) d(i, j) = d(j, i) = entry(rng);
        const RealPartMatrix rp(g, parity_of(g), d);
        const auto exact = fixed_components(rp).count();
        const auto scan = brute_force_fixed_scan(rp, ImagPartMatrix::identity(g), 8, 2, 1e-9).count();
        if (exact != scan) random_ok = false;
        samples.push_back({{"re2", to_json_value(d)}, {"exact", exact}, {"oracle", scan}});
    }
    r.add("random_re_oracle", "GF(2) kernel count matches grid scan for random half-integral Re P", random_ok,
          {{"seed", opt.seed}, {"samples", samples}});

    for (unsigned n : {2U, 4U, 8U}) r.append(divisor_suite(n, 2));
    r.append(lambda_rescale_suite(opt.seed));
    r.append(parity_law_suite());
    return r;
}

}  // namespace kleinjac
