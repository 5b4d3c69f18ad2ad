// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Exact criteria use zero tolerance; the numerical oracle uses 1e-9.

#include "kleinjac/character_lambda.hpp"
#include "kleinjac/genus1_divisor_model.hpp"
#include "kleinjac/homology_action.hpp"
#include "kleinjac/torus_fixed_locus.hpp"

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace kleinjac;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_s;  // <= 0: no limit
    std::function<Outcome()> run;
};

Rational half() { return make_rational(1, 2); }

Outcome even_homology() {
    for (unsigned g : {2U, 4U, 6U}) {
        const IntegerMatrix t = basis_change(g, Parity::even).inverse() * k_matrix(2 * g) * basis_change(g, Parity::even);
        IntegerMatrix expected(2 * g, 2 * g);
        expected.set_block(0, 0, IntegerMatrix::identity(g));
        expected.set_block(0, g, Integer(-2) * IntegerMatrix::identity(g) - k_matrix(g));
        expected.set_block(g, g, -IntegerMatrix::identity(g));
        if (t != expected) return {false, "g=" + std::to_string(g)};
    }
    return {true, "g in {2,4,6}"};
}

Outcome odd_homology() {
    for (unsigned g : {1U, 3U, 5U}) {
        const IntegerMatrix t = conjugate_action(basis_change(g, Parity::odd), sigma_action(g, Parity::odd));
        IntegerMatrix a(g, g);
        if (g > 1) a.set_block(1, 1, Integer(-2) * IntegerMatrix::identity(g - 1) - k_matrix(g - 1));
        IntegerMatrix expected(2 * g, 2 * g);
        expected.set_block(0, 0, IntegerMatrix::identity(g));
        expected.set_block(0, g, a);
        expected.set_block(g, g, -IntegerMatrix::identity(g));
        if (t != expected || check_inv_condition(t) != a) return {false, "g=" + std::to_string(g)};
    }
    return {true, "g in {1,3,5}"};
}

Outcome symplectic() {
    for (unsigned g = 1; g <= 6; ++g) {
        const IntegerMatrix c = basis_change(g, parity_of(g));
        const IntegerMatrix j = standard_intersection(g);
        if (c.transpose() * j * c != j) return {false, "g=" + std::to_string(g)};
    }
    return {true, "g in 1..6"};
}

Outcome component_counts() {
    std::string detail;
    for (unsigned g = 1; g <= 6; ++g) {
        const auto n = fixed_components(canonical_real_part(g, parity_of(g))).count();
        detail += std::to_string(g) + ":" + std::to_string(n) + " ";
        if (n != (g % 2 == 0 ? 1U : 2U)) return {false, detail};
    }
    return {true, detail};
}

Outcome second_offset() {
    for (unsigned g : {1U, 3U, 5U}) {
        const auto rp = canonical_real_part(g, Parity::odd);
        const auto off = second_component_offset(rp);
        std::vector<Rational> expected(g, Rational(0));
        expected[0] = half();
        if (!off || off->y != expected) return {false, "g=" + std::to_string(g)};
        // T2 = T1 + offset: translating a point of component 0 lands in component 1.
        std::vector<Rational> x(g, make_rational(1, 7));
        const TorusPointXY p0(x, std::vector<Rational>(g, Rational(0)));
        const TorusPointXY p1(x, off->y);
        if (component_of(rp, p0) != 0U || component_of(rp, p1) != 1U) return {false, "membership g=" + std::to_string(g)};
    }
    return {true, "g in {1,3,5}"};
}

Outcome oracle_agreement() {
    std::string detail;
    for (unsigned g : {1U, 2U, 3U}) {
        const auto rp = canonical_real_part(g, parity_of(g));
        const auto scan = brute_force_fixed_scan(rp, ImagPartMatrix::identity(g), 8, 2, 1e-9);
        const auto exact = fixed_components(rp).count();
        detail += "g" + std::to_string(g) + "=" + std::to_string(scan.count()) + "/" + std::to_string(exact) + " ";
        if (scan.count() != exact) return {false, detail};
    }
    return {true, detail};
}

Outcome divisor_dichotomy() {
    std::string detail;
    for (unsigned n : {2U, 4U, 8U}) {
        const auto c = genus1::enumerate_torsion_suite(n, 2, 12, 6);
        detail += "N" + std::to_string(n) + ":" + std::to_string(c.t1.size()) + "+" + std::to_string(c.t2.size()) + " ";
        if (!c.circles_exact || !c.t1_representatives || !c.t2_no_representative || !c.fixedness_consistent ||
            c.t1.size() != n || c.t2.size() != n)
            return {false, detail};
    }
    return {true, detail};
}

Outcome translation_bijection() {
    using namespace genus1;
    const auto c = enumerate_torsion_suite(4, 2);
    const Divisor x = translation_class_X();
    std::size_t checked = 0;
    for (const auto* bucket : {&c.t1, &c.t2, &c.not_fixed})
        for (const auto& [a, d] : *bucket) {
            const bool in_t1 = classify_fixed_class(d) == ClassLabel::T1;
            const bool shifted_t2 = classify_fixed_class(d + x) == ClassLabel::T2;
            if (in_t1 != shifted_t2) return {false, "AJ value breaks the bijection"};
            ++checked;
        }
    return {checked == 16, std::to_string(checked) + " classes"};
}

Outcome lambda_properties() {
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> part(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const std::complex<double> z(part(rng), part(rng));
        for (double c : {-2.5, -1.0, 0.3, 7.0})
            if (normalize_iso(rescale_iso(IsoScalar(c), z)).sign != normalize_iso(IsoScalar(c)).sign)
                return {false, "rescale changed sign"};
    }
    using namespace genus1;
    const auto census = enumerate_torsion_suite(4, 2);
    std::vector<Divisor> fixed;
    for (const auto& [a, d] : census.t1) fixed.push_back(d);
    for (const auto& [a, d] : census.t2) fixed.push_back(d);
    for (const auto& d : fixed)
        for (const auto& e : fixed)
            if (lambda_of_model_class(d + e) != *lambda_of_model_class(d) * *lambda_of_model_class(e))
                return {false, "not multiplicative"};
    if (lambda_of_model_class(translation_class_X()) != -1) return {false, "lambda(X) != -1"};
    return {true, "200 rescalings, " + std::to_string(fixed.size() * fixed.size()) + " pairs, lambda(X) = -1"};
}

Outcome parity_law() {
    for (unsigned g = 1; g <= 8; ++g)
        for (long long d = -4; d <= 4; ++d) {
            const bool expected = (((d - g - 1) % 2) + 2) % 2 == 0;
            if (lambda_minus_allowed(g, d) != expected) return {false, "g=" + std::to_string(g) + " d=" + std::to_string(d)};
        }
    for (unsigned g = 1; g <= 6; ++g)
        if (theorem_index(g) != fixed_components(canonical_real_part(g, parity_of(g))).count())
            return {false, "index mismatch g=" + std::to_string(g)};
    return {true, "genus 1..8 x degree -4..4"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "even-genus homology identity", 1.0, even_homology},
        {"AC2", "odd-genus homology identity", 1.0, odd_homology},
        {"AC3", "symplecticity C^t J C = J", 0.0, symplectic},
        {"AC4", "component counts 1 (even) / 2 (odd)", 1.0, component_counts},
        {"AC5", "second component offset (1/2, 0, ..., 0)", 0.0, second_offset},
        {"AC6", "numerical oracle agreement (grid 8, bound 2, tol 1e-9)", 30.0, oracle_agreement},
        {"AC7", "genus-1 divisor dichotomy, N in {2,4,8}", 60.0, divisor_dichotomy},
        {"AC8", "translation bijection over the N = 4 census", 0.0, translation_bijection},
        {"AC9", "lambda rescaling, multiplicativity, surjectivity", 0.0, lambda_properties},
        {"AC10", "parity law and index", 0.0, parity_law},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_s <= 0 || secs < c.time_limit_s;
        const bool ok = o.ok && in_time;
        failures += ok ? 0 : 1;
        std::printf("%s %-5s %-55s %8.3fs  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str(),
                    in_time ? "" : "  (time limit exceeded)");
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
