#include "kleinjac/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kleinjac;

TEST(JsonIo, MatrixIsRowMajorArrays) {
    const IntegerMatrix c = basis_change(2, Parity::even);
    EXPECT_EQ(to_json_value(c).dump(), "[[-1,0,1,1],[0,-1,1,1],[0,-1,0,1],[-1,0,1,0]]");
    EXPECT_EQ(integer_matrix_from_json(to_json_value(c)), c);
    EXPECT_THROW(integer_matrix_from_json(json::parse("[[1,2],[3]]")), std::invalid_argument);
    EXPECT_THROW(integer_matrix_from_json(json::parse("[[1.5]]")), std::invalid_argument);
}

TEST(JsonIo, RealPartStoresDoubled) {
    const auto rp = canonical_real_part(3, Parity::odd);
    const json j = to_json_value(rp);
    EXPECT_EQ(j.dump(), R"({"genus":3,"parity":"odd","re2":[[0,0,0],[0,-2,-1],[0,-1,-2]]})");
    EXPECT_EQ(real_part_from_json(j), rp);
    EXPECT_THROW(real_part_from_json(json::parse(R"({"genus":2,"parity":"odd","re2":[[0,0],[0,0]]})")),
                 std::invalid_argument);
}

TEST(JsonIo, FixedLocusReport) {
    const json j = to_json_value(fixed_components(canonical_real_part(3, Parity::odd)));
    EXPECT_EQ(j.dump(), R"({"count":2,"offsets":[["0","0","0"],["1/2","0","0"]]})");
}

TEST(JsonIo, DivisorRoundTrip) {
    using namespace genus1;
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> c(0, 11), m(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Divisor d;
        for (int t = 0; t < 4; ++t) d.add({make_rational(c(rng), 12), make_rational(c(rng), 12)}, m(rng));
        EXPECT_EQ(divisor_from_json(to_json_value(d)), d);
    }
    const Divisor x = translation_class_X();
    EXPECT_EQ(to_json_value(x).dump(), R"({"points":[{"mult":-1,"x":"0","y":"0"},{"mult":1,"x":"0","y":"1/2"}]})");
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("2/4"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("-3"), make_rational(-3));
    EXPECT_EQ(to_string(make_rational(6, -8)), "-3/4");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_EQ(frac_part(make_rational(-1, 3)), make_rational(2, 3));
    EXPECT_EQ(floor_of(make_rational(-7, 2)), -4);
}
