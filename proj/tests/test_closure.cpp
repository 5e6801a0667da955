#include <doctest.h>

#include <staircase/closure.hpp>
#include <staircase/superconcave.hpp>

#include "oracles.hpp"

using namespace staircase;

TEST_CASE("staircase_of")
{
    CHECK(staircase_of(Partition{4, 4, 2, 2}).generators() == std::vector<LatticePoint>{{4, 0}, {2, 2}, {0, 4}});
    CHECK(staircase_of(Partition{}).generators() == std::vector<LatticePoint>{{0, 0}});
    CHECK(staircase_of(Partition{2, 1, 1}).generators() == std::vector<LatticePoint>{{2, 0}, {1, 1}, {0, 3}});
    CHECK(staircase_of(Partition{4, 4, 2, 2}).to_string() == "4,0;2,2;0,4");
}

TEST_CASE("partition_of")
{
    CHECK(partition_of(StaircaseIdeal({{4, 0}, {2, 2}, {0, 4}})) == Partition{4, 4, 2, 2});
    CHECK(partition_of(StaircaseIdeal({{0, 0}})) == Partition{});
    CHECK(partition_of(StaircaseIdeal({{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}})) == Partition{4, 3, 2, 1});
    CHECK_THROWS_AS(partition_of(StaircaseIdeal({{2, 1}, {0, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(partition_of(StaircaseIdeal({{2, 0}, {1, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(partition_of(StaircaseIdeal{}), std::invalid_argument);
}

TEST_CASE("staircase ideal validation and text form")
{
    CHECK_THROWS_AS(StaircaseIdeal({{2, 0}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StaircaseIdeal({{0, 2}, {2, 0}}), std::invalid_argument);
    CHECK(StaircaseIdeal::parse("4,0;2,2;0,4") == staircase_of(Partition{4, 4, 2, 2}));
    CHECK(StaircaseIdeal::parse("0,0") == staircase_of(Partition{}));
    CHECK_THROWS_AS(StaircaseIdeal::parse("0,4;4,0"), ParseError);
    CHECK_THROWS_AS(StaircaseIdeal::parse("4,0;2"), ParseError);
    CHECK_THROWS_AS(StaircaseIdeal::parse("4;0"), ParseError);
}

TEST_CASE("round trip and colength, weight <= 25")
{
    for (const auto &lambda : oracle::all_partitions_up_to(25)) {
        const auto ideal = staircase_of(lambda);
        REQUIRE(ideal.is_artinian());
        REQUIRE(partition_of(ideal) == lambda);
        REQUIRE(StaircaseIdeal::parse(ideal.to_string()) == ideal);
        // Colength: standard monomials are exactly the Ferrers diagram.
        Part standard = 0;
        for (Part b = 0; b <= static_cast<Part>(lambda.num_parts()); ++b) {
            for (Part a = 0; a <= lambda.largest(); ++a) {
                standard += ideal.contains({a, b}) ? 0 : 1;
            }
        }
        REQUIRE(standard == lambda.weight());
    }
}

TEST_CASE("integral closure")
{
    CHECK(integral_closure(Partition{4, 4, 2, 2}) == Partition{4, 3, 2, 1});
    CHECK(integral_closure(Partition{}) == Partition{});
    CHECK(integral_closure(Partition{2, 1, 1}) == Partition{2, 1, 1});
    CHECK(integral_closure(Partition{1, 1}) == Partition{1, 1});
    CHECK(staircase_of(integral_closure(Partition{4, 4, 2, 2})).to_string() == "4,0;3,1;2,2;1,3;0,4");
    // The collinear generator (2,2) is not a hull vertex.
    CHECK(hull_vertices(staircase_of(Partition{4, 4, 2, 2})) == std::vector<LatticePoint>{{4, 0}, {0, 4}});
}

TEST_CASE("closure oracle examples")
{
    CHECK(oracle::closure_oracle(Partition{4, 4, 2, 2}, 4) == Partition{4, 3, 2, 1});
    CHECK(oracle::closure_oracle(Partition{}, 1) == Partition{});
    CHECK(oracle::closure_oracle(Partition{5}, 5) == Partition{5});
    // 2 (1,3) = (2,6) lies in I(4,4,2,2), but (1,3) itself does not.
    CHECK(oracle::closure_oracle(Partition{4, 4, 2, 2}, 1) == Partition{4, 4, 2, 2});
}

TEST_CASE("integral closure agrees with the multiplier oracle, weight <= 18")
{
    for (const auto &lambda : oracle::all_partitions_up_to(18)) {
        const auto bound = static_cast<Part>(lambda.num_parts()) + lambda.largest() + 1;
        REQUIRE_MESSAGE(integral_closure(lambda) == oracle::closure_oracle(lambda, bound), lambda.to_string());
    }
}

TEST_CASE("closure properties, weight <= 25")
{
    std::size_t concave = 0;
    for (const auto &lambda : oracle::all_partitions_up_to(25)) {
        const auto bar = integral_closure(lambda);
        INFO(lambda.to_string());
        // Containment I(lambda) in I(bar): bar is pointwise below lambda.
        for (std::size_t j = 1; j <= lambda.num_parts(); ++j) {
            REQUIRE(bar.part(j) <= lambda.part(j));
        }
        REQUIRE(bar.weight() <= lambda.weight());
        REQUIRE(integral_closure(bar) == bar);
        // Triple test against the fixed-point condition: two independent routes.
        REQUIRE(is_concave(lambda) == (bar == lambda));
        REQUIRE(is_concave(lambda) == is_concave(conjugate(lambda)));
        REQUIRE(oracle::is_concave_interpolated(lambda, lambda.num_parts() + 1)
                == oracle::is_concave_homogeneous(lambda, lambda.num_parts() + 1));
        concave += is_concave(lambda) ? 1 : 0;
    }
    CHECK(concave > 0);
}

TEST_CASE("checking k up to num_parts + 1 is enough, weight <= 20")
{
    for (const auto &lambda : oracle::all_partitions_up_to(20)) {
        REQUIRE(is_concave(lambda) == oracle::is_concave_homogeneous(lambda, lambda.num_parts() + 8));
    }
}

TEST_CASE("concavity examples")
{
    CHECK_FALSE(is_concave(Partition{4, 4, 2, 2}));
    CHECK(is_concave(Partition{1, 1}));
    CHECK(is_concave(Partition{2, 1, 1}));
    CHECK(is_concave(Partition{}));
    Triple t;
    REQUIRE(first_concavity_violation(Partition{4, 4, 2, 2}, t));
    CHECK(t == Triple{1, 2, 3});
}
