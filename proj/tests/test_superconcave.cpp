#include <doctest.h>

#include <map>

#include <staircase/closure.hpp>
#include <staircase/superconcave.hpp>

#include "oracles.hpp"

using namespace staircase;

TEST_CASE("super-concave predicate")
{
    CHECK(is_superconcave(Partition{2}));
    CHECK_FALSE(is_superconcave(Partition{1, 1}));
    CHECK(is_superconcave(Partition{4, 2}));
    CHECK(is_superconcave(Partition{}));
    CHECK_FALSE(is_superconcave(Partition{4, 4, 2, 2}));
    // (2) super-concave, its conjugate (1,1) only concave.
    CHECK(is_concave(conjugate(Partition{2})));
    CHECK_FALSE(is_superconcave(conjugate(Partition{2})));
}

TEST_CASE("triple forms")
{
    for (std::size_t l = 1; l <= 10; ++l) {
        CHECK(LinearForm::second_difference(l) == triple_form(l, l + 1, l + 2));
        CHECK_FALSE(LinearForm::second_difference(l) == triple_form(l, l + 1, l + 2, TripleSign::reversed));
    }
    CHECK(triple_form(1, 2, 4) == LinearForm({-2, 3, 0, -1}));
    CHECK_THROWS_AS(triple_form(2, 2, 3), std::invalid_argument);
}

TEST_CASE("equivalent characterizations, weight <= 25")
{
    bool reversed_sign_disagrees = false;
    for (const auto &lambda : oracle::all_partitions_up_to(25)) {
        INFO(lambda.to_string());
        const bool sc = is_superconcave(lambda);
        REQUIRE(sc == satisfies_triple_inequalities(lambda));
        REQUIRE(sc == oracle::conjugate_multiplicities_decreasing(lambda));
        if (sc) {
            REQUIRE(is_concave(lambda));
        }
        reversed_sign_disagrees |= sc != satisfies_triple_inequalities(lambda, TripleSign::reversed);
    }
    // The (j-i) reading does not describe the same set.
    CHECK(reversed_sign_disagrees);
    // The staircase (3,2,1) has second differences (0,0,1) but violates t_{1,2,3} with (j-i).
    CHECK(is_superconcave(Partition{3, 2, 1}));
    CHECK_FALSE(satisfies_triple_inequalities(Partition{3, 2, 1}, TripleSign::reversed));
}

TEST_CASE("positive combination identity")
{
    const auto r23 = check_poslincomb(2, 3);
    CHECK(r23.holds());
    CHECK(triple_form(1, 2, 3) == LinearForm::second_difference(1));

    for (auto [j, k] : {std::pair<std::size_t, std::size_t>{2, 4}, {3, 5}}) {
        const auto report = check_poslincomb(j, k);
        CHECK(report.holds());
        CHECK(report.corrected);
        CHECK_FALSE(report.scaled);
    }
    // (2,4): 2 f_1 + f_2 = (-2, 3, 0, -1) = t_{1,2,4}
    CHECK(poslincomb_expansion(2, 4, PoslincombReading::corrected) == LinearForm({-2, 3, 0, -1}));
    // (3,5): 2 f_1 + 4 f_2 + 2 f_3 = (-2, 0, 4, 0, -2)
    CHECK(poslincomb_expansion(3, 5, PoslincombReading::corrected)
          == Part{2} * LinearForm::second_difference(1) + Part{4} * LinearForm::second_difference(2)
                 + Part{2} * LinearForm::second_difference(3));
    CHECK(triple_form(1, 3, 5) == LinearForm({-2, 0, 4, 0, -2}));
    CHECK_THROWS_AS(check_poslincomb(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_poslincomb(3, 3), std::invalid_argument);

    for (std::size_t k = 3; k <= 12; ++k) {
        for (std::size_t j = 2; j < k; ++j) {
            const auto report = check_poslincomb(j, k);
            REQUIRE(report.corrected);
            // The two readings differ unless the second sum is the single term l = 1.
            REQUIRE(report.scaled == (j == 2 && k == 3));
        }
    }
}

TEST_CASE("decompose and recompose")
{
    CHECK(decompose(Partition{3, 1}) == TriangularDecomposition({1, 1}));
    CHECK(decompose(Partition{}) == TriangularDecomposition{});
    CHECK(decompose(Partition{4, 2}) == TriangularDecomposition({0, 2}));
    CHECK_THROWS_AS(decompose(Partition{1, 1}), std::invalid_argument);

    CHECK(recompose(TriangularDecomposition({0, 1})) == Partition{2, 1});
    CHECK(recompose(TriangularDecomposition({1, 1})) == Partition{3, 1});
    CHECK(recompose(TriangularDecomposition({5})) == Partition{5});
    CHECK(TriangularDecomposition({1, 1}).triangular_parts() == Partition{3, 1});
    CHECK(TriangularDecomposition({0, 2}).weight() == 6);

    CHECK(TriangularDecomposition({1, 0, 2, 0, 0}).to_string() == "1,0,2");
    CHECK(TriangularDecomposition::parse("1,0,2") == TriangularDecomposition({1, 0, 2}));
    CHECK(TriangularDecomposition::parse("") == TriangularDecomposition{});
    CHECK_THROWS_AS(TriangularDecomposition::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(TriangularDecomposition({-1}), std::invalid_argument);
}

TEST_CASE("bijection with partitions into triangular numbers, n <= 30")
{
    for (Part n = 0; n <= 30; ++n) {
        std::map<Partition, int> images;
        std::size_t count = 0;
        for (const auto &lambda : oracle::all_partitions(n)) {
            if (!is_superconcave(lambda)) {
                continue;
            }
            ++count;
            const auto c = decompose(lambda);
            REQUIRE(c.weight() == n);
            REQUIRE(recompose(c) == lambda);
            REQUIRE(is_superconcave(recompose(c)));
            ++images[c.triangular_parts()];
        }
        // Injective, and onto since the counts match.
        for (const auto &[image, hits] : images) {
            REQUIRE(hits == 1);
        }
        REQUIRE(count == oracle::count_triangular_partitions(n));
        REQUIRE(count_superconcave(static_cast<std::size_t>(n)) == count);
    }
}

TEST_CASE("counting")
{
    CHECK(count_superconcave(5) == 2);
    CHECK(count_superconcave(0) == 1);
    CHECK(count_superconcave(9, 2) == 4);
    CHECK(count_superconcave(7, 0) == 0);
    CHECK(count_superconcave(0, 0) == 1);

    for (std::optional<std::size_t> r : {std::optional<std::size_t>{}, {1}, {2}, {3}, {4}}) {
        const auto counts = superconcave_counts(30, r);
        for (Part n = 0; n <= 30; ++n) {
            std::size_t brute = 0;
            for (const auto &lambda : oracle::all_partitions(n, r)) {
                brute += is_superconcave(lambda) ? 1 : 0;
            }
            REQUIRE(counts[static_cast<std::size_t>(n)] == brute);
            REQUIRE(brute == oracle::count_triangular_partitions(n, r));
        }
    }
}

TEST_CASE("recompose always lands on super-concave partitions")
{
    // Exhaustive over multiplicity vectors with entries <= 3 and length <= 4.
    for (int code = 0; code < 256; ++code) {
        std::vector<Part> c;
        for (int i = 0, x = code; i < 4; ++i, x /= 4) {
            c.push_back(x % 4);
        }
        const TriangularDecomposition d(c);
        const auto lambda = recompose(d);
        REQUIRE(is_superconcave(lambda));
        REQUIRE(lambda.weight() == d.weight());
        REQUIRE(decompose(lambda) == d);
    }
}
