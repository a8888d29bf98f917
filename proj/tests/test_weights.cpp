#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3scan/weights.hpp"
#include "test_support.hpp"

using namespace k3scan;

TEST_CASE("rho is the leave-one-out gcd")
{
    CHECK(rho(WeightVector({42, 27, 4, 3})) == std::vector<Int>{1, 1, 3, 1});
    CHECK(rho(WeightVector({1, 1, 1, 1})) == std::vector<Int>{1, 1, 1, 1});
    CHECK(rho(WeightVector({3, 3, 2})) == std::vector<Int>{1, 1, 3});
}

TEST_CASE("normalize on the worked example")
{
    const auto n = normalize(WeightVector({42, 27, 4, 3}));
    CHECK(n.rho == std::vector<Int>{1, 1, 3, 1});
    CHECK(n.delta == std::vector<Int>{3, 3, 1, 3});
    CHECK(n.k == 3);
    CHECK(n.normalized == WeightVector({14, 9, 4, 1}));
    CHECK(n.reduced_degree == 28);
}

TEST_CASE("normalize fixes already-normalized vectors")
{
    const auto n = normalize(WeightVector({1, 1, 1, 1, 1}));
    CHECK(n.rho == std::vector<Int>(5, 1));
    CHECK(n.delta == std::vector<Int>(5, 1));
    CHECK(n.k == 1);
    CHECK(n.normalized == WeightVector({1, 1, 1, 1, 1}));
}

TEST_CASE("normalize (903,602,258,1)")
{
    const auto n = normalize(WeightVector({903, 602, 258, 1}));
    CHECK(n.rho == std::vector<Int>{1, 1, 1, 43});
    CHECK(n.delta == std::vector<Int>{43, 43, 43, 1});
    CHECK(n.k == 43);
    CHECK(n.normalized == WeightVector({21, 14, 6, 1}));
    CHECK(n.reduced_degree == 42);
}

TEST_CASE("well-formedness is fixed-by-normalization")
{
    CHECK(is_well_formed(WeightVector({14, 9, 4, 1})));
    CHECK_FALSE(is_well_formed(WeightVector({42, 27, 4, 3})));
    CHECK_FALSE(is_well_formed(WeightVector({2, 2})));
}

TEST_CASE("canonical form sorts non-increasing")
{
    CHECK(canonical_form(WeightVector({1, 1, 2})) == WeightVector({2, 1, 1}));
    CHECK(canonical_form(WeightVector({14, 9, 4, 1})) == WeightVector({14, 9, 4, 1}));
    CHECK(canonical_form(normalize(WeightVector({3, 3, 2})).normalized) ==
          WeightVector({2, 1, 1}));
}

TEST_CASE("construction rejects bad input")
{
    CHECK_THROWS_AS(WeightVector({}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({5}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({3, -1}), std::invalid_argument);
}

TEST_CASE("normalization invariants on random vectors")
{
    std::mt19937 rng(20240311);
    for (int trial = 0; trial < 2000; ++trial) {
        const WeightVector w(testing::random_weight_components(rng));
        const auto n = normalize(w);

        for (std::size_t j = 0; j < w.size(); ++j) {
            CHECK(n.rho[j] * n.delta[j] == n.k);
            CHECK(n.normalized[j] * n.delta[j] == w[j]);
        }
        Int recovered = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            recovered += n.delta[j] * n.normalized[j];
        CHECK(recovered == w.degree());

        // idempotence
        const auto again = normalize(n.normalized);
        CHECK(again.normalized == n.normalized);
        CHECK(is_well_formed(n.normalized));

        // canonical form ignores order
        auto shuffled = w.components();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(canonical_form(WeightVector(shuffled)) == canonical_form(w));
    }
}
