#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "bnhilb/errors.hpp"
#include "bnhilb/hstype.hpp"
#include "bnhilb/iarrobino.hpp"

using namespace bnhilb;

namespace {

// count partitions of n into distinct parts, independent of the enumerator
long long strict_partition_count(long long n) {
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (long long part = 1; part <= n; ++part)
        for (long long total = n; total >= part; --total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("type validation accepts staircases and rejects the rest") {
    const HSType t = validate_type({1, 2, 3, 2, 2});
    CHECK(t.n == 10);
    CHECK(t.d == 3);
    CHECK(t.t == std::vector<long long>{1, 2, 3, 2, 2});

    CHECK(validate_type({1, 1, 0, 0}).t == std::vector<long long>{1, 1});
    CHECK(validate_type({1}).d == 1);

    CHECK_THROWS_AS(validate_type({}), domain_error);
    CHECK_THROWS_AS(validate_type({0}), domain_error);
    CHECK_THROWS_AS(validate_type({2, 1}), domain_error);      // must start at 1
    CHECK_THROWS_AS(validate_type({1, 3}), domain_error);      // tail exceeds order
    CHECK_THROWS_AS(validate_type({1, 2, 1, 2}), domain_error);  // tail increases
    CHECK_THROWS_AS(validate_type({1, 2, 0, 1}), domain_error);  // interior zero
    CHECK_THROWS_AS(validate_type({1, -1}), domain_error);
}

TEST_CASE("worked example: all derived data of one type") {
    const HSType t = validate_type({1, 2, 3, 4, 5, 3, 3, 1});
    CHECK(t.n == 22);
    CHECK(t.d == 5);

    const NormalPattern p = partition_from_type(t);
    CHECK(p.k == std::vector<long long>{8, 6, 5, 2, 1});
    CHECK(p.n == 22);

    const JumpVector jumps = jumping_indices(t);
    CHECK(jumps.shape == std::vector<std::pair<long long, long long>>{{8, 1}, {7, 2}, {5, 2}});
    CHECK(jumps.shape_parts() == std::vector<long long>{1, 2, 2});

    const GammaProfile gamma = gamma_from_shape(jumps);
    CHECK(gamma.g == std::vector<long long>{0, 1, 1, 3, 3});

    CHECK(dim_stratum(t) == 15);
    const BetaDims dims = beta_dims(t);
    CHECK(dims.n_t == 15);
    CHECK(dims.n_e == 8);

    CHECK(type_from_partition(p.k).t == t.t);
}

TEST_CASE("small conversions by hand") {
    CHECK(partition_from_type(validate_type({1, 2, 1})).k == std::vector<long long>{3, 1});
    CHECK(partition_from_type(validate_type({1, 2, 3, 2, 2})).k == std::vector<long long>{5, 4, 1});
    CHECK(type_from_partition({3, 1}).t == std::vector<long long>{1, 2, 1});
    CHECK(partition_from_type(validate_type({1, 1, 1})).k == std::vector<long long>{3});

    const JumpVector j1 = jumping_indices(validate_type({1, 1, 1}));
    CHECK(j1.shape == std::vector<std::pair<long long, long long>>{{3, 1}});

    CHECK_THROWS_AS(validate_partition({2, 2}), domain_error);  // not strictly decreasing
    CHECK_THROWS_AS(validate_partition({}), domain_error);
    CHECK_THROWS_AS(validate_partition({3, 0}), domain_error);
}

TEST_CASE("enumeration matches the distinct-partition count") {
    const long long expected_small[] = {1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (long long n = 1; n <= 10; ++n) CHECK(strict_partition_count(n) == expected_small[n - 1]);

    for (long long n = 1; n <= 20; ++n) {
        const auto types = enumerate_types(n);
        CHECK(static_cast<long long>(types.size()) == strict_partition_count(n));
        std::set<std::vector<long long>> seen;
        std::vector<long long> prev_partition;
        for (const auto& t : types) {
            CHECK(t.n == n);
            CHECK(validate_type(t.t).t == t.t);  // every enumerated type is valid
            seen.insert(t.t);
            const auto k = partition_from_type(t).k;
            if (!prev_partition.empty()) CHECK(k < prev_partition);  // descending lex
            prev_partition = k;
        }
        CHECK(seen.size() == types.size());
    }
}

TEST_CASE("stratum dimensions at the extremes") {
    // curvilinear: a single chain, the dense stratum
    CHECK(dim_stratum(validate_type({1, 1, 1, 1, 1})) == 4);
    // full staircase: the most special point, dimension 0
    CHECK(dim_stratum(validate_type({1, 2, 3})) == 0);
    CHECK(dim_stratum(validate_type({1})) == 0);
    for (long long n = 1; n <= 14; ++n)
        for (const auto& t : enumerate_types(n)) {
            CHECK(dim_stratum(t) <= n - 1);
            CHECK((dim_stratum(t) == n - 1) == (t.d == 1));
        }
}

TEST_CASE("profiles from shapes") {
    const GammaProfile g = gamma_profile_from_shape({1, 2, 2}, 5);
    CHECK(g.g == std::vector<long long>{0, 1, 1, 3, 3});
    CHECK(g(1) == 0);
    CHECK(g(5) == 3);

    const GammaProfile single = gamma_profile_from_shape({3}, 3);
    CHECK(single.g == std::vector<long long>{0, 0, 0});

    CHECK_THROWS_AS(gamma_profile_from_shape({1, 2}, 5), domain_error);  // parts must sum to d
    CHECK_THROWS_AS(gamma_profile_from_shape({0, 5}, 5), domain_error);

    for (long long n = 1; n <= 12; ++n)
        for (const auto& t : enumerate_types(n)) {
            const GammaProfile gamma = gamma_from_shape(jumping_indices(t));
            for (long long i = 1; i <= gamma.d; ++i) {
                CHECK(gamma(i) <= i - 1);
                if (i > 1) CHECK(gamma(i) >= gamma(i - 1));
            }
        }
}

TEST_CASE("comma lists round-trip") {
    CHECK(format_list({1, 2, 3}) == "1,2,3");
    CHECK(parse_list("1,2,3") == std::vector<long long>{1, 2, 3});
    CHECK(parse_list("7") == std::vector<long long>{7});
    CHECK_THROWS_AS(parse_list(""), domain_error);
    CHECK_THROWS_AS(parse_list("1,,2"), domain_error);
    CHECK_THROWS_AS(parse_list("1,a"), domain_error);
}
