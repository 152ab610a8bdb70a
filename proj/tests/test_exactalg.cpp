#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "bnhilb/field.hpp"
#include "bnhilb/matrix.hpp"
#include "bnhilb/truncpoly.hpp"

using namespace bnhilb;

namespace {

// rank oracle over F_2: rows as bitmasks, span size is 2^rank
std::size_t rank_f2_oracle(const std::vector<std::uint32_t>& rows) {
    std::set<std::uint32_t> span = {0};
    for (auto r : rows) {
        std::set<std::uint32_t> next = span;
        for (auto v : span) next.insert(v ^ r);
        span = std::move(next);
    }
    std::size_t rk = 0;
    while ((std::size_t{1} << rk) < span.size()) ++rk;
    return rk;
}

// determinant oracle: signed sum over all permutations
TruncatedPoly<PrimeField> det_perm_oracle(const PrimeField& f, const PolyMatrix<PrimeField>& m) {
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    TruncatedPoly<PrimeField> acc(m.cap());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        auto term = TruncatedPoly<PrimeField>::monomial(f, m.cap(), 0, 0, f.one());
        for (std::size_t i = 0; i < perm.size(); ++i) term = mul(f, term, m.at(i, perm[i]));
        if (inversions % 2 == 1) term = neg(f, term);
        acc = add(f, acc, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

TruncatedPoly<PrimeField> random_poly(const PrimeField& f, int cap, std::uint64_t seed) {
    TruncatedPoly<PrimeField> p(cap);
    std::uint64_t c = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; a + b < 3; ++b) p.set_coeff(f, a, b, f.sample(mix(seed, c++)));
    return p;
}

}  // namespace

TEST_CASE("seeded mixing is deterministic and spreads") {
    CHECK(mix(7, 0) == mix(7, 0));
    CHECK(mix(7, 0) != mix(7, 1));
    CHECK(mix(7, 0) != mix(8, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t c = 0; c < 1000; ++c) seen.insert(mix(42, c));
    CHECK(seen.size() == 1000);
}

TEST_CASE("primality screen") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(23));
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));  // 7 * 13
    CHECK_FALSE(is_prime_u64(1ULL << 20));
}

TEST_CASE("prime field arithmetic") {
    const PrimeField f(23);
    CHECK(f.modulus() == 23);
    for (std::uint64_t a = 1; a < 23; ++a) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.add(a, f.neg(a)) == f.zero());
    }
    CHECK(f.from_int(-1) == 22);
    CHECK(f.from_int(-24) == 22);
    CHECK(f.from_int(46) == 0);
    CHECK(f.sub(3, 5) == 21);
    CHECK_THROWS_AS(PrimeField(91), domain_error);
    CHECK_THROWS_AS(PrimeField(1ULL << 31), domain_error);
}

TEST_CASE("rational field is exact") {
    const RationalField f;
    const auto third = f.inv(f.from_int(3));
    const auto sixth = f.inv(f.from_int(6));
    CHECK(f.eq(f.add(third, sixth), f.inv(f.from_int(2))));
    // 1/3 computed 3 times over never drifts
    auto acc = f.zero();
    for (int i = 0; i < 3; ++i) acc = f.add(acc, third);
    CHECK(f.eq(acc, f.one()));
    for (std::uint64_t r = 0; r < 40; ++r) {
        const auto s = f.sample(r);
        CHECK(s >= -9);
        CHECK(s <= 9);
    }
}

TEST_CASE("rref rank agrees with the span oracle over F_2") {
    const PrimeField f(2);
    for (std::uint32_t code = 0; code < 512; ++code) {
        Matrix<PrimeField> m(3, 3, f);
        std::vector<std::uint32_t> rows(3, 0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const std::uint32_t bit = (code >> (3 * i + j)) & 1;
                m.at(i, j) = bit;
                rows[i] |= bit << j;
            }
        CHECK(rank(f, m) == rank_f2_oracle(rows));
    }
}

TEST_CASE("rref pivots are prefix ranks") {
    const PrimeField f(23);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Matrix<PrimeField> m(4, 6, f);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = f.sample(mix(trial, c++)) % 3;
        const auto rr = rref_pivots(f, m);
        for (std::size_t prefix = 1; prefix <= 6; ++prefix) {
            Matrix<PrimeField> sub(4, prefix, f);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < prefix; ++j) sub.at(i, j) = m.at(i, j);
            const std::size_t expect =
                static_cast<std::size_t>(std::count_if(rr.pivots.begin(), rr.pivots.end(),
                                                       [&](std::size_t p) { return p <= prefix; }));
            CHECK(rank(f, sub) == expect);
        }
        // reduction is idempotent
        const auto again = rref_pivots(f, rr.reduced);
        CHECK(again.pivots == rr.pivots);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(f.eq(again.reduced.at(i, j), rr.reduced.at(i, j)));
    }
}

TEST_CASE("rref over the rationals handles fraction growth") {
    const RationalField f;
    Matrix<RationalField> hilbert(3, 3, f);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            hilbert.at(i, j) = f.inv(f.from_int(static_cast<std::int64_t>(i + j + 1)));
    CHECK(rank(f, hilbert) == 3);

    Matrix<RationalField> dependent(2, 2, f);
    dependent.at(0, 0) = f.from_int(1);
    dependent.at(0, 1) = f.from_int(2);
    dependent.at(1, 0) = f.from_int(2);
    dependent.at(1, 1) = f.from_int(4);
    CHECK(rank(f, dependent) == 1);
}

TEST_CASE("grlex monomial order and indexing") {
    CHECK(mono_index({0, 0}) == 0);
    CHECK(mono_index({1, 0}) == 1);
    CHECK(mono_index({0, 1}) == 2);
    CHECK(mono_index({2, 0}) == 3);
    CHECK(mono_index({1, 1}) == 4);
    CHECK(mono_index({0, 2}) == 5);
    const GrlexLess less;
    CHECK(less({1, 0}, {0, 1}));   // x before y
    CHECK(less({0, 1}, {2, 0}));   // degree first
    CHECK_FALSE(less({1, 1}, {1, 1}));
}

TEST_CASE("truncated polynomials drop high degrees") {
    const PrimeField f(23);
    auto x = TruncatedPoly<PrimeField>::monomial(f, 2, 1, 0, f.one());
    auto y = TruncatedPoly<PrimeField>::monomial(f, 2, 0, 1, f.one());
    const auto square = mul(f, add(f, x, y), add(f, x, y));
    CHECK(square.is_zero());  // every term of (x+y)^2 has degree >= cap

    auto p = TruncatedPoly<PrimeField>::monomial(f, 5, 0, 0, f.one());
    p.set_coeff(f, 4, 1, f.one());  // degree 5 >= cap: ignored
    CHECK(f.eq(p.coeff(f, 4, 1), f.zero()));
    CHECK(TruncatedPoly<PrimeField>(4).order() == 4);
    CHECK_THROWS_AS(TruncatedPoly<PrimeField>(0), domain_error);
}

TEST_CASE("polynomial ring identities on random elements") {
    const PrimeField f(23);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto p = random_poly(f, 6, mix(1, s));
        const auto q = random_poly(f, 6, mix(2, s));
        const auto r = random_poly(f, 6, mix(3, s));
        CHECK(mul(f, p, q).eq(f, mul(f, q, p)));
        CHECK(mul(f, p, add(f, q, r)).eq(f, add(f, mul(f, p, q), mul(f, p, r))));
        CHECK(mul(f, mul(f, p, q), r).eq(f, mul(f, p, mul(f, q, r))));
        CHECK(sub(f, p, p).is_zero());
        // shifting is multiplication by the monomial
        const auto xy = TruncatedPoly<PrimeField>::monomial(f, 6, 1, 1, f.one());
        CHECK(shift(f, p, 1, 1).eq(f, mul(f, p, xy)));
    }
}

TEST_CASE("polynomial determinant agrees with the permutation oracle") {
    const PrimeField f(23);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        PolyMatrix<PrimeField> m(3, 3, 7);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = random_poly(f, 7, mix(trial, 3 * i + j));
        CHECK(det_poly(f, m).eq(f, det_perm_oracle(f, m)));
    }
    PolyMatrix<PrimeField> zero_col(2, 2, 7);
    zero_col.at(0, 0) = TruncatedPoly<PrimeField>::monomial(f, 7, 1, 0, f.one());
    zero_col.at(1, 0) = TruncatedPoly<PrimeField>::monomial(f, 7, 0, 1, f.one());
    CHECK(det_poly(f, zero_col).is_zero());

    PolyMatrix<PrimeField> rect(2, 3, 7);
    CHECK_THROWS_AS(det_poly(f, rect), domain_error);
}

TEST_CASE("dropping a row keeps the others in order") {
    const PrimeField f(23);
    PolyMatrix<PrimeField> m(3, 2, 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m.at(i, j) = TruncatedPoly<PrimeField>::monomial(f, 5, static_cast<int>(i), static_cast<int>(j),
                                                             f.one());
    const auto s = m.drop_row(1);
    CHECK(s.rows() == 2);
    CHECK(s.at(0, 0).eq(f, m.at(0, 0)));
    CHECK(s.at(1, 1).eq(f, m.at(2, 1)));
}
