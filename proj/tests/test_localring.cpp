#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bnhilb/iarrobino.hpp"
#include "bnhilb/localring.hpp"

using namespace bnhilb;

namespace {

template <FieldOps F>
TruncatedPoly<F> mono(const F& f, int cap, int a, int b) {
    return TruncatedPoly<F>::monomial(f, cap, a, b, f.one());
}

// ideal equality at the shared cap: both sets of generators span the same image
template <FieldOps F>
bool same_ideal(const F& f, const IdealBasis<F>& I, const IdealBasis<F>& J) {
    IdealBasis<F> both;
    both.cap = I.cap;
    both.gens = I.gens;
    both.gens.insert(both.gens.end(), J.gens.begin(), J.gens.end());
    const long long all = span_in_quotient(f, both, both.cap);
    return span_in_quotient(f, I, I.cap) == all && span_in_quotient(f, J, J.cap) == all;
}

// greedy generator-dropping oracle for the minimal generator count: in a
// local ring every minimal generating set has the same size, so removing
// redundant generators one at a time terminates at that size
template <FieldOps F>
long long mu_greedy_oracle(const F& f, IdealBasis<F> I) {
    bool removed = true;
    while (removed && I.gens.size() > 1) {
        removed = false;
        for (std::size_t i = 0; i < I.gens.size(); ++i) {
            IdealBasis<F> rest;
            rest.cap = I.cap;
            for (std::size_t j = 0; j < I.gens.size(); ++j)
                if (j != i && !I.gens[j].is_zero()) rest.gens.push_back(I.gens[j]);
            if (rest.gens.empty()) continue;
            if (same_ideal(f, rest, I)) {
                I = rest;
                removed = true;
                break;
            }
        }
    }
    return static_cast<long long>(I.gens.size());
}

}  // namespace

TEST_CASE("basis validation") {
    const PrimeField f(23);
    IdealBasis<PrimeField> I;
    I.cap = 5;
    I.gens.push_back(mono(f, 5, 1, 0));
    CHECK_NOTHROW(check_basis(I));

    I.gens.push_back(mono(f, 4, 0, 1));  // cap mismatch
    CHECK_THROWS_AS(check_basis(I), domain_error);

    IdealBasis<PrimeField> zero;
    zero.cap = 5;
    zero.gens.push_back(TruncatedPoly<PrimeField>(5));
    CHECK_THROWS_AS(check_basis(zero), domain_error);
}

TEST_CASE("image spans by hand: (x^3, y^2 - x^2)") {
    const PrimeField f(7);
    IdealBasis<PrimeField> I;
    I.cap = 8;
    I.gens.push_back(mono(f, 8, 3, 0));
    auto g = mono(f, 8, 0, 2);
    g.set_coeff(f, 2, 0, f.neg(f.one()));
    I.gens.push_back(g);

    // degree < 6 monomial multiples leave exactly {1, x, x^2, y, xy, x^2 y} uncovered
    CHECK(span_in_quotient(f, I, 6) == 15);

    const auto profile = colength_profile(f, I);
    CHECK(profile.colength == 6);
    CHECK(profile.t == std::vector<long long>{1, 2, 2, 1});
    CHECK(profile.chi == std::vector<long long>{1, 3, 5, 6});
    CHECK(hs_type_of_ideal(f, I).d == 2);
}

TEST_CASE("colength and type of simple monomial ideals") {
    const RationalField f;
    IdealBasis<RationalField> I;
    I.cap = 8;
    I.gens = {mono(f, 8, 3, 0), mono(f, 8, 1, 1), mono(f, 8, 0, 2)};
    CHECK(colength(f, I) == 4);
    CHECK(hs_type_of_ideal(f, I).t == std::vector<long long>{1, 2, 1});
    CHECK(min_generators(f, I) == 3);

    IdealBasis<RationalField> J;
    J.cap = 8;
    J.gens = {mono(f, 8, 2, 0), mono(f, 8, 0, 2)};
    CHECK(colength(f, J) == 4);
    CHECK(hs_type_of_ideal(f, J).t == std::vector<long long>{1, 2, 1});
    CHECK(min_generators(f, J) == 2);
}

TEST_CASE("monomial staircase ideals have colength n") {
    const PrimeField f(23);
    for (const auto& k : {std::vector<long long>{3, 1}, {4, 2, 1}, {8, 6, 5, 2, 1}}) {
        const NormalPattern p = validate_partition(k);
        const auto I = monomial_ideal(f, p, default_cap(p.n));
        CHECK(colength(f, I) == p.n);
        CHECK(hs_type_of_ideal(f, I).t == type_from_partition(k).t);
    }
}

TEST_CASE("infinite colength is detected") {
    const PrimeField f(23);
    IdealBasis<PrimeField> I;
    I.cap = 6;
    I.gens.push_back(mono(f, 6, 1, 0));  // (x) cuts out a curve
    CHECK_THROWS_AS(colength_profile(f, I), non_stabilized);
}

TEST_CASE("the unit ideal has no type") {
    const PrimeField f(23);
    IdealBasis<PrimeField> I;
    I.cap = 6;
    I.gens.push_back(mono(f, 6, 0, 0));
    CHECK(colength(f, I) == 0);
    CHECK_THROWS_AS(hs_type_of_ideal(f, I), domain_error);
    CHECK_THROWS_AS(min_generators(f, I), domain_error);
}

TEST_CASE("generator count needs cap margin") {
    const PrimeField f(7);
    IdealBasis<PrimeField> I;
    I.cap = 7;  // colength 6 needs cap >= 8
    I.gens.push_back(mono(f, 7, 3, 0));
    auto g = mono(f, 7, 0, 2);
    g.set_coeff(f, 2, 0, f.neg(f.one()));
    I.gens.push_back(g);
    CHECK_THROWS_AS(min_generators(f, I), cap_too_small);
}

TEST_CASE("quotient degree beyond the cap is refused") {
    const PrimeField f(23);
    IdealBasis<PrimeField> I;
    I.cap = 5;
    I.gens.push_back(mono(f, 5, 1, 0));
    CHECK_THROWS_AS(span_in_quotient(f, I, 6), cap_too_small);
    CHECK_THROWS_AS(image_matrix(f, I, 0), domain_error);
}

TEST_CASE("generator counts agree with the greedy oracle") {
    const PrimeField f(23);

    // padded generating sets of assorted ideals, some generators redundant
    std::vector<IdealBasis<PrimeField>> ideals;
    {
        IdealBasis<PrimeField> I;  // m^2 with a redundant cubic
        I.cap = 8;
        I.gens = {mono(f, 8, 2, 0), mono(f, 8, 1, 1), mono(f, 8, 0, 2), mono(f, 8, 3, 0)};
        ideals.push_back(I);
    }
    {
        IdealBasis<PrimeField> I;  // (x^3, y^2 - x^2) plus a member of the ideal
        I.cap = 9;
        auto g = mono(f, 9, 0, 2);
        g.set_coeff(f, 2, 0, f.neg(f.one()));
        auto extra = shift(f, g, 1, 0);  // x * g
        I.gens = {mono(f, 9, 3, 0), g, extra};
        ideals.push_back(I);
    }
    {
        IdealBasis<PrimeField> I;  // curvilinear: (y - x^2, x^4)
        I.cap = 7;
        auto g = mono(f, 7, 0, 1);
        g.set_coeff(f, 2, 0, f.neg(f.one()));
        I.gens = {g, mono(f, 7, 4, 0)};
        ideals.push_back(I);
    }
    for (const auto& I : ideals) CHECK(min_generators(f, I) == mu_greedy_oracle(f, I));

    // sampled chart ideals for a few patterns
    for (const auto& k : {std::vector<long long>{3, 1}, {3, 2}, {4, 2, 1}}) {
        const NormalPattern p = validate_partition(k);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto I = ideal_from_beta(f, sample_beta(f, p, mix(99, seed), default_cap(p.n)));
            CHECK(min_generators(f, I) == mu_greedy_oracle(f, I));
        }
    }
}

TEST_CASE("multiplying by the maximal ideal shifts generators") {
    const PrimeField f(23);
    IdealBasis<PrimeField> I;
    I.cap = 6;
    I.gens = {mono(f, 6, 2, 0)};
    const auto mi = multiply_by_maximal(f, I);
    CHECK(mi.gens.size() == 2);
    CHECK(mi.gens[0].eq(f, mono(f, 6, 3, 0)));
    CHECK(mi.gens[1].eq(f, mono(f, 6, 2, 1)));
}
