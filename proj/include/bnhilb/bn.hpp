#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "bnhilb/degloci.hpp"
#include "bnhilb/field.hpp"
#include "bnhilb/hstype.hpp"
#include "bnhilb/localring.hpp"
#include "bnhilb/iarrobino.hpp"

namespace bnhilb {

// Answer to a Brill-Noether locus query.  dim is present iff the locus is
// nonempty; tight records whether the generic upper bound is attained.
struct BNReport {
    std::string level;  // "stratum" | "local" | "local-via-strata" | "global"
    std::optional<std::vector<long long>> type_t;
    long long r = 0;
    long long n = 0;
    bool nonempty = false;
    std::optional<long long> dim;
    bool tight = false;
    std::optional<std::string> witness;
    std::vector<std::string> refs;
};

// Ideals in the stratum of a type needing at least r+1 generators at the top:
// nonempty iff max(e) <= r <= d, dimension transported from the degeneracy
// locus of corank r matrices.
BNReport bn_stratum(const HSType& type, long long r);

// Closed local formulas: rho = n - r(r+1)/2 decides everything.
BNReport bn_local(long long r, long long n);

// Same locus, re-derived by aggregating every stratum's contribution.
BNReport bn_local_via_strata(long long r, long long n);

// Pairs (ideal, point) on a smooth surface: rho = 2n + 2 - r(r+1).
BNReport bn_global(long long r, long long n);

// Dimensions of the strata by multiplicity at the marked point.
std::vector<std::pair<long long, long long>> multiplicity_strata(long long r, long long n);

struct RecursionReport {
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> failures;
};

// Re-derives nonemptiness and dimension of every global locus with n <= n_max
// by induction through the incidence fibration, then compares against the
// closed form.
RecursionReport nested_recursion_verify(long long n_max);

// Whether the span of the listed coordinates satisfies a_i = a_1^i; this is
// the closed criterion for the generator count below to jump.
template <FieldOps F>
bool veronese_condition(const F& f, const std::vector<typename F::Elem>& a) {
    if (a.empty()) throw domain_error("veronese: need at least coordinates (a_1, ..., a_r)");
    auto power = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        power = f.mul(power, a[0]);
        if (!f.eq(a[i], power)) return false;
    }
    return true;
}

template <FieldOps F>
IdealBasis<F> veronese_ideal(const F& f, long long r, const std::vector<typename F::Elem>& a, int cap) {
    IdealBasis<F> I;
    I.cap = cap;
    I.gens.push_back(TruncatedPoly<F>::monomial(f, cap, static_cast<int>(r) + 1, 0, f.one()));
    for (long long i = 1; i <= r; ++i) {
        auto g = TruncatedPoly<F>::monomial(f, cap, static_cast<int>(r - i), static_cast<int>(i), f.one());
        g.set_coeff(f, static_cast<int>(r), 0, f.neg(a[static_cast<std::size_t>(i - 1)]));
        I.gens.push_back(std::move(g));
    }
    return I;
}

// True iff the ideal (x^{r+1}, x^{r-1}y - a_1 x^r, ..., y^r - a_r x^r) needs
// the full r+1 generators.
template <FieldOps F>
bool veronese_check(const F& f, long long r, const std::vector<typename F::Elem>& a, int cap = 0) {
    if (r < 2) throw domain_error("veronese: r must be >= 2");
    if (static_cast<long long>(a.size()) != r) throw domain_error("veronese: expected r coordinates");
    const long long n = r * (r + 1) / 2 + 1;
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (static_cast<long long>(f.modulus()) <= n)
            throw domain_error("veronese: prime modulus must exceed the colength " + std::to_string(n));
    }
    if (cap == 0) cap = default_cap(n);
    const auto I = veronese_ideal(f, r, a, cap);
    return min_generators(f, I) == r + 1;
}

}  // namespace bnhilb
