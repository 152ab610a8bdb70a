#pragma once

#include <string>
#include <vector>

#include "bnhilb/errors.hpp"
#include "bnhilb/field.hpp"
#include "bnhilb/hstype.hpp"
#include "bnhilb/matrix.hpp"
#include "bnhilb/truncpoly.hpp"

namespace bnhilb {

// Generators of an ideal in k[[x,y]], all sharing one truncation cap.  The
// cap must stay >= colength + 2 for the quotient computations below; with
// that margin, truncation provably does not change any reported invariant.
template <FieldOps F>
struct IdealBasis {
    int cap = 0;
    std::vector<TruncatedPoly<F>> gens;
};

template <FieldOps F>
void check_basis(const IdealBasis<F>& I) {
    if (I.cap < 1) throw domain_error("ideal: cap must be >= 1");
    bool nonzero = false;
    for (const auto& g : I.gens) {
        if (g.cap() != I.cap) throw domain_error("ideal: generator cap mismatch");
        if (!g.is_zero()) nonzero = true;
    }
    if (!nonzero) throw domain_error("ideal: needs at least one nonzero generator");
}

template <FieldOps F>
std::vector<typename F::Elem> coeff_row(const F& f, const TruncatedPoly<F>& p, int j) {
    std::vector<typename F::Elem> row(static_cast<std::size_t>(tri(j)), f.zero());
    for (const auto& [m, c] : p.terms())
        if (m.deg() < j) row[mono_index(m)] = c;
    return row;
}

// Rows span the image of I in A/m^j; columns are the monomials of degree < j
// in grlex order.  Multiples of degree >= j are omitted: they map to zero.
template <FieldOps F>
Matrix<F> image_matrix(const F& f, const IdealBasis<F>& I, int j) {
    check_basis(I);
    if (j < 1) throw domain_error("ideal: quotient degree must be >= 1");
    if (j > I.cap) throw cap_too_small("ideal: quotient degree " + std::to_string(j) +
                                       " exceeds cap " + std::to_string(I.cap));
    Matrix<F> m(0, static_cast<std::size_t>(tri(j)), f);
    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        const int w = g.order();
        for (int dm = 0; dm + w < j; ++dm)
            for (int db = 0; db <= dm; ++db) m.append_row(coeff_row(f, shift(f, g, dm - db, db), j));
    }
    return m;
}

// dim (I + m^j) / m^j inside A/m^j
template <FieldOps F>
long long span_in_quotient(const F& f, const IdealBasis<F>& I, int j) {
    return static_cast<long long>(rank(f, image_matrix(f, I, j)));
}

template <FieldOps F>
struct ColengthResult {
    long long colength = 0;
    std::vector<long long> chi;  // chi[i] = dim A/(I + m^{i+1}), up to stabilization
    std::vector<long long> t;    // first differences of chi (the type counts)
};

// One reduction at full cap serves every quotient at once: with grlex column
// order, the rank of the first tri(j) columns is the rank of the image in
// A/m^j, so chi falls out of the pivot positions.
template <FieldOps F>
ColengthResult<F> colength_profile(const F& f, const IdealBasis<F>& I) {
    auto rr = rref_pivots(f, image_matrix(f, I, I.cap));
    ColengthResult<F> res;
    std::size_t pi = 0;  // pivots consumed so far
    long long prev_chi = -1;
    for (int i = 0; i < I.cap; ++i) {
        const long long prefix = tri(i + 1);
        while (pi < rr.pivots.size() && static_cast<long long>(rr.pivots[pi]) <= prefix) ++pi;
        const long long chi = prefix - static_cast<long long>(pi);
        const long long ti = (i == 0) ? chi : chi - prev_chi;
        if (ti == 0) {
            res.colength = chi;
            return res;
        }
        res.chi.push_back(chi);
        res.t.push_back(ti);
        prev_chi = chi;
    }
    throw non_stabilized("ideal: colength did not stabilize below cap " + std::to_string(I.cap));
}

template <FieldOps F>
long long colength(const F& f, const IdealBasis<F>& I) {
    return colength_profile(f, I).colength;
}

template <FieldOps F>
HSType hs_type_of_ideal(const F& f, const IdealBasis<F>& I) {
    auto res = colength_profile(f, I);
    if (res.t.empty()) throw domain_error("ideal: unit ideal has no type");
    return validate_type(res.t);
}

template <FieldOps F>
IdealBasis<F> multiply_by_maximal(const F& f, const IdealBasis<F>& I) {
    IdealBasis<F> mi;
    mi.cap = I.cap;
    for (const auto& g : I.gens) {
        mi.gens.push_back(shift(f, g, 1, 0));
        mi.gens.push_back(shift(f, g, 0, 1));
    }
    return mi;
}

// Minimal number of generators: dim I/mI, as the rank gap between the images
// of I and mI at full cap.  Valid because m^cap sits inside mI once
// cap >= colength + 2.
template <FieldOps F>
long long min_generators(const F& f, const IdealBasis<F>& I) {
    const auto profile = colength_profile(f, I);
    if (profile.t.empty()) throw domain_error("ideal: unit ideal");
    if (I.cap < profile.colength + 2)
        throw cap_too_small("ideal: min_generators needs cap >= colength + 2 (colength " +
                            std::to_string(profile.colength) + ", cap " + std::to_string(I.cap) + ")");
    const long long dim_i = span_in_quotient(f, I, I.cap);
    const long long dim_mi = span_in_quotient(f, multiply_by_maximal(f, I), I.cap);
    return dim_i - dim_mi;
}

}  // namespace bnhilb
