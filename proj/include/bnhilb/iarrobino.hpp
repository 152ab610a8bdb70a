#pragma once

#include <cstdint>
#include <vector>

#include "bnhilb/errors.hpp"
#include "bnhilb/field.hpp"
#include "bnhilb/hstype.hpp"
#include "bnhilb/localring.hpp"
#include "bnhilb/matrix.hpp"
#include "bnhilb/truncpoly.hpp"

namespace bnhilb {

// Free coefficient slot of a perturbation matrix: coefficient of x^xdeg in
// entry (i, j), 1-based.  Slots are enumerated in a fixed order so seeded
// sampling is reproducible.
struct BetaSlot {
    long long i = 0;
    long long j = 0;
    int xdeg = 0;
};

struct BetaDims {
    long long n_t = 0;  // free coefficients in the perturbation (= dim Z_T)
    long long n_e = 0;  // free entries of the constant-term matrix
};

// Cell count bookkeeping for the perturbation space attached to a type.
BetaDims beta_dims(const HSType& type);

// Column block label: columns j with equal k_{j-1} + j form one block; block
// sizes in column order are exactly the shape parts.
long long column_block_label(const NormalPattern& p, long long j);
bool same_block(const NormalPattern& p, long long i, long long j);
std::vector<long long> pattern_block_sizes(const NormalPattern& p);

// The admissible free coefficients: entries above the diagonal of the
// (d+1) x d matrix, x-degree below the column's power gap, constant term
// dropped inside a block.
std::vector<BetaSlot> beta_slots(const NormalPattern& p);

inline int default_cap(long long n) { return static_cast<int>(n) + 2; }

template <FieldOps F>
IdealBasis<F> monomial_ideal(const F& f, const NormalPattern& p, int cap) {
    IdealBasis<F> I;
    I.cap = cap;
    for (long long s = 0; s <= p.d; ++s) {
        const long long ks = (s < p.d) ? p.k[static_cast<std::size_t>(s)] : 0;
        I.gens.push_back(TruncatedPoly<F>::monomial(f, cap, static_cast<int>(ks), static_cast<int>(s), f.one()));
    }
    check_basis(I);
    return I;
}

// (d+1) x d presentation matrix of the monomial ideal: -y on the diagonal,
// x^{k_{j-1}-k_j} just below it.
template <FieldOps F>
PolyMatrix<F> matrix_mp(const F& f, const NormalPattern& p, int cap) {
    const auto d = static_cast<std::size_t>(p.d);
    PolyMatrix<F> m(d + 1, d, cap);
    for (std::size_t j = 1; j <= d; ++j) {
        m.at(j - 1, j - 1) = TruncatedPoly<F>::monomial(f, cap, 0, 1, f.neg(f.one()));
        const long long gap = p.k[j - 1] - (j < d ? p.k[j] : 0);
        m.at(j, j - 1) = TruncatedPoly<F>::monomial(f, cap, static_cast<int>(gap), 0, f.one());
    }
    return m;
}

template <FieldOps F>
struct BetaMatrix {
    NormalPattern pattern;
    PolyMatrix<F> entries;  // (d+1) x d, polynomials in x only

    BetaMatrix(NormalPattern pat, int cap)
        : pattern(std::move(pat)),
          entries(static_cast<std::size_t>(pattern.d) + 1, static_cast<std::size_t>(pattern.d), cap) {}
};

template <FieldOps F>
void validate_beta(const F& f, const BetaMatrix<F>& b) {
    const auto& p = b.pattern;
    for (long long i = 1; i <= p.d + 1; ++i) {
        for (long long j = 1; j <= p.d; ++j) {
            const auto& e = b.entries.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
            if (i > j) {
                if (!e.is_zero()) throw domain_error("beta: entry below the diagonal must vanish");
                continue;
            }
            const long long degree_bound = p.k[static_cast<std::size_t>(j - 1)] -
                                           (j < p.d ? p.k[static_cast<std::size_t>(j)] : 0) - 1;
            for (const auto& [m, c] : e.terms()) {
                if (m.b != 0) throw domain_error("beta: entries are polynomials in x only");
                if (m.a > degree_bound) throw domain_error("beta: x-degree exceeds the column gap");
            }
            if (same_block(p, i, j) && !f.is_zero(e.coeff(f, 0, 0)))
                throw domain_error("beta: constant term must vanish inside a block");
        }
    }
}

template <FieldOps F>
BetaMatrix<F> zero_beta(const F&, const NormalPattern& p, int cap) {
    return BetaMatrix<F>(p, cap);
}

// Deterministic seeded sample: slot s gets the field's sample of
// mix(seed, s).  Over F_p that is uniform in [0, p); over Q an integer in
// [-9, 9].
template <FieldOps F>
BetaMatrix<F> sample_beta(const F& f, const NormalPattern& p, std::uint64_t seed, int cap) {
    BetaMatrix<F> b(p, cap);
    const auto slots = beta_slots(p);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        auto& e = b.entries.at(static_cast<std::size_t>(slots[s].i - 1), static_cast<std::size_t>(slots[s].j - 1));
        e.set_coeff(f, slots[s].xdeg, 0, f.sample(mix(seed, static_cast<std::uint64_t>(s))));
    }
    validate_beta(f, b);
    return b;
}

template <FieldOps F>
PolyMatrix<F> resolution_matrix(const F& f, const BetaMatrix<F>& b) {
    auto m = matrix_mp<F>(f, b.pattern, b.entries.cap());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = add(f, m.at(i, j), b.entries.at(i, j));
    return m;
}

// Generators are the maximal minors of the perturbed matrix; deleting row
// s+1 with sign (-1)^s recovers exactly x^{k_s} y^s at beta = 0.
template <FieldOps F>
IdealBasis<F> ideal_from_beta(const F& f, const BetaMatrix<F>& b) {
    validate_beta(f, b);
    const auto m = resolution_matrix(f, b);
    IdealBasis<F> I;
    I.cap = b.entries.cap();
    for (std::size_t s = 0; s <= static_cast<std::size_t>(b.pattern.d); ++s) {
        auto g = det_poly(f, m.drop_row(s));
        if (s % 2 == 1) g = neg(f, g);
        I.gens.push_back(std::move(g));
    }
    check_basis(I);
    return I;
}

// Constant terms of the top d x d block (the bottom row is identically zero).
template <FieldOps F>
Matrix<F> beta_bar_zero(const F& f, const BetaMatrix<F>& b) {
    const auto d = static_cast<std::size_t>(b.pattern.d);
    Matrix<F> m(d, d, f);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = b.entries.at(i, j).coeff(f, 0, 0);
    return m;
}

// Minimal generator count read off the resolution: d + 1 minus the rank of
// the constant-term matrix.
template <FieldOps F>
long long mu_predicted(const F& f, const BetaMatrix<F>& b) {
    return b.pattern.d + 1 - static_cast<long long>(rank(f, beta_bar_zero(f, b)));
}

// Complementary-span condition for membership in the coordinate chart: the
// diagram monomials inject into A/m^cap alongside the ideal.
template <FieldOps F>
bool chart_disjoint(const F& f, const IdealBasis<F>& I, const NormalPattern& p) {
    auto m = image_matrix(f, I, I.cap);
    const auto base_rank = rank(f, m);
    for (long long s = 0; s < p.d; ++s)
        for (long long i = 0; i < p.k[static_cast<std::size_t>(s)]; ++i) {
            auto mono = TruncatedPoly<F>::monomial(f, I.cap, static_cast<int>(i), static_cast<int>(s), f.one());
            m.append_row(coeff_row(f, mono, I.cap));
        }
    return rank(f, m) == base_rank + static_cast<std::size_t>(p.n);
}

}  // namespace bnhilb
