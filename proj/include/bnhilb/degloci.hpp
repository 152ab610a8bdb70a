#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnhilb/hstype.hpp"

namespace bnhilb {

// Expected dimension of the echelon cell with pivot columns a inside the
// rank-R degeneracy locus of matrices with zero-pattern profile gamma.
long long rho_gamma(const GammaProfile& gamma, const std::vector<long long>& a);

struct DegLocusDim {
    bool nonempty = false;
    long long dim = 0;  // meaningful only when nonempty
    std::vector<std::vector<long long>> maximizers;
};

// Exhaustive maximization of rho over admissible pivot sequences
// (strictly increasing, gamma(a_i) >= i).  Returns every maximizer.
DegLocusDim dim_deg_gamma(const GammaProfile& gamma, long long rank);

struct MatShapeDim {
    bool nonempty = false;
    long long dim = 0;
    bool tight = false;  // dim attains R(2d-R-1)/2
};

// Rank-R degeneracy locus inside the matrices of a given shape (ordered
// composition e of d).  Certifies the closed nonemptiness criterion, the
// dimension bound with its tightness rule, and the two-block special case.
MatShapeDim dim_mat_e(const std::vector<long long>& shape, long long rank);

struct CensusKey {
    long long rank = 0;
    std::vector<long long> pivots;
    friend bool operator<(const CensusKey& u, const CensusKey& v) {
        if (u.rank != v.rank) return u.rank < v.rank;
        return u.pivots < v.pivots;
    }
    friend bool operator==(const CensusKey& u, const CensusKey& v) {
        return u.rank == v.rank && u.pivots == v.pivots;
    }
};

struct RankCensus {
    long long q = 0;
    std::vector<long long> shape;
    long long d = 0;
    long long free_cells = 0;
    std::map<CensusKey, std::uint64_t> counts;
    std::uint64_t total() const;
};

// Exhaustive enumeration of all q^{n_e} matrices of the given shape over
// F_q, tallied by (rank, pivot columns).  Work is sharded over ranges of the
// odometer index; refuses to start past the budget.
RankCensus census(const std::vector<long long>& shape, long long q, std::uint64_t budget,
                  unsigned threads = 0);

struct RealizationReport {
    bool pass = false;
    long long max_rank_realized = -1;
    long long max_rank_predicted = -1;
    std::vector<std::string> failures;
};

// Census counts must be nonzero exactly on the predicted pivot sequences,
// and the top realized rank must be d minus the largest shape part.
RealizationReport verify_realization(const std::vector<long long>& shape, long long q,
                                     std::uint64_t budget);

std::string census_csv(const RankCensus& c);

struct FitRow {
    long long rank = 0;
    std::vector<std::uint64_t> counts;      // per q in {2, 3, 5, 7}
    std::vector<std::string> coefficients;  // interpolating polynomial in q, degree <= 3
};

// Exploratory count-vs-q interpolation; reported, never asserted.
std::vector<FitRow> census_fit(const std::vector<long long>& shape, std::uint64_t budget);

std::vector<std::vector<long long>> compositions_of(long long d);

}  // namespace bnhilb
