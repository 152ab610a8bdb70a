#pragma once

#include <string>
#include <vector>

namespace bnhilb {

// Hilbert-Samuel type of a finite-colength ideal: t[j] = dim (I+m^j)/(I+m^{j+1}).
// Valid types look like (1, 2, ..., d, t_d, t_{d+1}, ...) with
// d >= t_d >= t_{d+1} >= ... >= 1 and sum n.  Trailing zeros are dropped.
struct HSType {
    std::vector<long long> t;
    long long n = 0;  // colength: sum of t
    long long d = 0;  // order: length of the staircase prefix
};

// Differences e_j = t_{j-1} - t_j for j >= d (zero below d).  The nonzero
// values, listed by decreasing index, form the shape; they sum to d.
struct JumpVector {
    long long d = 0;
    std::vector<long long> e;                            // e[j] for j = 0..t.size()
    std::vector<std::pair<long long, long long>> shape;  // (j, e_j), j strictly decreasing
    std::vector<long long> shape_parts() const {
        std::vector<long long> p;
        p.reserve(shape.size());
        for (auto& [j, ej] : shape) p.push_back(ej);
        return p;
    }
};

// Staircase Young diagram: row s holds x^i y^s for i < k[s], rows strictly
// shrinking.  k lists the d positive rows; the empty row k_d = 0 is implicit.
struct NormalPattern {
    std::vector<long long> k;
    long long n = 0;
    long long d = 0;
};

// Zero-pattern profile for d x d matrices: entries (i, j) with i > gamma(j)
// vanish.  Nondecreasing with gamma(i) <= i-1, so such matrices are strictly
// block upper triangular.
struct GammaProfile {
    long long d = 0;
    std::vector<long long> g;  // g[i-1] = gamma(i), 1-based i
    long long operator()(long long i) const { return g[static_cast<std::size_t>(i - 1)]; }
};

HSType validate_type(const std::vector<long long>& t);
JumpVector jumping_indices(const HSType& type);
NormalPattern partition_from_type(const HSType& type);
HSType type_from_partition(const std::vector<long long>& k);
NormalPattern validate_partition(const std::vector<long long>& k);

// All types of colength n, i.e. all strict partitions of n, in descending
// lexicographic order of the partition.
std::vector<HSType> enumerate_types(long long n);

// dim Z_T, computed through both difference formulas; they must agree.
long long dim_stratum(const HSType& type);

GammaProfile gamma_profile_from_shape(const std::vector<long long>& shape_parts, long long d);
GammaProfile gamma_from_shape(const JumpVector& jumps);

std::string format_list(const std::vector<long long>& v);
std::vector<long long> parse_list(const std::string& s);

}  // namespace bnhilb
