#include "bnhilb/hstype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bnhilb/errors.hpp"

namespace bnhilb {

HSType validate_type(const std::vector<long long>& t_in) {
    std::vector<long long> t = t_in;
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (t.empty()) throw domain_error("type: empty after dropping trailing zeros");
    // order = length of the staircase prefix t_j = j+1
    std::size_t d = 0;
    while (d < t.size() && t[d] == static_cast<long long>(d) + 1) ++d;
    if (d == 0) throw domain_error("type: t_0 must be 1");
    if (d < t.size()) {
        if (t[d] > static_cast<long long>(d))
            throw domain_error("type: t_" + std::to_string(d) + " exceeds the order");
        for (std::size_t j = d; j + 1 < t.size(); ++j)
            if (t[j] < t[j + 1]) throw domain_error("type: tail not non-increasing");
        for (std::size_t j = d; j < t.size(); ++j)
            if (t[j] <= 0) throw domain_error("type: interior zero or negative count");
    }
    HSType ty;
    ty.t = std::move(t);
    ty.d = static_cast<long long>(d);
    ty.n = std::accumulate(ty.t.begin(), ty.t.end(), 0LL);
    return ty;
}

JumpVector jumping_indices(const HSType& type) {
    JumpVector jv;
    jv.d = type.d;
    const auto& t = type.t;
    jv.e.assign(t.size() + 1, 0);
    auto tv = [&](long long j) -> long long {
        return (j >= 0 && j < static_cast<long long>(t.size())) ? t[static_cast<std::size_t>(j)] : 0;
    };
    long long total = 0;
    for (long long j = type.d; j <= static_cast<long long>(t.size()); ++j) {
        jv.e[static_cast<std::size_t>(j)] = tv(j - 1) - tv(j);
        total += jv.e[static_cast<std::size_t>(j)];
    }
    if (total != type.d) throw invariant_violation("jump-sum-equals-order", "sum of e_j != d");
    for (long long j = static_cast<long long>(t.size()); j >= type.d; --j)
        if (jv.e[static_cast<std::size_t>(j)] > 0) jv.shape.emplace_back(j, jv.e[static_cast<std::size_t>(j)]);
    return jv;
}

NormalPattern partition_from_type(const HSType& type) {
    // conjugate partition: row s has one cell for each degree j with t_j > s
    NormalPattern p;
    p.d = type.d;
    p.n = type.n;
    p.k.assign(static_cast<std::size_t>(type.d), 0);
    for (long long s = 0; s < type.d; ++s)
        for (long long tj : type.t)
            if (tj > s) ++p.k[static_cast<std::size_t>(s)];
    return p;
}

NormalPattern validate_partition(const std::vector<long long>& k) {
    if (k.empty()) throw domain_error("partition: empty");
    for (std::size_t s = 0; s < k.size(); ++s) {
        if (k[s] <= 0) throw domain_error("partition: parts must be positive");
        if (s + 1 < k.size() && k[s] <= k[s + 1]) throw domain_error("partition: parts must strictly decrease");
    }
    NormalPattern p;
    p.k = k;
    p.d = static_cast<long long>(k.size());
    p.n = std::accumulate(k.begin(), k.end(), 0LL);
    return p;
}

HSType type_from_partition(const std::vector<long long>& k) {
    NormalPattern p = validate_partition(k);
    std::vector<long long> t(static_cast<std::size_t>(p.k[0] + p.d), 0);
    for (long long s = 0; s < p.d; ++s)
        for (long long i = 0; i < p.k[static_cast<std::size_t>(s)]; ++i) ++t[static_cast<std::size_t>(i + s)];
    return validate_type(t);
}

namespace {

void strict_partitions(long long n, long long max_part, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(n, max_part); p >= 1; --p) {
        // remaining parts are strictly smaller, so they sum to at most (p-1)+(p-2)+...
        if ((p - 1) * p / 2 < n - p) continue;
        cur.push_back(p);
        strict_partitions(n - p, p - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<HSType> enumerate_types(long long n) {
    if (n < 1) throw domain_error("enumerate_types: n must be >= 1");
    std::vector<std::vector<long long>> parts;
    std::vector<long long> cur;
    strict_partitions(n, n, cur, parts);
    std::vector<HSType> types;
    types.reserve(parts.size());
    for (const auto& k : parts) types.push_back(type_from_partition(k));
    return types;
}

long long dim_stratum(const HSType& type) {
    JumpVector jv = jumping_indices(type);
    long long s1 = 0, s2 = 0;
    for (auto& [j, ej] : jv.shape) {
        s1 += ej * (ej + 1) / 2;
        s2 += ej * (ej - 1) / 2;
    }
    const long long form1 = type.n - s1;
    const long long form2 = type.n - type.d - s2;
    if (form1 != form2)
        throw invariant_violation("stratum-dimension-forms",
                                  "difference formulas disagree for type " + format_list(type.t));
    return form1;
}

GammaProfile gamma_profile_from_shape(const std::vector<long long>& shape_parts, long long d) {
    long long sum = 0;
    for (long long p : shape_parts) {
        if (p <= 0) throw domain_error("shape: parts must be positive");
        sum += p;
    }
    if (sum != d) throw domain_error("shape: parts must sum to the matrix size");
    GammaProfile g;
    g.d = d;
    g.g.reserve(static_cast<std::size_t>(d));
    long long partial = 0;
    for (long long p : shape_parts) {
        for (long long i = 0; i < p; ++i) g.g.push_back(partial);
        partial += p;
    }
    return g;
}

GammaProfile gamma_from_shape(const JumpVector& jumps) {
    return gamma_profile_from_shape(jumps.shape_parts(), jumps.d);
}

std::string format_list(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw domain_error("list: empty entry in '" + s + "'");
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size()) throw domain_error("list: bad integer '" + item + "'");
        v.push_back(value);
    }
    if (v.empty()) throw domain_error("list: no entries in '" + s + "'");
    return v;
}

}  // namespace bnhilb
