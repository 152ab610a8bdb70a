#include "bnhilb/degloci.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include <gmpxx.h>

#include "bnhilb/errors.hpp"
#include "bnhilb/field.hpp"
#include "bnhilb/matrix.hpp"

namespace bnhilb {

long long rho_gamma(const GammaProfile& gamma, const std::vector<long long>& a) {
    const long long d = gamma.d;
    const long long r = static_cast<long long>(a.size());
    long long prev = 0;
    long long correction = 0;
    for (long long ai : a) {
        if (ai <= prev || ai > d) throw domain_error("echelon: pivots must strictly increase within [1, d]");
        prev = ai;
        correction += gamma(ai) - ai;
    }
    return r * d - r * (r - 1) / 2 + correction;
}

namespace {

void admissible_pivots(const GammaProfile& gamma, long long rank, long long next, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out) {
    if (static_cast<long long>(cur.size()) == rank) {
        out.push_back(cur);
        return;
    }
    const long long i = static_cast<long long>(cur.size()) + 1;
    for (long long v = next; v <= gamma.d - (rank - i); ++v) {
        if (gamma(v) < i) continue;  // pivot i needs at least i free rows in its column
        cur.push_back(v);
        admissible_pivots(gamma, rank, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

DegLocusDim dim_deg_gamma(const GammaProfile& gamma, long long rank) {
    if (rank < 0 || rank > gamma.d) throw domain_error("degeneracy: rank must lie in [0, d]");
    bool criterion = true;
    for (long long k = 1; k <= gamma.d; ++k)
        if (gamma(k) - k < rank - gamma.d) criterion = false;

    std::vector<std::vector<long long>> admissible;
    std::vector<long long> cur;
    admissible_pivots(gamma, rank, 1, cur, admissible);

    if (admissible.empty() != !criterion)
        throw invariant_violation("echelon-existence-criterion",
                                  "closed nonemptiness test disagrees with the pivot search");

    DegLocusDim res;
    res.nonempty = !admissible.empty();
    if (!res.nonempty) return res;
    bool first = true;
    for (const auto& a : admissible) {
        const long long value = rho_gamma(gamma, a);
        if (first || value > res.dim) {
            res.dim = value;
            res.maximizers.clear();
            first = false;
        }
        if (value == res.dim) res.maximizers.push_back(a);
    }
    return res;
}

MatShapeDim dim_mat_e(const std::vector<long long>& shape, long long rank) {
    long long d = 0, max_part = 0;
    for (long long p : shape) {
        if (p <= 0) throw domain_error("shape: parts must be positive");
        d += p;
        max_part = std::max(max_part, p);
    }
    const GammaProfile gamma = gamma_profile_from_shape(shape, d);
    const DegLocusDim inner = dim_deg_gamma(gamma, rank);

    if (inner.nonempty != (rank <= d - max_part))
        throw invariant_violation("degeneracy-rank-criterion",
                                  "nonemptiness differs from rank <= d - max(e) for shape " + format_list(shape));
    MatShapeDim res;
    res.nonempty = inner.nonempty;
    if (!res.nonempty) return res;
    res.dim = inner.dim;

    const long long bound = rank * (2 * d - rank - 1) / 2;
    if (res.dim > bound)
        throw invariant_violation("degeneracy-dimension-bound",
                                  "dimension exceeds R(2d-R-1)/2 for shape " + format_list(shape));
    res.tight = (res.dim == bound);
    const bool enough_blocks = static_cast<long long>(shape.size()) >= rank + 1;
    if (res.tight != enough_blocks)
        throw invariant_violation("degeneracy-bound-tightness",
                                  "bound attained iff the shape has at least R+1 parts; shape " + format_list(shape));

    if (shape.size() == 2) {
        const long long lo = std::min(shape[0], shape[1]);
        if (res.nonempty != (rank <= lo) || res.dim != rank * (d - rank))
            throw invariant_violation("two-block-grassmann-dimension",
                                      "two-block locus must be a Grassmannian of dimension R(d-R)");
    }
    return res;
}

std::uint64_t RankCensus::total() const {
    std::uint64_t s = 0;
    for (const auto& [key, c] : counts) s += c;
    return s;
}

namespace {

struct CellList {
    long long d = 0;
    std::vector<std::pair<long long, long long>> cells;  // (row, col), 1-based, row-major
};

CellList free_cells(const std::vector<long long>& shape) {
    CellList cl;
    for (long long p : shape) cl.d += p;
    const GammaProfile gamma = gamma_profile_from_shape(shape, cl.d);
    for (long long i = 1; i <= cl.d; ++i)
        for (long long j = 1; j <= cl.d; ++j)
            if (gamma(j) >= i) cl.cells.emplace_back(i, j);
    return cl;
}

// Enumerates linear indices [lo, hi); the first free cell is the most
// significant digit, so an aligned range fixes a prefix of the entries.
void census_range(const PrimeField& f, const CellList& cl, std::uint64_t lo, std::uint64_t hi,
                  std::map<CensusKey, std::uint64_t>& out) {
    const std::uint64_t q = f.modulus();
    std::vector<std::uint64_t> place(cl.cells.size(), 1);
    for (std::size_t c = place.size(); c-- > 1;) place[c - 1] = place[c] * q;
    Matrix<PrimeField> base(static_cast<std::size_t>(cl.d), static_cast<std::size_t>(cl.d), f);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t c = 0; c < cl.cells.size(); ++c) {
            const auto& [i, j] = cl.cells[c];
            base.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v / place[c];
            v %= place[c];
        }
        const auto rr = rref_pivots(f, base);
        CensusKey key;
        key.rank = static_cast<long long>(rr.pivots.size());
        key.pivots.assign(rr.pivots.begin(), rr.pivots.end());
        ++out[key];
    }
}

}  // namespace

RankCensus census(const std::vector<long long>& shape, long long q, std::uint64_t budget, unsigned threads) {
    if (q < 2) throw domain_error("census: q must be a prime >= 2");
    const PrimeField f(static_cast<std::uint64_t>(q));
    const CellList cl = free_cells(shape);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cl.cells.size(); ++i) {
        if (total > budget / static_cast<std::uint64_t>(q))
            throw budget_exceeded("census: q^{n_e} exceeds budget " + std::to_string(budget));
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > budget) throw budget_exceeded("census: q^{n_e} exceeds budget " + std::to_string(budget));

    RankCensus out;
    out.q = q;
    out.shape = shape;
    out.d = cl.d;
    out.free_cells = static_cast<long long>(cl.cells.size());

    unsigned workers = threads ? threads : std::min(std::thread::hardware_concurrency(), 8u);
    if (workers < 1) workers = 1;
    if (total < 4096) workers = 1;

    if (workers == 1) {
        census_range(f, cl, 0, total, out.counts);
        return out;
    }

    // each worker takes a block of fixed prefixes of the free entries
    std::uint64_t prefix_values = 1, prefix_block = total;
    while (prefix_values < workers && prefix_block > 1) {
        prefix_values *= static_cast<std::uint64_t>(q);
        prefix_block /= static_cast<std::uint64_t>(q);
    }
    const std::uint64_t per_worker = (prefix_values + workers - 1) / workers;
    std::vector<std::map<CensusKey, std::uint64_t>> shards(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * per_worker * prefix_block;
        const std::uint64_t hi = std::min(total, (w + 1) * per_worker * prefix_block);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] { census_range(f, cl, lo, hi, shards[w]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& shard : shards)
        for (const auto& [key, c] : shard) out.counts[key] += c;
    return out;
}

RealizationReport verify_realization(const std::vector<long long>& shape, long long q, std::uint64_t budget) {
    const RankCensus c = census(shape, q, budget);
    const GammaProfile gamma = gamma_profile_from_shape(shape, c.d);

    std::set<CensusKey> predicted;
    for (long long r = 0; r <= c.d; ++r) {
        std::vector<std::vector<long long>> adm;
        std::vector<long long> cur;
        admissible_pivots(gamma, r, 1, cur, adm);
        for (auto& a : adm) predicted.insert({r, a});
    }

    RealizationReport rep;
    rep.pass = true;
    long long max_part = 0;
    for (long long p : shape) max_part = std::max(max_part, p);
    rep.max_rank_predicted = c.d - max_part;

    for (const auto& [key, count] : c.counts) {
        rep.max_rank_realized = std::max(rep.max_rank_realized, key.rank);
        if (!predicted.count(key)) {
            rep.pass = false;
            rep.failures.push_back("unpredicted pivot sequence (" + format_list(key.pivots) + ") over q=" +
                                   std::to_string(q));
        }
    }
    for (const auto& key : predicted) {
        if (!c.counts.count(key)) {
            rep.pass = false;
            rep.failures.push_back("predicted pivot sequence (" + format_list(key.pivots) +
                                   ") unrealized over q=" + std::to_string(q));
        }
    }
    if (rep.max_rank_realized != rep.max_rank_predicted) {
        rep.pass = false;
        rep.failures.push_back("max rank " + std::to_string(rep.max_rank_realized) + " != d - max(e) = " +
                               std::to_string(rep.max_rank_predicted));
    }
    return rep;
}

std::string census_csv(const RankCensus& c) {
    std::ostringstream os;
    os << "q,e,R,a,count\n";
    for (const auto& [key, count] : c.counts)
        os << c.q << ",\"" << format_list(c.shape) << "\"," << key.rank << ",\"" << format_list(key.pivots)
           << "\"," << count << "\n";
    return os.str();
}

std::vector<FitRow> census_fit(const std::vector<long long>& shape, std::uint64_t budget) {
    const std::vector<long long> qs = {2, 3, 5, 7};
    std::map<long long, std::vector<std::uint64_t>> per_rank;
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const RankCensus c = census(shape, qs[qi], budget);
        for (const auto& [key, count] : c.counts) {
            auto& row = per_rank[key.rank];
            row.resize(qs.size(), 0);
            row[qi] += count;
        }
    }
    std::vector<FitRow> rows;
    for (auto& [r, counts] : per_rank) {
        counts.resize(qs.size(), 0);
        // Lagrange interpolation through (q_i, count_i), exact over Q
        std::vector<mpq_class> poly(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            std::vector<mpq_class> basis = {1};
            mpq_class denom = 1;
            for (std::size_t j = 0; j < qs.size(); ++j) {
                if (j == i) continue;
                std::vector<mpq_class> next(basis.size() + 1, 0);
                for (std::size_t t = 0; t < basis.size(); ++t) {
                    next[t] += basis[t] * mpq_class(static_cast<long>(-qs[j]));
                    next[t + 1] += basis[t];
                }
                basis = std::move(next);
                denom *= mpq_class(static_cast<long>(qs[i] - qs[j]));
            }
            const mpq_class scale = mpq_class(static_cast<unsigned long>(counts[i])) / denom;
            for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += basis[t] * scale;
        }
        while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
        FitRow row;
        row.rank = r;
        row.counts = counts;
        for (auto& coefficient : poly) row.coefficients.push_back(coefficient.get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

void compositions_rec(long long rest, std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = rest; p >= 1; --p) {
        cur.push_back(p);
        compositions_rec(rest - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long long>> compositions_of(long long d) {
    if (d < 1) throw domain_error("compositions: d must be >= 1");
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    compositions_rec(d, cur, out);
    return out;
}

}  // namespace bnhilb
