#include "bnhilb/bn.hpp"

#include <algorithm>

#include "bnhilb/errors.hpp"

namespace bnhilb {

BNReport bn_stratum(const HSType& type, long long r) {
    if (r < 0) throw domain_error("bn: r must be >= 0");
    const JumpVector jumps = jumping_indices(type);
    const auto shape = jumps.shape_parts();
    const long long d = type.d;
    const long long r_min = *std::max_element(shape.begin(), shape.end());

    BNReport rep;
    rep.level = "stratum";
    rep.type_t = type.t;
    rep.r = r;
    rep.n = type.n;
    rep.refs = {"stratum-generator-range", "stratum-dimension-via-degeneracy", "stratum-dimension-bound"};

    rep.nonempty = (r_min <= r && r <= d);
    if (!rep.nonempty) {
        // cross-check against the matrix-side criterion when the corank is in range
        if (r <= d && r >= 0) {
            const MatShapeDim m = dim_mat_e(shape, d - r);
            if (m.nonempty)
                throw invariant_violation("stratum-generator-range",
                                          "degeneracy locus nonempty outside [max(e), d]");
        }
        return rep;
    }

    const MatShapeDim m = dim_mat_e(shape, d - r);
    if (!m.nonempty)
        throw invariant_violation("stratum-generator-range", "degeneracy locus empty inside [max(e), d]");
    const long long dim = m.dim + type.n - d * (d + 1) / 2;
    const long long bound = type.n - r * (r + 1) / 2 - (d - r);
    if (dim > bound)
        throw invariant_violation("stratum-dimension-bound",
                                  "dimension exceeds n - r(r+1)/2 - (d-r) for type " + format_list(type.t));
    rep.dim = dim;
    rep.tight = (dim == bound);
    if (rep.tight != (static_cast<long long>(shape.size()) >= d - r + 1))
        throw invariant_violation("stratum-bound-tightness",
                                  "bound attained iff the shape has at least d-r+1 parts; type " +
                                      format_list(type.t));

    const DegLocusDim inner = dim_deg_gamma(gamma_from_shape(jumps), d - r);
    if (inner.nonempty && !inner.maximizers.empty())
        rep.witness = "pivot columns (" + format_list(inner.maximizers.front()) + ")";
    return rep;
}

BNReport bn_local(long long r, long long n) {
    if (r < 0 || n < 1) throw domain_error("bn: need r >= 0 and n >= 1");
    BNReport rep;
    rep.level = "local";
    rep.r = r;
    rep.n = n;
    rep.refs = {"local-expected-dimension"};
    const long long rho = n - r * (r + 1) / 2;
    rep.nonempty = (rho >= 0);
    if (rep.nonempty) {
        rep.dim = rho;
        rep.tight = true;
        if (rho == 0) rep.witness = "unique ideal: power " + std::to_string(r) + " of the maximal ideal";
    }
    return rep;
}

BNReport bn_local_via_strata(long long r, long long n) {
    if (r < 0 || n < 1) throw domain_error("bn: need r >= 0 and n >= 1");
    BNReport rep;
    rep.level = "local-via-strata";
    rep.r = r;
    rep.n = n;
    rep.refs = {"local-stratified-aggregation"};

    std::vector<std::vector<long long>> best_types;
    std::optional<long long> best;
    for (const HSType& type : enumerate_types(n)) {
        if (type.d < r) continue;  // strata of smaller order carry no such ideal
        const JumpVector jumps = jumping_indices(type);
        const auto shape = jumps.shape_parts();
        const long long r_min = *std::max_element(shape.begin(), shape.end());
        // within one stratum the locus {mu >= r+1} splits by exact generator count
        std::optional<long long> stratum_dim;
        for (long long rr = std::max(r, r_min); rr <= type.d; ++rr) {
            const BNReport piece = bn_stratum(type, rr);
            if (piece.nonempty && (!stratum_dim || *piece.dim > *stratum_dim)) stratum_dim = piece.dim;
        }
        if (!stratum_dim) continue;
        if (!best || *stratum_dim > *best) {
            best = stratum_dim;
            best_types.clear();
        }
        if (*stratum_dim == *best) best_types.push_back(type.t);
    }

    rep.nonempty = best.has_value();
    if (rep.nonempty) {
        rep.dim = best;
        rep.tight = true;
        std::string w = "dominating type";
        if (best_types.size() > 1) w += "s";
        for (std::size_t i = 0; i < best_types.size(); ++i)
            w += (i ? "; (" : " (") + format_list(best_types[i]) + ")";
        rep.witness = w;
    }
    return rep;
}

BNReport bn_global(long long r, long long n) {
    if (r < 0 || n < 0) throw domain_error("bn: need r >= 0 and n >= 0");
    BNReport rep;
    rep.level = "global";
    rep.r = r;
    rep.n = n;
    rep.refs = {"global-expected-dimension"};
    const long long rho = 2 * n + 2 - r * (r + 1);
    rep.nonempty = (rho >= 2);
    if (rep.nonempty) {
        rep.dim = rho;
        rep.tight = true;
        if (r == 0)
            rep.witness = "entire space of pairs";
        else
            rep.witness = "multiplicity " + std::to_string(r * (r + 1) / 2) + " at the marked point";
    }
    return rep;
}

std::vector<std::pair<long long, long long>> multiplicity_strata(long long r, long long n) {
    if (r < 0 || n < 0) throw domain_error("bn: need r >= 0 and n >= 0");
    std::vector<std::pair<long long, long long>> strata;
    for (long long m = r * (r + 1) / 2; m <= n; ++m) strata.emplace_back(m, 2 * n + 2 - m - r * (r + 1) / 2);
    return strata;
}

namespace {

long long rho_global(long long r, long long n) { return 2 * n + 2 - r * (r + 1); }

}  // namespace

RecursionReport nested_recursion_verify(long long n_max) {
    if (n_max < 0) throw domain_error("bn: n_max must be >= 0");
    RecursionReport rep;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        if (rep.failures.size() < 50) rep.failures.push_back(msg);
    };

    // derived[n][r], r <= n_max + 1; dimension only meaningful when nonempty
    const long long r_cap = n_max + 1;
    std::vector<std::vector<bool>> nonempty(static_cast<std::size_t>(n_max) + 1,
                                            std::vector<bool>(static_cast<std::size_t>(r_cap) + 1, false));
    std::vector<std::vector<long long>> dim(static_cast<std::size_t>(n_max) + 1,
                                            std::vector<long long>(static_cast<std::size_t>(r_cap) + 1, 0));

    for (long long n = 0; n <= n_max; ++n) {
        for (long long r = 0; r <= r_cap; ++r) {
            const auto ni = static_cast<std::size_t>(n);
            const auto ri = static_cast<std::size_t>(r);
            if (r == 0) {
                // base: every pair qualifies
                nonempty[ni][ri] = true;
                dim[ni][ri] = 2 * n + 2;
            } else if (r > n) {
                nonempty[ni][ri] = false;  // more generators than the colength allows
            } else {
                // fibration over the smaller locus: the exact-count piece at
                // r'-1 generators is covered by a Grassmann bundle of
                // fiber dimension r(r'-r)
                std::optional<long long> best;
                for (long long rp = r; rp - 1 <= n - r; ++rp) {
                    const long long s = rp - 1, k = n - r;
                    if (!nonempty[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]) continue;
                    const long long piece = dim[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +
                                            r * (rp - r);
                    // each piece sits at rho - (r'-1)(r'-r): only r' = r tops out
                    const long long expected_piece = rho_global(r, n) - (rp - 1) * (rp - r);
                    if (piece != expected_piece)
                        fail("piece dimension mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " r'=" + std::to_string(rp));
                    if (rp > r && piece >= rho_global(r, n))
                        fail("higher-generator piece not strictly smaller at n=" + std::to_string(n) +
                             " r=" + std::to_string(r) + " r'=" + std::to_string(rp));
                    if (!best || piece > *best) best = piece;
                }
                nonempty[ni][ri] = best.has_value();
                if (best) dim[ni][ri] = *best;
            }

            const long long rho = rho_global(r, n);
            if (nonempty[ni][ri] != (rho >= 2))
                fail("nonemptiness differs from rho >= 2 at n=" + std::to_string(n) + " r=" + std::to_string(r));
            if (nonempty[ni][ri] && dim[ni][ri] != rho)
                fail("dimension differs from rho at n=" + std::to_string(n) + " r=" + std::to_string(r));
            ++rep.checked;
        }
    }
    return rep;
}

}  // namespace bnhilb
