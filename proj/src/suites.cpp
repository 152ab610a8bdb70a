#include "bnhilb/suites.hpp"

#include <algorithm>
#include <map>

#include "bnhilb/bn.hpp"
#include "bnhilb/errors.hpp"

namespace bnhilb {

namespace {

// Aggregates many instances of one named check; keeps the first failure's
// detail and counts the rest.
class Checker {
  public:
    explicit Checker(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, const std::string& ref, bool ok, const std::string& detail) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, results_.size()).first;
            results_.push_back({suite_, name, ref, true, ""});
            failures_.push_back(0);
        }
        if (!ok) {
            auto& r = results_[it->second];
            if (r.pass) {
                r.pass = false;
                r.detail = detail;
            }
            ++failures_[it->second];
        }
    }

    void note(const std::string& name, const std::string& ref, const std::string& detail) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            index_.emplace(name, results_.size());
            results_.push_back({suite_, name, ref, true, detail});
            failures_.push_back(0);
        }
    }

    std::vector<CheckResult> finish() {
        for (std::size_t i = 0; i < results_.size(); ++i)
            if (failures_[i] > 1) results_[i].detail += " (+" + std::to_string(failures_[i] - 1) + " more)";
        return std::move(results_);
    }

  private:
    std::string suite_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::size_t> failures_;
    std::vector<CheckResult> results_;
};

long long max_local_r(long long n) {
    long long r = 0;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    return r;  // largest r with n - r(r+1)/2 >= 0
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> suite_hstype(long long n_max, long long roundtrip_n_max) {
    Checker c("hstype");
    for (long long n = 1; n <= n_max; ++n) {
        for (const HSType& type : enumerate_types(n)) {
            const std::string label = "type (" + format_list(type.t) + ")";
            c.check("counts-sum-to-colength", "type-counts-partition", type.n == n, label);
            try {
                const JumpVector jumps = jumping_indices(type);
                long long jump_sum = 0;
                for (auto& [j, ej] : jumps.shape) jump_sum += ej;
                c.check("jumps-sum-to-order", "jump-sum-equals-order", jump_sum == type.d, label);

                const long long dim = dim_stratum(type);  // certifies both difference forms
                c.check("stratum-dimension-forms", "stratum-dimension-forms", true, label);
                c.check("stratum-dimension-equals-free-count", "chart-parametrizes-stratum",
                        dim == beta_dims(type).n_t, label);

                const bool curvilinear = (type.d == 1);
                c.check("curvilinear-dominates", "stratum-dimension-forms",
                        dim <= n - 1 && ((dim == n - 1) == curvilinear), label);

                const GammaProfile gamma = gamma_from_shape(jumps);
                bool profile_ok = true;
                for (long long i = 1; i <= gamma.d; ++i) {
                    if (gamma(i) < 0 || gamma(i) > i - 1) profile_ok = false;
                    if (i > 1 && gamma(i) < gamma(i - 1)) profile_ok = false;
                }
                c.check("shape-profile-subdiagonal", "profile-strictly-upper", profile_ok, label);
            } catch (const std::exception& ex) {
                c.check("type-operations-total", "type-counts-partition", false, label + ": " + ex.what());
            }
        }
    }
    for (long long n = 1; n <= roundtrip_n_max; ++n) {
        for (const HSType& type : enumerate_types(n)) {
            const NormalPattern pattern = partition_from_type(type);
            const HSType back = type_from_partition(pattern.k);
            const bool ok = back.t == type.t && partition_from_type(back).k == pattern.k;
            c.check("partition-type-roundtrip", "type-partition-bijection", ok,
                    "type (" + format_list(type.t) + ")");
        }
    }
    return c.finish();
}

template <FieldOps F>
void run_iarrobino_checks(Checker& c, const F& f, const std::string& field_label, long long n_max,
                          int samples, std::uint64_t seed, int cap_override) {
    std::uint64_t counter = 0;
    for (long long n = 1; n <= n_max; ++n) {
        for (const HSType& type : enumerate_types(n)) {
            const std::string label = "type (" + format_list(type.t) + ") over " + field_label;
            const NormalPattern pattern = partition_from_type(type);
            const int cap = cap_override ? cap_override : default_cap(n);
            const JumpVector jumps = jumping_indices(type);
            const GammaProfile gamma = gamma_from_shape(jumps);
            const auto shape = jumps.shape_parts();
            const long long r_min = *std::max_element(shape.begin(), shape.end());
            try {
                const auto monomials = monomial_ideal(f, pattern, cap);
                const auto at_zero = ideal_from_beta(f, zero_beta(f, pattern, cap));
                bool minors_match = at_zero.gens.size() == monomials.gens.size();
                for (std::size_t i = 0; minors_match && i < monomials.gens.size(); ++i)
                    minors_match = at_zero.gens[i].eq(f, monomials.gens[i]);
                c.check("minors-at-zero-are-monomials", "resolution-of-monomial-ideal", minors_match, label);

                c.check("free-coefficient-count", "chart-parametrizes-stratum",
                        static_cast<long long>(beta_slots(pattern).size()) == beta_dims(type).n_t, label);

                for (int s = 0; s < samples; ++s) {
                    const auto beta = sample_beta(f, pattern, mix(seed, counter++), cap);
                    const auto ideal = ideal_from_beta(f, beta);

                    const auto profile = colength_profile(f, ideal);
                    c.check("sampled-colength", "chart-parametrizes-stratum", profile.colength == n, label);
                    c.check("sampled-type", "chart-parametrizes-stratum",
                            validate_type(profile.t).t == type.t, label);
                    c.check("sampled-chart-complement", "chart-parametrizes-stratum",
                            chart_disjoint(f, ideal, pattern), label);

                    const long long mu = min_generators(f, ideal);
                    const long long predicted = mu_predicted(f, beta);
                    c.check("generator-count-rank-projection", "minimal-generators-rank-projection",
                            mu == predicted,
                            label + ": span route " + std::to_string(mu) + ", rank route " +
                                std::to_string(predicted));
                    c.check("generator-count-range", "stratum-generator-range",
                            mu >= 1 + r_min && mu <= type.d + 1, label);

                    const auto bbar = beta_bar_zero(f, beta);
                    bool shape_ok = true;
                    for (long long i = 1; i <= type.d; ++i)
                        for (long long j = 1; j <= type.d; ++j)
                            if (i > gamma(j) &&
                                !f.is_zero(bbar.at(static_cast<std::size_t>(i - 1),
                                                   static_cast<std::size_t>(j - 1))))
                                shape_ok = false;
                    c.check("constant-terms-follow-shape", "profile-strictly-upper", shape_ok, label);
                }
            } catch (const std::exception& ex) {
                c.check("chart-operations-total", "chart-parametrizes-stratum", false,
                        label + ": " + ex.what());
            }
        }
    }
}

std::vector<CheckResult> suite_iarrobino(long long p, long long n_max, int samples, std::uint64_t seed,
                                         int cap_override) {
    const PrimeField f(static_cast<std::uint64_t>(p));
    Checker c("iarrobino");
    run_iarrobino_checks(c, f, "p=" + std::to_string(p), n_max, samples, seed, cap_override);
    return c.finish();
}

std::vector<CheckResult> suite_iarrobino_rational(long long n_max, int samples, std::uint64_t seed,
                                                  int cap_override) {
    const RationalField f;
    Checker c("iarrobino");
    run_iarrobino_checks(c, f, "the rationals", n_max, samples, seed, cap_override);
    return c.finish();
}

std::vector<CheckResult> probe_iarrobino_low_char(long long p, long long n_max, int samples,
                                                  std::uint64_t seed) {
    const PrimeField f(static_cast<std::uint64_t>(p));
    Checker c("iarrobino-low-char");
    std::uint64_t counter = 0;
    long long tested = 0, colength_off = 0, type_off = 0, mu_off = 0, errored = 0;
    for (long long n = 1; n <= n_max; ++n) {
        for (const HSType& type : enumerate_types(n)) {
            const NormalPattern pattern = partition_from_type(type);
            const int cap = default_cap(n);
            for (int s = 0; s < samples; ++s) {
                ++tested;
                try {
                    const auto beta = sample_beta(f, pattern, mix(seed, counter++), cap);
                    const auto ideal = ideal_from_beta(f, beta);
                    const auto profile = colength_profile(f, ideal);
                    if (profile.colength != n) ++colength_off;
                    if (profile.t != type.t) ++type_off;
                    if (min_generators(f, ideal) != mu_predicted(f, beta)) ++mu_off;
                } catch (const std::exception&) {
                    ++errored;
                }
            }
        }
    }
    c.note("low-characteristic-observations", "chart-parametrizes-stratum",
           "p=" + std::to_string(p) + ": " + std::to_string(tested) + " samples, colength mismatches " +
               std::to_string(colength_off) + ", type mismatches " + std::to_string(type_off) +
               ", generator-count mismatches " + std::to_string(mu_off) + ", errors " +
               std::to_string(errored) + " (observational only)");
    return c.finish();
}

std::vector<CheckResult> suite_degloci(long long d_max, long long grassmann_d_max, long long growth_d_max,
                                       std::uint64_t budget) {
    Checker c("degloci");
    const std::vector<long long> qs = {2, 3};
    for (long long d = 1; d <= d_max; ++d) {
        for (const auto& shape : compositions_of(d)) {
            const std::string label = "shape (" + format_list(shape) + ")";
            for (long long q : qs) {
                try {
                    const RankCensus cen = census(shape, q, budget);
                    std::uint64_t expect = 1;
                    for (long long i = 0; i < cen.free_cells; ++i) expect *= static_cast<std::uint64_t>(q);
                    c.check("census-exhaustive", "echelon-cell-decomposition", cen.total() == expect,
                            label + " q=" + std::to_string(q));
                    const RealizationReport real = verify_realization(shape, q, budget);
                    c.check("realization-matches-prediction", "echelon-existence-criterion", real.pass,
                            label + " q=" + std::to_string(q) +
                                (real.failures.empty() ? "" : ": " + real.failures.front()));
                } catch (const std::exception& ex) {
                    c.check("census-operations-total", "echelon-cell-decomposition", false,
                            label + ": " + ex.what());
                }
            }
            for (long long rank = 0; rank <= d; ++rank) {
                try {
                    dim_mat_e(shape, rank);  // internal certificates for bound, tightness, two-block case
                    c.check("dimension-bound-and-tightness", "degeneracy-dimension-bound", true, label);
                } catch (const std::exception& ex) {
                    c.check("dimension-bound-and-tightness", "degeneracy-dimension-bound", false,
                            label + " R=" + std::to_string(rank) + ": " + ex.what());
                }
            }
        }
    }
    for (long long d = 2; d <= grassmann_d_max; ++d) {
        for (long long e1 = 1; e1 < d; ++e1) {
            const std::vector<long long> shape = {e1, d - e1};
            for (long long rank = 0; rank <= d; ++rank) {
                try {
                    dim_mat_e(shape, rank);
                    c.check("two-block-grassmannian", "two-block-grassmann-dimension", true,
                            "shape (" + format_list(shape) + ")");
                } catch (const std::exception& ex) {
                    c.check("two-block-grassmannian", "two-block-grassmann-dimension", false,
                            "shape (" + format_list(shape) + ") R=" + std::to_string(rank) + ": " +
                                ex.what());
                }
            }
        }
    }
    // leading count growth between q=2 and q=3 should single out the
    // expected-dimension maximizers
    for (long long d = 1; d <= growth_d_max; ++d) {
        for (const auto& shape : compositions_of(d)) {
            const GammaProfile gamma = gamma_profile_from_shape(shape, d);
            const RankCensus c2 = census(shape, 2, budget);
            const RankCensus c3 = census(shape, 3, budget);
            for (long long rank = 1; rank <= d; ++rank) {
                std::vector<std::vector<long long>> realized;
                for (const auto& [key, count] : c2.counts)
                    if (key.rank == rank) realized.push_back(key.pivots);
                if (realized.empty()) continue;
                std::vector<std::vector<long long>> argmax;
                std::uint64_t best_num = 0, best_den = 1;
                for (const auto& a : realized) {
                    const std::uint64_t n2 = c2.counts.at({rank, a});
                    const auto it3 = c3.counts.find({rank, a});
                    const std::uint64_t n3 = (it3 == c3.counts.end()) ? 0 : it3->second;
                    // compare n3/n2 against best by cross multiplication
                    if (argmax.empty() || n3 * best_den > best_num * n2) {
                        best_num = n3;
                        best_den = n2;
                        argmax.assign(1, a);
                    } else if (n3 * best_den == best_num * n2) {
                        argmax.push_back(a);
                    }
                }
                const auto maximizers = dim_deg_gamma(gamma, rank).maximizers;
                bool contained = true;
                for (const auto& a : argmax)
                    if (std::find(maximizers.begin(), maximizers.end(), a) == maximizers.end())
                        contained = false;
                c.check("count-growth-locates-maximizers", "echelon-dimension-formula", contained,
                        "shape (" + format_list(shape) + ") R=" + std::to_string(rank));
            }
        }
    }
    return c.finish();
}

std::vector<CheckResult> suite_bn(long long n_max) {
    Checker c("bn");
    for (long long n = 1; n <= n_max; ++n) {
        const long long r_hi = max_local_r(n) + 2;
        for (long long r = 1; r <= r_hi; ++r) {
            const std::string label = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            const long long rho = n - r * (r + 1) / 2;
            const BNReport closed = bn_local(r, n);
            const BNReport strat = bn_local_via_strata(r, n);
            c.check("local-equivalence", "local-stratified-aggregation",
                    closed.nonempty == strat.nonempty && closed.dim == strat.dim &&
                        closed.tight == strat.tight,
                    label);
            c.check("local-nonemptiness", "local-expected-dimension", closed.nonempty == (rho >= 0), label);
            if (closed.nonempty)
                c.check("local-dimension", "local-expected-dimension", *closed.dim == rho, label);
            if (rho == 0) {
                std::vector<long long> staircase;
                for (long long j = 1; j <= r; ++j) staircase.push_back(j);
                const bool unique_type =
                    strat.witness &&
                    *strat.witness == "dominating type (" + format_list(staircase) + ")";
                c.check("unique-minimal-type", "local-stratified-aggregation", unique_type, label);
            }
        }

        // r = 0 asks for no constraint at all, so the aggregation sees the
        // full punctual Hilbert scheme (dimension n-1) while the closed
        // expected-dimension formula still reads n.  Both values are pinned.
        const BNReport closed0 = bn_local(0, n);
        const BNReport strat0 = bn_local_via_strata(0, n);
        c.check("rank-zero-closed-form-pinned", "local-expected-dimension",
                closed0.nonempty && closed0.dim == n, "n=" + std::to_string(n));
        c.check("rank-zero-aggregation-pinned", "local-stratified-aggregation",
                strat0.nonempty && strat0.dim == n - 1, "n=" + std::to_string(n));

        for (long long r = 1; r <= max_local_r(n); ++r) {
            const long long rho = n - r * (r + 1) / 2;
            std::optional<long long> best_at_order_r;
            bool higher_strictly_smaller = true;
            for (const HSType& type : enumerate_types(n)) {
                if (type.d < r) continue;
                const JumpVector jumps = jumping_indices(type);
                const auto shape = jumps.shape_parts();
                const long long r_min = *std::max_element(shape.begin(), shape.end());
                std::optional<long long> contribution;
                for (long long rr = std::max(r, r_min); rr <= type.d; ++rr) {
                    const BNReport piece = bn_stratum(type, rr);
                    if (piece.nonempty && (!contribution || *piece.dim > *contribution))
                        contribution = piece.dim;
                }
                if (!contribution) continue;
                if (type.d == r) {
                    if (!best_at_order_r || *contribution > *best_at_order_r)
                        best_at_order_r = contribution;
                } else if (*contribution >= rho) {
                    higher_strictly_smaller = false;
                }
            }
            const std::string label = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            c.check("order-r-achieves-expected", "local-stratified-aggregation",
                    best_at_order_r && *best_at_order_r == rho, label);
            c.check("higher-order-strictly-smaller", "local-stratified-aggregation",
                    higher_strictly_smaller, label);
        }

        for (long long r = 0; r <= r_hi; ++r) {
            const auto strata = multiplicity_strata(r, n);
            const std::string label = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            c.check("multiplicity-range", "multiplicity-stratification",
                    strata.empty() == (r * (r + 1) / 2 > n), label);
            bool decreasing = true;
            for (std::size_t i = 1; i < strata.size(); ++i)
                if (strata[i].second >= strata[i - 1].second) decreasing = false;
            c.check("multiplicity-strictly-decreasing", "multiplicity-stratification", decreasing, label);
            if (!strata.empty()) {
                const long long rho_total = 2 * n + 2 - r * (r + 1);
                c.check("multiplicity-max-at-minimal", "multiplicity-stratification",
                        strata.front().first == r * (r + 1) / 2 && strata.front().second == rho_total,
                        label);
            }
        }
    }
    return c.finish();
}

std::vector<CheckResult> suite_veronese(long long p, long long r_max, int random_count,
                                        std::uint64_t seed) {
    const PrimeField f(static_cast<std::uint64_t>(p));
    Checker c("veronese");
    std::uint64_t counter = 0;
    for (long long r = 2; r <= r_max; ++r) {
        const std::string label = "r=" + std::to_string(r) + " p=" + std::to_string(p);
        for (long long t = 0; t <= 10; ++t) {
            std::vector<PrimeField::Elem> a;
            auto power = f.one();
            for (long long i = 1; i <= r; ++i) {
                power = f.mul(power, f.from_int(t));
                a.push_back(power);
            }
            try {
                const bool condition = veronese_condition(f, a);
                const bool jumped = veronese_check(f, r, a);
                c.check("conforming-coordinates-jump", "veronese-generator-criterion",
                        condition && jumped, label + " t=" + std::to_string(t));
            } catch (const std::exception& ex) {
                c.check("veronese-operations-total", "veronese-generator-criterion", false,
                        label + ": " + ex.what());
            }
        }
        int made = 0;
        while (made < random_count) {
            std::vector<PrimeField::Elem> a;
            for (long long i = 0; i < r; ++i) a.push_back(f.sample(mix(seed, counter++)));
            if (veronese_condition(f, a)) continue;  // resample the measure-zero conforming draws
            try {
                c.check("perturbed-coordinates-generic", "veronese-generator-criterion",
                        !veronese_check(f, r, a), label + " sample " + std::to_string(made));
            } catch (const std::exception& ex) {
                c.check("veronese-operations-total", "veronese-generator-criterion", false,
                        label + ": " + ex.what());
            }
            ++made;
        }
    }
    return c.finish();
}

std::vector<CheckResult> suite_recursion(long long n_max) {
    Checker c("recursion");
    const RecursionReport rep = nested_recursion_verify(n_max);
    c.check("recursion-reproduces-closed-form", "grassmann-fiber-recursion", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());
    c.note("recursion-coverage", "grassmann-fiber-recursion",
           std::to_string(rep.checked) + " pairs (r, n) with n <= " + std::to_string(n_max));

    // invariant expected dimension along the nested chains
    const bool chain1 = *bn_global(1, 1).dim == 2 && *bn_global(2, 3).dim == 2 && *bn_global(3, 6).dim == 2;
    const bool chain2 = *bn_global(0, 1).dim == 4 && *bn_global(1, 2).dim == 4;
    c.check("expected-dimension-chains", "grassmann-fiber-recursion", chain1 && chain2, "");
    return c.finish();
}

}  // namespace bnhilb
