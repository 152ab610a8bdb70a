#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bnhilb/report.hpp"
#include "bnhilb/suites.hpp"

namespace {

using namespace bnhilb;

struct RunConfig {
    std::string field = "23";  // "rational" or a prime modulus
    std::uint64_t seed = 0;
    int cap = 0;  // 0 keeps the per-query default
    std::uint64_t budget = 100000000ULL;
    std::string output = "json";
};

bool field_is_rational(const RunConfig& cfg) { return cfg.field == "rational"; }

long long field_prime(const RunConfig& cfg) {
    long long p = 0;
    try {
        std::size_t used = 0;
        p = std::stoll(cfg.field, &used);
        if (used != cfg.field.size()) throw std::invalid_argument(cfg.field);
    } catch (const std::exception&) {
        throw domain_error("field: expected \"rational\" or a prime modulus, got \"" + cfg.field + "\"");
    }
    const PrimeField check(static_cast<std::uint64_t>(p));  // validates primality and range
    (void)check;
    return p;
}

// Minimal CSV splitter for our own output: fields are either bare or fully
// double-quoted with no embedded quotes.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

void print_csv_as_table(const std::string& csv, std::ostream& os) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) rows.push_back(split_csv_line(line));
    if (rows.empty()) return;
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << "\n";
    }
}

void emit_reports(const RunConfig& cfg, const std::vector<BNReport>& reps) {
    if (cfg.output == "csv") {
        std::cout << report_csv(reps);
    } else if (cfg.output == "table") {
        for (const auto& rep : reps) std::cout << report_text(rep) << "\n";
    } else if (reps.size() == 1) {
        std::cout << report_to_json(reps.front()).dump(2) << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reps) arr.push_back(report_to_json(rep));
        std::cout << arr.dump(2) << "\n";
    }
}

void emit_json_or_csv(const RunConfig& cfg, const ordered_json& j, const std::string& csv) {
    if (cfg.output == "csv")
        std::cout << csv;
    else if (cfg.output == "table")
        print_csv_as_table(csv, std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

int run_types(const RunConfig& cfg, long long n) {
    emit_json_or_csv(cfg, types_to_json(n), types_csv(n));
    return 0;
}

int run_stratum(const RunConfig& cfg, const std::string& type_arg, long long r) {
    const HSType type = validate_type(parse_list(type_arg));
    emit_reports(cfg, {bn_stratum(type, r)});
    return 0;
}

int run_bn(const RunConfig& cfg, bool local, long long n, std::optional<long long> r) {
    std::vector<BNReport> reps;
    if (r) {
        reps.push_back(local ? bn_local(*r, n) : bn_global(*r, n));
    } else {
        for (long long rr = 0;; ++rr) {
            BNReport rep = local ? bn_local(rr, n) : bn_global(rr, n);
            const bool nonempty = rep.nonempty;
            reps.push_back(std::move(rep));
            if (!nonempty) break;  // one empty row marks where the range ends
        }
    }
    emit_reports(cfg, reps);
    return 0;
}

int run_census(const RunConfig& cfg, const std::string& shape_arg, std::optional<long long> q,
               const std::string& export_path, bool fit) {
    const std::vector<long long> shape = parse_list(shape_arg);
    if (fit) {
        const auto rows = census_fit(shape, cfg.budget);
        if (cfg.output == "csv" || cfg.output == "table") {
            std::ostringstream os;
            os << "rank,count_q2,count_q3,count_q5,count_q7,fit_coefficients\n";
            for (const auto& row : rows) {
                os << row.rank;
                for (auto c : row.counts) os << "," << c;
                os << ",\"";
                for (std::size_t i = 0; i < row.coefficients.size(); ++i)
                    os << (i ? ";" : "") << row.coefficients[i];
                os << "\"\n";
            }
            if (cfg.output == "csv")
                std::cout << os.str();
            else
                print_csv_as_table(os.str(), std::cout);
        } else {
            std::cout << fit_to_json(shape, rows).dump(2) << "\n";
        }
        return 0;
    }
    if (!q) throw domain_error("census: --q is required unless --fit is given");
    const RankCensus c = census(shape, *q, cfg.budget);
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw domain_error("census: cannot open export path " + export_path);
        out << census_csv(c);
    }
    emit_json_or_csv(cfg, census_to_json(c), census_csv(c));
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite, std::optional<long long> n_max,
               std::optional<long long> low_char) {
    std::vector<CheckResult> results;
    auto add = [&results](std::vector<CheckResult> v) {
        results.insert(results.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    const bool all = (suite == "all");
    if (all || suite == "hstype") add(n_max ? suite_hstype(*n_max, *n_max) : suite_hstype());
    if (all || suite == "iarrobino") {
        if (field_is_rational(cfg)) {
            add(suite_iarrobino_rational(n_max ? *n_max : 5, 3, cfg.seed, cfg.cap));
        } else {
            add(suite_iarrobino(field_prime(cfg), n_max ? *n_max : 8, 20, cfg.seed, cfg.cap));
        }
        if (low_char) add(probe_iarrobino_low_char(*low_char, n_max ? *n_max : 8, 5, cfg.seed));
    }
    if (all || suite == "degloci")
        add(n_max ? suite_degloci(*n_max, 8, std::min<long long>(*n_max, 4), cfg.budget)
                  : suite_degloci(5, 8, 4, cfg.budget));
    if (all || suite == "bn") add(n_max ? suite_bn(*n_max) : suite_bn());
    if (all || suite == "veronese")
        add(n_max ? suite_veronese(101, std::max<long long>(*n_max, 2), 50, cfg.seed)
                  : suite_veronese(101, 5, 50, cfg.seed));
    if (all || suite == "recursion") add(n_max ? suite_recursion(*n_max) : suite_recursion());
    if (results.empty()) throw domain_error("verify: unknown suite \"" + suite + "\"");

    if (cfg.output == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            ordered_json j;
            j["suite"] = r.suite;
            j["name"] = r.name;
            j["ref"] = r.ref;
            j["pass"] = r.pass;
            if (!r.detail.empty()) j["detail"] = r.detail;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "suite,name,ref,pass,detail\n";
        for (const auto& r : results)
            std::cout << r.suite << "," << r.name << "," << r.ref << "," << (r.pass ? "true" : "false")
                      << ",\"" << r.detail << "\"\n";
    } else {
        int failed = 0;
        for (const auto& r : results) {
            if (!r.pass) ++failed;
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name << "  [" << r.ref
                      << "]";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
        std::cout << results.size() << " checks, " << failed << " failed\n";
    }
    return all_pass(results) ? 0 : 1;
}

int run_table(const RunConfig& cfg, const std::string& theorem, long long n_max) {
    emit_json_or_csv(cfg, table_json(theorem, n_max), table_csv(theorem, n_max));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brill-Noether loci in punctual Hilbert schemes: exact calculators and verifiers"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    RunConfig cfg;
    app.add_option("--field", cfg.field, "coefficient field: \"rational\" or a prime modulus")
        ->envname("BNHILB_FIELD")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "base seed for sampled checks")->capture_default_str();
    app.add_option("--cap", cfg.cap, "override the power-series truncation cap (0 = automatic)")
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "maximum number of census tuples")
        ->envname("BNHILB_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", cfg.output, "report format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();

    auto* cmd_types = app.add_subcommand("types", "enumerate Hilbert-Samuel types of colength n");
    long long types_n = 0;
    cmd_types->add_option("--n", types_n, "colength")->required()->check(CLI::PositiveNumber);

    auto* cmd_stratum = app.add_subcommand("stratum", "Brill-Noether locus inside one type's stratum");
    std::string stratum_type;
    long long stratum_r = 0;
    cmd_stratum->add_option("--type", stratum_type, "type as a comma list, e.g. 1,2,3,2,2")->required();
    cmd_stratum->add_option("--r", stratum_r, "rank: ideals needing at least r+1 generators")->required();

    auto* cmd_local = app.add_subcommand("bn-local", "local Brill-Noether locus at a fixed point");
    auto* cmd_global = app.add_subcommand("bn-global", "global Brill-Noether locus of pairs");
    long long bn_n = 0;
    std::optional<long long> bn_r;
    for (auto* cmd : {cmd_local, cmd_global}) {
        cmd->add_option("--n", bn_n, "colength")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--r", bn_r, "rank (omit for the whole table)");
    }

    auto* cmd_census = app.add_subcommand("census", "exhaustive rank census of shape-e matrices over F_q");
    std::string census_shape, census_export;
    std::optional<long long> census_q;
    bool census_do_fit = false;
    cmd_census->add_option("--shape", census_shape, "shape as a comma list, e.g. 1,2,2")->required();
    cmd_census->add_option("--q", census_q, "field size (prime)");
    cmd_census->add_option("--export", census_export, "write the census as CSV to this path");
    cmd_census->add_flag("--fit", census_do_fit,
                         "interpolate counts across q in {2,3,5,7}; reported, never asserted");

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites; exit 0 iff all pass");
    std::string verify_suite = "all";
    std::optional<long long> verify_n_max, verify_low_char;
    cmd_verify
        ->add_option("--suite", verify_suite, "which suite to run")
        ->check(CLI::IsMember({"hstype", "iarrobino", "degloci", "bn", "veronese", "recursion", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--n-max", verify_n_max, "override the suite's main size bound");
    cmd_verify->add_option("--low-char", verify_low_char,
                           "also probe the sampled charts at this small prime (observational)");

    auto* cmd_table = app.add_subcommand("table", "tabulate dimensions as JSON/CSV");
    std::string table_theorem;
    long long table_n_max = 0;
    cmd_table->add_option("--theorem", table_theorem, "which table")
        ->required()
        ->check(CLI::IsMember({"main", "local", "strata"}));
    cmd_table->add_option("--n-max", table_n_max, "largest colength")->required()->check(CLI::PositiveNumber);

    // global options remain usable after the subcommand name
    for (auto* cmd : app.get_subcommands({})) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*cmd_types) return run_types(cfg, types_n);
        if (*cmd_stratum) return run_stratum(cfg, stratum_type, stratum_r);
        if (*cmd_local) return run_bn(cfg, true, bn_n, bn_r);
        if (*cmd_global) return run_bn(cfg, false, bn_n, bn_r);
        if (*cmd_census) return run_census(cfg, census_shape, census_q, census_export, census_do_fit);
        if (*cmd_verify) return run_verify(cfg, verify_suite, verify_n_max, verify_low_char);
        if (*cmd_table) return run_table(cfg, table_theorem, table_n_max);
    } catch (const invariant_violation& e) {
        ordered_json diag;
        diag["error"] = "invariant-violation";
        diag["claim"] = e.claim;
        diag["detail"] = e.what();
        std::cout << diag.dump(2) << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        ordered_json diag;
        diag["error"] = "internal";
        diag["detail"] = e.what();
        std::cout << diag.dump(2) << "\n";
        return 1;
    }
    return 2;
}
