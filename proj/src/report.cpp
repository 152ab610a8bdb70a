#include "bnhilb/report.hpp"

#include <sstream>

#include "bnhilb/errors.hpp"
#include "bnhilb/iarrobino.hpp"

namespace bnhilb {

ordered_json report_to_json(const BNReport& rep) {
    ordered_json query;
    query["level"] = rep.level;
    query["r"] = rep.r;
    query["n"] = rep.n;
    if (rep.type_t) query["type"] = *rep.type_t;

    ordered_json j;
    j["query"] = query;
    j["nonempty"] = rep.nonempty;
    if (rep.dim)
        j["dim"] = *rep.dim;
    else
        j["dim"] = "empty";
    j["tight"] = rep.tight;
    if (rep.witness) j["witness"] = *rep.witness;
    j["refs"] = rep.refs;
    return j;
}

BNReport report_from_json(const ordered_json& j) {
    BNReport rep;
    const auto& query = j.at("query");
    rep.level = query.at("level").get<std::string>();
    rep.r = query.at("r").get<long long>();
    rep.n = query.at("n").get<long long>();
    if (query.contains("type")) rep.type_t = query.at("type").get<std::vector<long long>>();
    rep.nonempty = j.at("nonempty").get<bool>();
    if (j.at("dim").is_number_integer()) rep.dim = j.at("dim").get<long long>();
    rep.tight = j.at("tight").get<bool>();
    if (j.contains("witness")) rep.witness = j.at("witness").get<std::string>();
    rep.refs = j.at("refs").get<std::vector<std::string>>();
    return rep;
}

bool reports_equal(const BNReport& a, const BNReport& b) {
    return a.level == b.level && a.type_t == b.type_t && a.r == b.r && a.n == b.n &&
           a.nonempty == b.nonempty && a.dim == b.dim && a.tight == b.tight && a.witness == b.witness &&
           a.refs == b.refs;
}

std::string report_text(const BNReport& rep) {
    std::ostringstream os;
    os << rep.level << " locus, r=" << rep.r << ", n=" << rep.n;
    if (rep.type_t) os << ", type=(" << format_list(*rep.type_t) << ")";
    os << ": ";
    if (!rep.nonempty) {
        os << "empty";
    } else {
        os << "nonempty, dim " << *rep.dim << (rep.tight ? " (bound attained)" : "");
        if (rep.witness) os << "; " << *rep.witness;
    }
    return os.str();
}

std::string report_csv(const std::vector<BNReport>& reps) {
    std::ostringstream os;
    os << "level,type,r,n,nonempty,dim,tight\n";
    for (const auto& rep : reps) {
        os << rep.level << ",\"" << (rep.type_t ? format_list(*rep.type_t) : "") << "\"," << rep.r << ","
           << rep.n << "," << (rep.nonempty ? 1 : 0) << ",";
        if (rep.dim)
            os << *rep.dim;
        else
            os << "empty";
        os << "," << (rep.tight ? 1 : 0) << "\n";
    }
    return os.str();
}

ordered_json strata_to_json(long long r, long long n,
                            const std::vector<std::pair<long long, long long>>& strata) {
    ordered_json rows = ordered_json::array();
    for (const auto& [m, dim] : strata) {
        ordered_json row;
        row["multiplicity"] = m;
        row["dim"] = dim;
        rows.push_back(row);
    }
    ordered_json j;
    j["query"] = {{"level", "multiplicity-strata"}, {"r", r}, {"n", n}};
    j["strata"] = rows;
    return j;
}

ordered_json census_to_json(const RankCensus& c) {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, count] : c.counts) {
        ordered_json row;
        row["rank"] = key.rank;
        row["pivots"] = key.pivots;
        row["count"] = count;
        rows.push_back(row);
    }
    ordered_json j;
    j["query"] = {{"level", "census"}, {"shape", c.shape}, {"q", c.q}};
    j["d"] = c.d;
    j["free_cells"] = c.free_cells;
    j["total"] = c.total();
    j["classes"] = rows;
    return j;
}

ordered_json fit_to_json(const std::vector<long long>& shape, const std::vector<FitRow>& rows) {
    ordered_json out;
    out["query"] = {{"level", "census-fit"}, {"shape", shape}, {"q", {2, 3, 5, 7}}};
    ordered_json jr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["rank"] = row.rank;
        r["counts"] = row.counts;
        r["poly_in_q"] = row.coefficients;
        jr.push_back(r);
    }
    out["fits"] = jr;
    out["note"] = "interpolation through four points; reported, not asserted";
    return out;
}

namespace {

ordered_json table_rows(const std::string& kind, long long n_max) {
    ordered_json rows = ordered_json::array();
    if (kind == "main") {
        for (long long n = 0; n <= n_max; ++n)
            for (long long r = 0; r <= n + 1; ++r) {
                const BNReport rep = bn_global(r, n);
                ordered_json row;
                row["n"] = n;
                row["r"] = r;
                row["rho"] = 2 * n + 2 - r * (r + 1);
                row["nonempty"] = rep.nonempty;
                if (rep.dim)
                    row["dim"] = *rep.dim;
                else
                    row["dim"] = "empty";
                rows.push_back(row);
            }
    } else if (kind == "local") {
        for (long long n = 1; n <= n_max; ++n)
            for (long long r = 0; r <= n + 1; ++r) {
                const BNReport rep = bn_local(r, n);
                ordered_json row;
                row["n"] = n;
                row["r"] = r;
                row["rho_loc"] = n - r * (r + 1) / 2;
                row["nonempty"] = rep.nonempty;
                if (rep.dim)
                    row["dim"] = *rep.dim;
                else
                    row["dim"] = "empty";
                rows.push_back(row);
            }
    } else if (kind == "strata") {
        for (long long n = 1; n <= n_max; ++n)
            for (const HSType& type : enumerate_types(n)) {
                const JumpVector jumps = jumping_indices(type);
                const NormalPattern pattern = partition_from_type(type);
                const BetaDims dims = beta_dims(type);
                for (long long r = 0; r <= type.d; ++r) {
                    const BNReport rep = bn_stratum(type, r);
                    if (!rep.nonempty) continue;
                    ordered_json row;
                    row["n"] = n;
                    row["type"] = type.t;
                    row["partition"] = pattern.k;
                    row["shape"] = jumps.shape_parts();
                    row["order"] = type.d;
                    row["dim_stratum"] = dims.n_t;
                    row["r"] = r;
                    row["dim"] = *rep.dim;
                    row["tight"] = rep.tight;
                    rows.push_back(row);
                }
            }
    } else {
        throw domain_error("table: unknown kind '" + kind + "'");
    }
    return rows;
}

}  // namespace

ordered_json table_json(const std::string& kind, long long n_max) {
    ordered_json j;
    j["query"] = {{"level", "table"}, {"kind", kind}, {"n_max", n_max}};
    j["rows"] = table_rows(kind, n_max);
    return j;
}

std::string table_csv(const std::string& kind, long long n_max) {
    const ordered_json rows = table_rows(kind, n_max);
    std::ostringstream os;
    if (kind == "strata") {
        os << "n,type,partition,shape,order,dim_stratum,r,dim,tight\n";
        for (const auto& row : rows)
            os << row["n"] << ",\"" << format_list(row["type"].get<std::vector<long long>>()) << "\",\""
               << format_list(row["partition"].get<std::vector<long long>>()) << "\",\""
               << format_list(row["shape"].get<std::vector<long long>>()) << "\"," << row["order"] << ","
               << row["dim_stratum"] << "," << row["r"] << "," << row["dim"] << ","
               << (row["tight"].get<bool>() ? 1 : 0) << "\n";
    } else {
        const std::string rho_key = (kind == "main") ? "rho" : "rho_loc";
        os << "n,r," << rho_key << ",nonempty,dim\n";
        for (const auto& row : rows) {
            os << row["n"] << "," << row["r"] << "," << row[rho_key] << ","
               << (row["nonempty"].get<bool>() ? 1 : 0) << ",";
            if (row["dim"].is_number_integer())
                os << row["dim"];
            else
                os << "empty";
            os << "\n";
        }
    }
    return os.str();
}

ordered_json types_to_json(long long n) {
    ordered_json rows = ordered_json::array();
    for (const HSType& type : enumerate_types(n)) {
        const JumpVector jumps = jumping_indices(type);
        const BetaDims dims = beta_dims(type);
        ordered_json row;
        row["type"] = type.t;
        row["partition"] = partition_from_type(type).k;
        row["order"] = type.d;
        row["shape"] = jumps.shape_parts();
        row["dim_stratum"] = dim_stratum(type);
        row["free_constants"] = dims.n_e;
        rows.push_back(row);
    }
    ordered_json j;
    j["query"] = {{"level", "types"}, {"n", n}};
    j["types"] = rows;
    return j;
}

std::string types_csv(long long n) {
    std::ostringstream os;
    os << "n,type,partition,order,shape,dim_stratum,free_constants\n";
    for (const HSType& type : enumerate_types(n)) {
        const JumpVector jumps = jumping_indices(type);
        const BetaDims dims = beta_dims(type);
        os << n << ",\"" << format_list(type.t) << "\",\"" << format_list(partition_from_type(type).k)
           << "\"," << type.d << ",\"" << format_list(jumps.shape_parts()) << "\"," << dim_stratum(type)
           << "," << dims.n_e << "\n";
    }
    return os.str();
}

}  // namespace bnhilb
