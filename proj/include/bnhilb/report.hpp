#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bnhilb/bn.hpp"
#include "bnhilb/degloci.hpp"

namespace bnhilb {

using ordered_json = nlohmann::ordered_json;

// Schema: {query: {level, r, n, type?}, nonempty, dim, tight, witness?, refs}.
// dim is an integer when the locus is nonempty and the string "empty"
// otherwise; serialization round-trips exactly.
ordered_json report_to_json(const BNReport& rep);
BNReport report_from_json(const ordered_json& j);

bool reports_equal(const BNReport& a, const BNReport& b);

std::string report_text(const BNReport& rep);
std::string report_csv(const std::vector<BNReport>& reps);

ordered_json strata_to_json(long long r, long long n,
                            const std::vector<std::pair<long long, long long>>& strata);

ordered_json census_to_json(const RankCensus& c);
ordered_json fit_to_json(const std::vector<long long>& shape, const std::vector<FitRow>& rows);

// Tabulations offered by the CLI: the global dimension table, the local
// table, and the per-type stratum table.
ordered_json table_json(const std::string& kind, long long n_max);
std::string table_csv(const std::string& kind, long long n_max);

ordered_json types_to_json(long long n);
std::string types_csv(long long n);

}  // namespace bnhilb
