#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bnhilb {

// One verified claim: pass/fail plus the claim identifier it certifies.
// Failures carry enough detail to reproduce the offending case.
struct CheckResult {
    std::string suite;
    std::string name;
    std::string ref;
    bool pass = true;
    std::string detail;
};

std::vector<CheckResult> suite_hstype(long long n_max = 16, long long roundtrip_n_max = 20);
std::vector<CheckResult> suite_iarrobino(long long p = 23, long long n_max = 8, int samples = 20,
                                         std::uint64_t seed = 0, int cap_override = 0);
// Same checks over exact rationals; smaller defaults, entries grow quickly.
std::vector<CheckResult> suite_iarrobino_rational(long long n_max = 5, int samples = 3,
                                                  std::uint64_t seed = 0, int cap_override = 0);
// Observational run for small characteristic: reports mismatches, never fails.
std::vector<CheckResult> probe_iarrobino_low_char(long long p, long long n_max = 8, int samples = 5,
                                                  std::uint64_t seed = 0);
std::vector<CheckResult> suite_degloci(long long d_max = 5, long long grassmann_d_max = 8,
                                       long long growth_d_max = 4, std::uint64_t budget = 100000000ULL);
std::vector<CheckResult> suite_bn(long long n_max = 12);
std::vector<CheckResult> suite_veronese(long long p = 101, long long r_max = 5, int random_count = 50,
                                        std::uint64_t seed = 0);
std::vector<CheckResult> suite_recursion(long long n_max = 30);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace bnhilb
