#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ncf/sieving.hpp"

namespace ncf::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the ncf-sieve command line. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Verifies each (n, k) cell on up to `workers` threads. Results come back
/// in the order of `cells` regardless of scheduling.
std::vector<CspReport> verify_cells(const std::vector<std::pair<int, int>>& cells, unsigned workers);

/// Brute-force size cap from NCF_SIEVE_MAX_N (default 12).
int brute_force_cap();

}  // namespace ncf::cli
