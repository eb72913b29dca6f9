#pragma once

#include "hardy/catalog.hpp"
#include "hardy/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hardy::report {

struct RunConfig {
    std::vector<std::string> cases;
    int order = 4096;
    unsigned precision = 128;
    std::size_t samples = 100000;
    double eps = 1e-4;
    std::uint64_t seed = 1;
    std::string mode = "series-only"; // series-only | oracle-only | full
    double tolerance = 1e-6;          // relative to the closed form
    int square_m = 2000;              // double-sum truncation for the square target
    std::string json_path;            // empty: do not write
    std::string csv_path;
};

struct TailInfo {
    bool available = false;
    std::string note;      // why the fit is unavailable, empty otherwise
    Real fitted_exponent;
    Real tail_estimate;
    Real tail_bound;
    std::size_t window_lo = 0, window_hi = 0;
    bool diverges = false;
};

struct OracleInfo {
    oracle::ExitMoments moments;
    Real g_base;        // closed-form expected exit functional at the base point
    double base_sq = 0; // squared modulus of the base point
    bool g_ok = false;      // two_mean_time agrees with g_base
    bool dynkin_ok = false; // mean_sq_exit agrees with base_sq + two_mean_time
};

struct CaseReport {
    std::string id;
    std::string statement;
    bool diagnostic = false;
    Real lhs_partial;
    Real rhs;
    Real abs_err;
    Real rel_err;
    TailInfo tail;
    std::optional<OracleInfo> oracle;
    std::string verdict; // pass | fail | diverges | skipped
    double series_ms = 0, oracle_ms = 0;
    // per-term trace for the CSV output
    std::vector<long> n;
    std::vector<Real> terms;
};

// Validates the config, sets the run precision, evaluates every case.
// Throws std::invalid_argument on bad config or unknown case ids.
std::vector<CaseReport> run(const RunConfig& config);

// 0 iff no case reports verdict "fail".
int exit_status(const std::vector<CaseReport>& reports);

void write_json(const RunConfig& config, const std::vector<CaseReport>& reports,
                std::ostream& os);
void write_csv(const std::vector<CaseReport>& reports, std::ostream& os);

// Decimal rendering at full run precision (used for all Real JSON fields).
std::string to_dec_string(const Real& v);

} // namespace hardy::report
