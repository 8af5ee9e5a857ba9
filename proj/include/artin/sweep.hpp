#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/bound_engine.hpp"
#include "artin/report_io.hpp"

namespace artin {

struct SweepConfig {
    std::int64_t a = 2;
    std::uint64_t x = 100;
    std::uint64_t u = 10;
    std::vector<std::uint64_t> u_grid;  // empty means {u}
    double delta = 0.1;
    double alpha = 0.1;
    double tolerance_scale = 1e-8;  // per-prime tolerance is tolerance_scale * p
    int threads = 0;                // 0 = runtime default
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty = stdout
    std::uint64_t oracle_cap_u = 64;
    std::uint64_t oracle_cap_x = 10000;
};

// Returns human-readable warnings (square base, base below 2); throws
// std::invalid_argument for violations that make the run meaningless
// (x < 2, u < 1, u > x, bad grid, bad delta/alpha/tolerance/threads).
std::vector<std::string> validate_config(const SweepConfig& cfg);

std::vector<std::uint64_t> effective_u_grid(const SweepConfig& cfg);

// Aggregates for one u. All real fields come from ascending-p compensated
// folds, so they are independent of how the per-prime rows were produced.
struct SweepAggregates {
    std::uint64_t u = 0;
    std::int64_t d_exact = 0;
    double t1 = 0.0;
    double t2 = 0.0;
    double term3 = 0.0;
    BoundPair a_bound;
    BoundPair b_bound;
    double s_x = 0.0;
    double w_x = 0.0;
    bool b_lt_a = false;  // tight B below tight A at this u
    double u_x_quarter = 0.0;
    double ratio_a = 0.0;  // tight A / (u x^{1/4})
    double ratio_b = 0.0;
};

struct BoundReport {
    // Config echo. threads/format/out are deliberately absent: emitted
    // payloads must be identical no matter how the work was scheduled.
    std::int64_t a = 0;
    std::uint64_t x = 0;
    double delta = 0.0;
    double alpha = 0.0;
    std::vector<PrimeStats> stats;      // ascending p
    std::vector<SweepAggregates> aggs;  // one per grid u, ascending
    bool has_curves = false;            // curves need x >= 3
    ReferenceCurves curves;
    double c_emp_max = 0.0;
    double b_lt_a_fraction = 0.0;  // share of grid points with tight B < tight A
};

// Parallel per-prime sweep (OpenMP over primes) with a deterministic
// ascending-p fold. run_sweep_serial is the plain-loop reference; the two
// must produce bit-identical reports.
BoundReport run_sweep(const SweepConfig& cfg);
BoundReport run_sweep_serial(const SweepConfig& cfg);

// Flattens a report to output records: per-prime "rows" (hit fields use
// cfg.u), one "agg" per grid u, one "curve" when present.
std::vector<OutputRecord> report_records(const BoundReport& rep, std::uint64_t primary_u);

struct VerifyReport {
    std::vector<OutputRecord> records;  // kind "residual"
    bool all_pass = false;
};

// The full verification suite: per-prime identities, the h permutation,
// the mean-period inequality, the exact split, oracle equivalence within
// the configured caps, order-divisibility agreement, the rational chain,
// bound orderings, and the trigonometric majorant. Requires a >= 2 (the
// oracle routes need a real base).
VerifyReport run_verify(const SweepConfig& cfg);

}  // namespace artin
