#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/modular_core.hpp"
#include "artin/period_lab.hpp"

namespace artin {

// Everything here revolves around the hit count
//
//   D(u) = sum_{j<=u} #{p <= x, p not dividing a : p | a^j - 1}
//        = sum_p floor(u / f_p),     f_p = ord_p(a),
//
// its exact three-term split, and two upper bounds with no hidden constants:
//
//   tight A per prime:  floor(u/f) f (1 + S_p) / p,     S_p = sum_i |eta_i|
//   tight B per prime:  floor(u/f) (2f + s_p B_p) / p,  s_p = |2 sin(pi f/p)|
//
// both of which dominate the prime's exact contribution floor(u/f) because
// p - f <= f S_p and p - f <= f + s_p B_p. The relaxed forms replace
// floor(u/f) f by u and s_p by 2 pi f / p; they are computed as the tight
// term plus a nonnegative increment so tight <= relaxed survives rounding.

struct OrderSweep {
    std::int64_t a = 0;
    std::uint64_t x = 0;
    std::vector<OrderRecord> records;  // ascending p, primes dividing a skipped
};

OrderSweep order_sweep(std::int64_t a, std::uint64_t x);

// D(u) as an exact integer.
std::int64_t exact_hit_total(std::uint64_t u, const OrderSweep& sweep);
std::int64_t exact_hit_total(std::int64_t a, std::uint64_t u, std::uint64_t x);

// The exact split D = T1 + T2 + Term3:
//   T1 = u sum_p 1/p, T2 = -sum_p (u mod f_p)/p, Term3 = sum_p floor(u/f_p)(p-f_p)/p.
struct HitSplit {
    double t1 = 0.0;
    double t2 = 0.0;
    double term3 = 0.0;
    double total() const { return t1 + t2 + term3; }
};

HitSplit split_hit_total(std::uint64_t u, const OrderSweep& sweep);
HitSplit split_hit_total(std::int64_t a, std::uint64_t u, std::uint64_t x);

// Per-prime period summary, independent of u. This is the row the parallel
// sweep produces; every aggregate below folds these in ascending p.
struct PrimeStats {
    std::uint64_t p = 0;
    std::uint64_t order = 0;
    std::uint64_t coset_count = 0;
    double sum_abs_period = 0.0;    // S_p
    double max_abs_period = 0.0;
    double abs_prefix_total = 0.0;  // B_p
    double c_emp = 0.0;             // max|eta| / sqrt(f log p)
    bool order_above_threshold = false;  // f > p^{1/3 + alpha}
    bool max_period_small = false;       // max|eta| < p^{-3 alpha/8} f (when above)
};

PrimeStats prime_stats(const PeriodSet& ps, const PartialSums& pp, double alpha);

// Serial reference path: stats for all p <= x, p not dividing a, ascending.
std::vector<PrimeStats> collect_prime_stats(std::int64_t a, std::uint64_t x, double alpha);

struct BoundPair {
    double tight = 0.0;
    double relaxed = 0.0;
};

BoundPair bound_a(std::uint64_t u, std::span<const PrimeStats> stats);
BoundPair bound_b(std::uint64_t u, std::span<const PrimeStats> stats);

// Mean-period inequality per prime: lhs = S_p / p against the
// Cauchy-Schwarz value sqrt(e_p (p - f_p)) / p, and against the weaker
// factored form sqrt(1/f - 1/p) sqrt(1 - f/p) which is NOT implied by
// Cauchy-Schwarz and numerically fails at (p,a) = (7,2); only holds_cs
// is ever asserted.
struct MeanPeriodBound {
    std::uint64_t p = 0;
    double mean_abs = 0.0;
    double cauchy_schwarz = 0.0;
    double factored = 0.0;
    bool holds_cs = false;
    bool holds_factored = false;
};

MeanPeriodBound mean_period_bound(const PeriodSet& ps);

// S(x) = sum_{p < x, p not dividing a} 1/f_p. Note the strict p < x.
double sum_reciprocal_orders(std::int64_t a, std::uint64_t x);

// W(x) = sum_{j < x} (#{p <= x : p | a^j - 1}) / j, evaluated without any
// factoring as sum_p sum_{j < x, f_p | j} 1/j.
double weighted_hit_sum(std::int64_t a, std::uint64_t x);

// N(j) = #{p < x, p not dividing a : f_p = j}.
std::map<std::uint64_t, std::uint64_t> order_histogram(std::int64_t a, std::uint64_t x);

// The chain S(x) <= sum_j N(j)/j <= sum_{j<x} omega_x(Phi_j(a))/j <= W(x),
// every term an exact rational. The third term is the only one that needs
// big integers; keep x modest (tests use x <= 200).
struct ChainCheck {
    boost::multiprecision::cpp_rational s_x;
    boost::multiprecision::cpp_rational histogram_sum;
    boost::multiprecision::cpp_rational cyclotomic_sum;
    boost::multiprecision::cpp_rational w_x;
    bool ok = false;
};

ChainCheck chain_check(std::int64_t a, std::uint64_t x);

inline constexpr double artin_reference = 0.374;

struct DensityStats {
    std::int64_t a = 0;
    std::uint64_t x = 0;
    std::uint64_t pi_x = 0;              // primes <= x
    std::uint64_t counted = 0;           // of those, p not dividing a
    std::uint64_t primitive_count = 0;   // f_p = p - 1
    double primitive_fraction = 0.0;
    double fraction_order_gt_sqrt = 0.0;    // f_p > sqrt(p), exact integer test
    double fraction_order_gt_34 = 0.0;      // f_p > p^{3/4}, exact integer test
    double recip_sum_order_gt_34 = 0.0;     // sum 1/f_p over those primes
    double x_quarter_over_log = 0.0;        // x^{1/4} / log x, for comparison
    bool small_sample = false;              // counted < 100
};

DensityStats density_report(std::int64_t a, std::uint64_t x);

struct ReferenceCurves {
    double x = 0.0;
    double u = 0.0;
    double delta = 0.0;
    double sqrt_x_log_power = 0.0;   // sqrt(x) / (log x)^{1+delta}
    double x_quarter = 0.0;          // x^{1/4}
    double u_x_quarter = 0.0;        // u x^{1/4}
    double u_x_quarter_per_log = 0.0;
    double log_x = 0.0;
};

// Requires x >= 3 and delta > 0.
ReferenceCurves reference_curves(double x, double u, double delta);

// Largest observed c_emp across a set of per-prime rows.
double max_c_emp(std::span<const PrimeStats> stats);

}  // namespace artin
