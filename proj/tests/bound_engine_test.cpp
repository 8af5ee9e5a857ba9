#include <doctest.h>

#include "artin/bound_engine.hpp"
#include "artin/integer_oracle.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

using namespace artin;
using doctest::Approx;
using boost::multiprecision::cpp_rational;

TEST_CASE("exact_hit_total known values") {
    CHECK(exact_hit_total(2, 4, 10) == 4);
    CHECK(exact_hit_total(2, 1, 10) == 0);
    CHECK(exact_hit_total(3, 2, 10) == 2);
    CHECK(exact_hit_total(2, 100, 1000) == 309);
}

TEST_CASE("exact_hit_total agrees with the big-integer oracle on a small grid") {
    for (std::int64_t a : {2, 3, 10}) {
        const OrderSweep sweep = order_sweep(a, 100);
        for (std::uint64_t u = 1; u <= 20; ++u) {
            CHECK(exact_hit_total(u, sweep) ==
                  static_cast<std::int64_t>(oracle::hit_total(a, u, 100)));
        }
    }
}

TEST_CASE("order_sweep skips primes dividing a") {
    const OrderSweep sweep = order_sweep(10, 30);
    for (const auto& rec : sweep.records) {
        CHECK(rec.p != 2);
        CHECK(rec.p != 5);
    }
    CHECK(sweep.records.size() == 8);  // pi(30) = 10, minus p = 2, 5
}

TEST_CASE("split_hit_total reproduces the worked example") {
    const HitSplit s = split_hit_total(2, 4, 10);
    CHECK(s.t1 == Approx(2.7047619047619049).epsilon(1e-12));
    CHECK(s.t2 == Approx(-0.14285714285714285).epsilon(1e-12));
    CHECK(s.term3 == Approx(1.4380952380952381).epsilon(1e-12));
    CHECK(s.total() == Approx(4.0).epsilon(1e-12));
}

TEST_CASE("split_hit_total edge cases") {
    // u = 1, a = 2: every floor(u/f) = 0, and T2 = -T1 term by term,
    // so the compensated folds cancel exactly.
    const HitSplit z = split_hit_total(2, 1, 10);
    CHECK(z.term3 == 0.0);
    CHECK(z.total() == 0.0);

    const HitSplit s = split_hit_total(3, 2, 10);
    CHECK(s.total() == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("split identity holds across a grid") {
    for (std::int64_t a : {2, 3, 5, 6, 7, 10}) {
        const OrderSweep sweep = order_sweep(a, 200);
        for (std::uint64_t u = 1; u <= 30; ++u) {
            const double d = static_cast<double>(exact_hit_total(u, sweep));
            const HitSplit s = split_hit_total(u, sweep);
            CHECK(std::fabs(s.total() - d) <= 1e-6 * std::max(1.0, d));
        }
    }
}

TEST_CASE("bound_a reproduces the worked example") {
    const auto stats = collect_prime_stats(2, 10, 0.1);
    const BoundPair b = bound_a(4, stats);
    CHECK(b.tight == Approx(5.907421148700748).epsilon(1e-12));
    CHECK(b.relaxed == Approx(6.3114821665216319).epsilon(1e-12));
    CHECK(static_cast<double>(exact_hit_total(2, 4, 10)) <= b.tight);
    CHECK(b.tight <= b.relaxed);
}

TEST_CASE("bound_b reproduces the worked example") {
    const auto stats = collect_prime_stats(2, 10, 0.1);
    const BoundPair b = bound_b(4, stats);
    CHECK(b.tight == Approx(11.139796749243116).epsilon(1e-12));
    CHECK(b.relaxed == Approx(20.444861009495419).epsilon(1e-12));
    CHECK(static_cast<double>(exact_hit_total(2, 4, 10)) <= b.tight);
    CHECK(b.tight <= b.relaxed);
}

TEST_CASE("bound_a is exact when every contributing order is 1") {
    // a = 7, u = 1, x = 10: p = 2 and p = 3 have order 1 and weight 1,
    // p = 5 has order 4 and weight 0. The tight bound collapses to D = 2.
    const auto stats = collect_prime_stats(7, 10, 0.1);
    CHECK(exact_hit_total(7, 1, 10) == 2);
    const BoundPair a = bound_a(1, stats);
    CHECK(a.tight == 2.0);
    CHECK(a.relaxed > a.tight);  // p = 5 contributes a remainder increment
    const BoundPair b = bound_b(1, stats);
    CHECK(2.0 <= b.tight);
    CHECK(b.tight <= b.relaxed);
}

TEST_CASE("bound ordering D <= tight <= relaxed across a grid") {
    for (std::int64_t a : {2, 3, 10}) {
        for (std::uint64_t x : {10ull, 50ull}) {
            const auto stats = collect_prime_stats(a, x, 0.1);
            const OrderSweep sweep = order_sweep(a, x);
            for (std::uint64_t u = 1; u <= 20; ++u) {
                const double d = static_cast<double>(exact_hit_total(u, sweep));
                const BoundPair ba = bound_a(u, stats);
                const BoundPair bb = bound_b(u, stats);
                CAPTURE(a);
                CAPTURE(x);
                CAPTURE(u);
                CHECK(d <= ba.tight);
                CHECK(ba.tight <= ba.relaxed);
                CHECK(d <= bb.tight);
                CHECK(bb.tight <= bb.relaxed);
            }
        }
    }
}

TEST_CASE("per-prime validity inequalities behind the bounds") {
    for (const PrimeStats& st : collect_prime_stats(2, 100, 0.1)) {
        const double p = static_cast<double>(st.p);
        const double f = static_cast<double>(st.order);
        const double s = std::fabs(2.0 * std::sin(std::numbers::pi * f / p));
        const double tol = 1e-9 * p;
        CHECK(p - f <= f * st.sum_abs_period + tol);
        CHECK(p - f <= f + s * st.abs_prefix_total + tol);
    }
}

TEST_CASE("prime_stats flags at alpha = 0.1 for a = 2, x = 10") {
    const auto stats = collect_prime_stats(2, 10, 0.1);
    REQUIRE(stats.size() == 3);
    for (const PrimeStats& st : stats) {
        CHECK(st.order_above_threshold);
        CHECK(st.max_period_small);
        CHECK(st.c_emp > 0.0);
    }
    CHECK(stats[2].p == 7);
    CHECK(stats[2].sum_abs_period == Approx(2.8284271247461903).epsilon(1e-12));
    CHECK(stats[2].abs_prefix_total == Approx(12.387692602220875).epsilon(1e-12));
    CHECK(max_c_emp(stats) > 0.0);
}

TEST_CASE("mean period bound at 7, 2: Cauchy-Schwarz equality, factored fails") {
    const MeanPeriodBound m = mean_period_bound(compute_periods(7, 2));
    CHECK(m.mean_abs == Approx(0.40406101782088433).epsilon(1e-12));
    CHECK(m.cauchy_schwarz == Approx(0.40406101782088433).epsilon(1e-12));
    CHECK(std::fabs(m.mean_abs - m.cauchy_schwarz) <= 1e-9);
    CHECK(m.factored == Approx(0.32991443953692901).epsilon(1e-12));
    CHECK(m.holds_cs);
    CHECK(!m.holds_factored);
}

TEST_CASE("mean period bound degenerate equalities") {
    const MeanPeriodBound m5 = mean_period_bound(compute_periods(5, 2));
    CHECK(m5.mean_abs == Approx(0.2).epsilon(1e-12));
    CHECK(m5.cauchy_schwarz == 0.2);
    CHECK(m5.holds_cs);

    const MeanPeriodBound m2 = mean_period_bound(compute_periods(2, 3));
    CHECK(m2.mean_abs == 0.5);
    CHECK(m2.cauchy_schwarz == 0.5);
    CHECK(m2.holds_cs);
}

TEST_CASE("Cauchy-Schwarz holds for every small prime, equality when e = 1") {
    const auto primes = sieve_primes(300);
    for (std::int64_t a : {2, 3, 5, 6, 7, 10}) {
        for (const std::uint64_t p : primes) {
            if (static_cast<std::uint64_t>(a) % p == 0) continue;
            const PeriodSet ps = compute_periods(p, a);
            const MeanPeriodBound m = mean_period_bound(ps);
            CAPTURE(p);
            CAPTURE(a);
            CHECK(m.holds_cs);
            if (ps.rec.coset_count == 1) {
                CHECK(std::fabs(m.mean_abs - m.cauchy_schwarz) <= 1e-9);
            }
        }
    }
}

TEST_CASE("sum_reciprocal_orders uses a strict upper limit") {
    CHECK(sum_reciprocal_orders(2, 10) == Approx(13.0 / 12.0).epsilon(1e-12));
    CHECK(sum_reciprocal_orders(2, 3) == 0.0);   // p = 2 divides a, p = 3 excluded
    CHECK(sum_reciprocal_orders(3, 10) == Approx(17.0 / 12.0).epsilon(1e-12));
    // x = 11 now includes p = 7's neighbor? No: includes nothing new below 11
    // except that 7 < 11 already counted; 11 itself is excluded.
    CHECK(sum_reciprocal_orders(2, 11) == Approx(13.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("weighted_hit_sum known values") {
    CHECK(weighted_hit_sum(2, 10) == Approx(73.0 / 36.0).epsilon(1e-12));
    CHECK(weighted_hit_sum(2, 3) == 0.5);
    CHECK(weighted_hit_sum(3, 10) == Approx(4247.0 / 1260.0).epsilon(1e-12));
    CHECK(weighted_hit_sum(2, 10) >= sum_reciprocal_orders(2, 10));
}

TEST_CASE("order_histogram known values") {
    const auto h10 = order_histogram(2, 10);
    REQUIRE(h10.size() == 3);
    CHECK(h10.at(2) == 1);
    CHECK(h10.at(3) == 1);
    CHECK(h10.at(4) == 1);
    CHECK(order_histogram(2, 3).empty());
    const auto h12 = order_histogram(2, 12);
    CHECK(h12.size() == 4);
    CHECK(h12.at(10) == 1);
}

TEST_CASE("histogram counts every prime below x exactly once") {
    for (std::int64_t a : {2, 3, 10}) {
        const auto hist = order_histogram(a, 500);
        std::uint64_t total = 0;
        for (const auto& [f, n] : hist) total += n;
        std::uint64_t expected = 0;
        for (std::uint64_t p : sieve_primes(500)) {
            if (p < 500 && static_cast<std::uint64_t>(a) % p != 0) ++expected;
        }
        CHECK(total == expected);
    }
}

TEST_CASE("chain_check exact rationals for a = 2, x = 10") {
    const ChainCheck c = chain_check(2, 10);
    CHECK(c.s_x == cpp_rational(13, 12));
    CHECK(c.histogram_sum == cpp_rational(13, 12));
    CHECK(c.cyclotomic_sum == cpp_rational(5, 4));
    CHECK(c.w_x == cpp_rational(73, 36));
    CHECK(c.ok);
}

TEST_CASE("chain_check across bases and ranges") {
    for (std::int64_t a : {2, 3, 5}) {
        for (std::uint64_t x : {10ull, 50ull}) {
            CAPTURE(a);
            CAPTURE(x);
            CHECK(chain_check(a, x).ok);
        }
    }
    CHECK(chain_check(3, 10).s_x == cpp_rational(17, 12));
    CHECK(chain_check(3, 10).w_x == cpp_rational(4247, 1260));
    CHECK_THROWS_AS(chain_check(1, 10), std::domain_error);
}

TEST_CASE("density_report for a = 2, x = 10") {
    const DensityStats d = density_report(2, 10);
    CHECK(d.pi_x == 4);
    CHECK(d.counted == 3);
    CHECK(d.primitive_count == 2);
    CHECK(d.primitive_fraction == Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(d.fraction_order_gt_sqrt == 1.0);
    CHECK(d.fraction_order_gt_34 == Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(d.recip_sum_order_gt_34 == 0.25);
    CHECK(d.small_sample);
}

TEST_CASE("density_report for a square base has no primitive roots") {
    const DensityStats d = density_report(4, 1000);
    CHECK(d.counted == 167);  // pi(1000) = 168 minus p = 2
    CHECK(d.primitive_count == 0);
    CHECK(d.primitive_fraction == 0.0);
    CHECK(!d.small_sample);
    CHECK_THROWS_AS(density_report(2, 2), std::domain_error);
}

TEST_CASE("reference_curves worked values") {
    const ReferenceCurves c16 = reference_curves(16.0, 1.0, 1.0);
    CHECK(c16.sqrt_x_log_power == Approx(0.52034224525140194).epsilon(1e-12));
    CHECK(c16.x_quarter == 2.0);

    const ReferenceCurves c = reference_curves(1e4, 10.0, 0.1);
    CHECK(c.sqrt_x_log_power == Approx(8.6955438994964727).epsilon(1e-12));
    CHECK(c.x_quarter == 10.0);
    CHECK(c.u_x_quarter == 100.0);
    CHECK(c.log_x == Approx(9.2103403719761836).epsilon(1e-12));
    CHECK(c.u_x_quarter_per_log == Approx(100.0 / 9.2103403719761836).epsilon(1e-12));

    CHECK_THROWS_AS(reference_curves(2.9, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(reference_curves(100.0, 1.0, 0.0), std::domain_error);
}
