#include "artin/bound_engine.hpp"

#include <cmath>
#include <numbers>

#include "artin/integer_oracle.hpp"
#include "artin/kahan.hpp"

namespace artin {

OrderSweep order_sweep(std::int64_t a, std::uint64_t x) {
    OrderSweep sweep;
    sweep.a = a;
    sweep.x = x;
    for (std::uint64_t p : sieve_primes(x)) {
        if (reduce_mod(a, p) == 0) continue;
        sweep.records.push_back(make_order_record(a, p));
    }
    return sweep;
}

std::int64_t exact_hit_total(std::uint64_t u, const OrderSweep& sweep) {
    std::int64_t total = 0;
    for (const auto& rec : sweep.records)
        total += static_cast<std::int64_t>(u / rec.order);
    return total;
}

std::int64_t exact_hit_total(std::int64_t a, std::uint64_t u, std::uint64_t x) {
    return exact_hit_total(u, order_sweep(a, x));
}

HitSplit split_hit_total(std::uint64_t u, const OrderSweep& sweep) {
    CompensatedSum t1, t2, t3;
    const double du = static_cast<double>(u);
    for (const auto& rec : sweep.records) {
        const double dp = static_cast<double>(rec.p);
        const std::uint64_t w = u / rec.order;
        const std::uint64_t rem = u % rec.order;
        t1.add(du / dp);
        t2.add(-(static_cast<double>(rem) / dp));
        t3.add(static_cast<double>(w * (rec.p - rec.order)) / dp);
    }
    return {t1.value(), t2.value(), t3.value()};
}

HitSplit split_hit_total(std::int64_t a, std::uint64_t u, std::uint64_t x) {
    return split_hit_total(u, order_sweep(a, x));
}

PrimeStats prime_stats(const PeriodSet& ps, const PartialSums& pp, double alpha) {
    PrimeStats st;
    st.p = ps.p;
    st.order = ps.rec.order;
    st.coset_count = ps.rec.coset_count;
    st.sum_abs_period = sum_abs_periods(ps);
    st.max_abs_period = max_abs_period(ps);
    st.abs_prefix_total = pp.abs_prefix_total;
    const double dp = static_cast<double>(ps.p);
    const double df = static_cast<double>(st.order);
    st.c_emp = st.max_abs_period / std::sqrt(df * std::log(dp));
    st.order_above_threshold = df > std::pow(dp, 1.0 / 3.0 + alpha);
    st.max_period_small = st.order_above_threshold &&
                          st.max_abs_period < std::pow(dp, -3.0 * alpha / 8.0) * df;
    return st;
}

std::vector<PrimeStats> collect_prime_stats(std::int64_t a, std::uint64_t x, double alpha) {
    std::vector<PrimeStats> out;
    for (std::uint64_t p : sieve_primes(x)) {
        if (reduce_mod(a, p) == 0) continue;
        PeriodSet ps = compute_periods(p, a);
        PartialSums pp = partial_period_sums(ps);
        out.push_back(prime_stats(ps, pp, alpha));
    }
    return out;
}

BoundPair bound_a(std::uint64_t u, std::span<const PrimeStats> stats) {
    CompensatedSum tight, relaxed;
    for (const auto& st : stats) {
        const double dp = static_cast<double>(st.p);
        const std::uint64_t w = u / st.order;
        const std::uint64_t rem = u % st.order;
        const double s = st.sum_abs_period;
        // floor(u/f) f (1 + S) / p. When f = 1, S = p-1 exactly, so the
        // term collapses to the exact integer floor(u/f): the bound then
        // meets D with equality, bit for bit.
        const double t = static_cast<double>(w * st.order) * (1.0 + s) / dp;
        const double inc = rem == 0 ? 0.0 : static_cast<double>(rem) * s / dp;
        tight.add(t);
        relaxed.add(t);
        relaxed.add(inc);
    }
    return {tight.value(), relaxed.value()};
}

BoundPair bound_b(std::uint64_t u, std::span<const PrimeStats> stats) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    CompensatedSum tight, relaxed;
    for (const auto& st : stats) {
        const double dp = static_cast<double>(st.p);
        const double df = static_cast<double>(st.order);
        const std::uint64_t w = u / st.order;
        const std::uint64_t rem = u % st.order;
        const double b = st.abs_prefix_total;
        const double s = std::fabs(2.0 * std::sin(std::numbers::pi * df / dp));
        // floor(u/f) (2f + s B) / p, valid since p - f <= f + s B by the
        // summation-by-parts triangle inequality. At p = 2 (f = 1, B = 0)
        // it equals floor(u/f) exactly.
        const double t = static_cast<double>(w) * (2.0 * df + s * b) / dp;
        const double inc1 = rem == 0 ? 0.0 : static_cast<double>(rem) / dp;
        // Relaxed form replaces s by 2 pi f / p and floor(u/f) f by u; the
        // bracket is nonnegative in exact arithmetic (sin t <= t), clamped
        // to guard the last ulp.
        double bracket = two_pi * static_cast<double>(u) / dp - static_cast<double>(w) * s;
        if (bracket < 0.0) bracket = 0.0;
        const double inc2 = b == 0.0 ? 0.0 : b * bracket / dp;
        tight.add(t);
        relaxed.add(t);
        relaxed.add(inc1);
        relaxed.add(inc2);
    }
    return {tight.value(), relaxed.value()};
}

MeanPeriodBound mean_period_bound(const PeriodSet& ps) {
    MeanPeriodBound out;
    out.p = ps.p;
    const double dp = static_cast<double>(ps.p);
    const double df = static_cast<double>(ps.rec.order);
    const double de = static_cast<double>(ps.rec.coset_count);
    out.mean_abs = sum_abs_periods(ps) / dp;
    out.cauchy_schwarz = std::sqrt(de * (dp - df)) / dp;
    out.factored = std::sqrt(1.0 / df - 1.0 / dp) * std::sqrt(1.0 - df / dp);
    const double slack = 1e-9;
    out.holds_cs = out.mean_abs <= out.cauchy_schwarz + slack;
    out.holds_factored = out.mean_abs <= out.factored + slack;
    return out;
}

double sum_reciprocal_orders(std::int64_t a, std::uint64_t x) {
    CompensatedSum acc;
    for (std::uint64_t p : sieve_primes(x)) {
        if (p >= x) break;
        if (reduce_mod(a, p) == 0) continue;
        acc.add(1.0 / static_cast<double>(multiplicative_order(a, p)));
    }
    return acc.value();
}

double weighted_hit_sum(std::int64_t a, std::uint64_t x) {
    CompensatedSum acc;
    for (std::uint64_t p : sieve_primes(x)) {
        if (reduce_mod(a, p) == 0) continue;
        const std::uint64_t f = multiplicative_order(a, p);
        for (std::uint64_t j = f; j < x; j += f) acc.add(1.0 / static_cast<double>(j));
    }
    return acc.value();
}

std::map<std::uint64_t, std::uint64_t> order_histogram(std::int64_t a, std::uint64_t x) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t p : sieve_primes(x)) {
        if (p >= x) break;
        if (reduce_mod(a, p) == 0) continue;
        ++hist[multiplicative_order(a, p)];
    }
    return hist;
}

ChainCheck chain_check(std::int64_t a, std::uint64_t x) {
    using boost::multiprecision::cpp_rational;
    if (a < 2) throw std::domain_error("chain_check: base must be >= 2");
    ChainCheck out;
    const std::vector<std::uint64_t> primes = sieve_primes(x);

    for (std::uint64_t p : primes) {
        if (p >= x || reduce_mod(a, p) == 0) continue;
        out.s_x += cpp_rational(1, multiplicative_order(a, p));
    }
    for (const auto& [j, count] : order_histogram(a, x))
        out.histogram_sum += cpp_rational(count, j);
    for (std::uint64_t j = 1; j < x; ++j) {
        std::uint64_t omega = oracle::omega_up_to(
            oracle::cyclotomic_value(j, static_cast<std::uint64_t>(a)), primes);
        if (omega > 0) out.cyclotomic_sum += cpp_rational(omega, j);
    }
    for (std::uint64_t p : primes) {
        if (reduce_mod(a, p) == 0) continue;
        const std::uint64_t f = multiplicative_order(a, p);
        for (std::uint64_t j = f; j < x; j += f) out.w_x += cpp_rational(1, j);
    }
    out.ok = out.s_x <= out.histogram_sum && out.histogram_sum <= out.cyclotomic_sum &&
             out.cyclotomic_sum <= out.w_x;
    return out;
}

DensityStats density_report(std::int64_t a, std::uint64_t x) {
    if (x < 3) throw std::domain_error("density_report: x must be >= 3");
    DensityStats st;
    st.a = a;
    st.x = x;
    CompensatedSum recip;
    std::uint64_t gt_sqrt = 0, gt_34 = 0;
    for (std::uint64_t p : sieve_primes(x)) {
        ++st.pi_x;
        if (reduce_mod(a, p) == 0) continue;
        ++st.counted;
        const std::uint64_t f = multiplicative_order(a, p);
        if (f == p - 1) ++st.primitive_count;
        const __uint128_t f2 = static_cast<__uint128_t>(f) * f;
        const __uint128_t p3 = static_cast<__uint128_t>(p) * p * p;
        if (f2 > p) ++gt_sqrt;
        if (f2 * f2 > p3) {
            ++gt_34;
            recip.add(1.0 / static_cast<double>(f));
        }
    }
    if (st.counted > 0) {
        const double n = static_cast<double>(st.counted);
        st.primitive_fraction = static_cast<double>(st.primitive_count) / n;
        st.fraction_order_gt_sqrt = static_cast<double>(gt_sqrt) / n;
        st.fraction_order_gt_34 = static_cast<double>(gt_34) / n;
    }
    st.recip_sum_order_gt_34 = recip.value();
    const double dx = static_cast<double>(x);
    st.x_quarter_over_log = std::pow(dx, 0.25) / std::log(dx);
    st.small_sample = st.counted < 100;
    return st;
}

ReferenceCurves reference_curves(double x, double u, double delta) {
    if (x < 3.0) throw std::domain_error("reference_curves: x must be >= 3");
    if (delta <= 0.0) throw std::domain_error("reference_curves: delta must be positive");
    ReferenceCurves rc;
    rc.x = x;
    rc.u = u;
    rc.delta = delta;
    rc.log_x = std::log(x);
    rc.sqrt_x_log_power = std::sqrt(x) / std::pow(rc.log_x, 1.0 + delta);
    rc.x_quarter = std::pow(x, 0.25);
    rc.u_x_quarter = u * rc.x_quarter;
    rc.u_x_quarter_per_log = rc.u_x_quarter / rc.log_x;
    return rc;
}

double max_c_emp(std::span<const PrimeStats> stats) {
    double best = 0.0;
    for (const auto& st : stats) best = std::max(best, st.c_emp);
    return best;
}

}  // namespace artin
