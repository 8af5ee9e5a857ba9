#include "artin/period_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "artin/kahan.hpp"

namespace artin {

double IdentityResiduals::max_residual() const {
    return std::max({period_total, power_total, prefix_total, pairing_direct, pairing_abel});
}

PeriodSet compute_periods(std::uint64_t p, std::int64_t a) {
    PeriodSet ps;
    ps.p = p;
    ps.rec = make_order_record(a, p);
    ps.cosets = build_coset_table(ps.rec);

    // Root table with conjugate mirroring: zeta^{p-k} = conj(zeta^k) exactly,
    // so sums over symmetric index sets cancel imaginary parts bit-exactly.
    ps.roots.resize(p);
    ps.roots[0] = {1.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(p);
    for (std::uint64_t k = 1; k < p; ++k) {
        if (2 * k < p) {
            double ang = step * static_cast<double>(k);
            ps.roots[k] = {std::cos(ang), std::sin(ang)};
        } else if (2 * k == p) {
            ps.roots[k] = {-1.0, 0.0};
        } else {
            ps.roots[k] = std::conj(ps.roots[p - k]);
        }
    }

    const std::uint64_t e = ps.rec.coset_count;
    ps.periods.resize(e);
    for (std::uint64_t i = 1; i <= e; ++i) {
        CompensatedComplexSum acc;
        std::uint64_t r = ps.cosets.reps[i - 1];
        for (std::uint64_t k = 0; k < ps.rec.order; ++k) {
            acc.add(ps.roots[r]);
            r = static_cast<std::uint64_t>((__uint128_t)r * ps.rec.a_mod_p % p);
        }
        ps.periods[i - 1] = acc.value();
    }
    return ps;
}

std::complex<double> period_for_residue(const PeriodSet& ps, std::int64_t c) {
    std::uint64_t r = reduce_mod(c, ps.p);
    if (r == 0) throw std::domain_error("period_for_residue: p divides c");
    return ps.periods[ps.cosets.coset_index(r) - 1];
}

PartialSums partial_period_sums(const PeriodSet& ps) {
    const std::uint64_t p = ps.p;
    const std::uint64_t f = ps.rec.order;
    PartialSums out;
    out.p = p;
    out.order_step.reserve(p - 1);
    out.prefix.reserve(p - 1);
    CompensatedComplexSum run;
    CompensatedSum abs_total;
    std::uint64_t h = 0;
    for (std::uint64_t m = 1; m <= p - 1; ++m) {
        h += f;
        if (h >= p) h -= p;
        out.order_step.push_back(static_cast<std::uint32_t>(h));
        run.add(ps.periods[ps.cosets.coset_index(h) - 1]);
        std::complex<double> pk = run.value();
        out.prefix.push_back(pk);
        if (m <= p - 2) abs_total.add(std::abs(pk));
    }
    out.abs_prefix_total = abs_total.value();
    return out;
}

double trig_majorant(const PeriodSet& ps, std::uint64_t k) {
    const std::uint64_t p = ps.p;
    if (k < 1 || k > p - 2) throw std::domain_error("trig_majorant: k out of range");
    const double pi_over_p = std::numbers::pi / static_cast<double>(p);
    CompensatedSum acc;
    std::uint64_t aj = 1;
    for (std::uint64_t j = 0; j < ps.rec.order; ++j) {
        std::uint64_t t = static_cast<std::uint64_t>((__uint128_t)aj * ps.rec.order % p);
        std::uint64_t tk = static_cast<std::uint64_t>((__uint128_t)t * k % p);
        double num = std::fabs(std::sin(pi_over_p * static_cast<double>(tk)));
        double den = std::fabs(std::sin(pi_over_p * static_cast<double>(t)));
        acc.add(num / den);
        aj = static_cast<std::uint64_t>((__uint128_t)aj * ps.rec.a_mod_p % p);
    }
    return acc.value();
}

IdentityResiduals identity_residuals(const PeriodSet& ps, const PartialSums& pp) {
    const std::uint64_t p = ps.p;
    const double f = static_cast<double>(ps.rec.order);
    const double target = static_cast<double>(p) - f;
    IdentityResiduals out;

    {
        CompensatedComplexSum tot;
        for (const auto& eta : ps.periods) tot.add(eta);
        out.period_total = std::abs(tot.value() + std::complex<double>(1.0, 0.0));
    }
    {
        CompensatedSum tot;
        for (const auto& eta : ps.periods) tot.add(std::norm(eta));
        out.power_total = std::fabs(tot.value() - target);
    }
    out.prefix_total = std::abs(pp.prefix.back() + std::complex<double>(f, 0.0));
    {
        // Direct pairing: sum_m eta(h_m) conj(zeta^{h_m}).
        CompensatedComplexSum tot;
        for (std::uint64_t m = 1; m <= p - 1; ++m) {
            std::uint64_t h = pp.order_step[m - 1];
            tot.add(ps.periods[ps.cosets.coset_index(h) - 1] * std::conj(ps.roots[h]));
        }
        out.pairing_direct = std::abs(tot.value() - std::complex<double>(target, 0.0));
    }
    {
        // Same sum by parts: P_{p-1} conj(zeta^{h_{p-1}})
        // + sum_{k<=p-2} P_k (conj(zeta^{h_k}) - conj(zeta^{h_{k+1}})).
        CompensatedComplexSum tot;
        for (std::uint64_t k = 1; k <= p - 2; ++k) {
            std::complex<double> w = std::conj(ps.roots[pp.order_step[k - 1]]) -
                                     std::conj(ps.roots[pp.order_step[k]]);
            tot.add(pp.prefix[k - 1] * w);
        }
        tot.add(pp.prefix[p - 2] * std::conj(ps.roots[pp.order_step[p - 2]]));
        out.pairing_abel = std::abs(tot.value() - std::complex<double>(target, 0.0));
    }
    return out;
}

double sum_abs_periods(const PeriodSet& ps) {
    if (ps.rec.order == 1) {
        // Every period is a single unit root, |eta_i| = 1 exactly.
        return static_cast<double>(ps.p - 1);
    }
    CompensatedSum acc;
    for (const auto& eta : ps.periods) acc.add(std::abs(eta));
    return acc.value();
}

double max_abs_period(const PeriodSet& ps) {
    if (ps.rec.order == 1) return 1.0;
    double best = 0.0;
    for (const auto& eta : ps.periods) best = std::max(best, std::abs(eta));
    return best;
}

}  // namespace artin
