#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "artin/modular_core.hpp"

namespace artin {

// Gauss periods for the subgroup <a> of (Z/p)^*, with zeta = e^{2 pi i / p}:
//
//   eta_i = sum over the coset C_i = g^i <a> of zeta^t.
//
// Identities this module exposes through identity_residuals, each exact in
// the reals and checked here in floating point:
//
//   sum_i eta_i               = -1                (the eta partition (Z/p)^* )
//   sum_i |eta_i|^2           = p - f             (orthogonality, f = ord)
//   P_{p-1}                   = -f                (f full passes of sum eta)
//   sum_m eta(h_m) zeta^{-h_m}= p - f             (direct pairing)
//   same, Abel-summed         = p - f             (bracketed pairing)
//
// where h_m = m f mod p for m = 1..p-1, eta(h_m) is the period of the coset
// containing h_m, and P_k = sum_{m<=k} eta(h_m).
struct PeriodSet {
    std::uint64_t p = 0;
    OrderRecord rec;
    CosetTable cosets;
    std::vector<std::complex<double>> periods;  // periods[i-1] = eta_i
    std::vector<std::complex<double>> roots;    // roots[k] = zeta^k, k = 0..p-1

    const std::complex<double>& root(std::uint64_t k) const { return roots[k % p]; }
};

struct PartialSums {
    std::uint64_t p = 0;
    std::vector<std::uint32_t> order_step;     // order_step[m-1] = h_m = m f mod p
    std::vector<std::complex<double>> prefix;  // prefix[k-1] = P_k = sum_{m<=k} eta(h_m)
    double abs_prefix_total = 0.0;             // B = sum_{k=1..p-2} |P_k|
};

struct IdentityResiduals {
    double period_total = 0.0;   // |sum eta + 1|
    double power_total = 0.0;    // |sum |eta|^2 - (p - f)|
    double prefix_total = 0.0;   // |P_{p-1} + f|
    double pairing_direct = 0.0; // |direct pairing - (p - f)|
    double pairing_abel = 0.0;   // |Abel pairing - (p - f)|

    double max_residual() const;
};

// Builds the full period set for (p, a). Requires p prime, p not dividing a,
// p < 2^32. Cost O(p) time and memory.
PeriodSet compute_periods(std::uint64_t p, std::int64_t a);

// eta of the coset containing c mod p. Throws if p | c.
std::complex<double> period_for_residue(const PeriodSet& ps, std::int64_t c);

// Prefix sums P_k of the periods eta(h_m) along h_m = m f mod p, plus their
// absolute total B = sum_{k <= p-2} |P_k|. B is 0 for p = 2 (empty range).
PartialSums partial_period_sums(const PeriodSet& ps);

// sum_j |sin(pi t_j k / p)| / |sin(pi t_j / p)| over t_j = a^j f mod p,
// j = 0..ord-1. Dominates |P_k| term by term. Requires 1 <= k <= p-2.
double trig_majorant(const PeriodSet& ps, std::uint64_t k);

IdentityResiduals identity_residuals(const PeriodSet& ps, const PartialSums& pp);

// sum_i |eta_i|. Exact (p-1 unit roots) when ord = 1.
double sum_abs_periods(const PeriodSet& ps);

// max_i |eta_i|. Exactly 1 when ord = 1.
double max_abs_period(const PeriodSet& ps);

}  // namespace artin
