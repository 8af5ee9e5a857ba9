#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact big-integer cross-checks. Everything in this namespace works on the
// literal integers a^j - 1 and never consults multiplicative orders, so it
// gives an independent route to the same counts the float/order machinery
// produces. Keep it that way.
namespace artin::oracle {

using BigNat = boost::multiprecision::cpp_int;

struct OracleLimits {
    std::uint64_t max_u = 64;
    std::uint64_t max_x = 10000;
};

struct OracleResult {
    std::uint64_t j = 0;
    BigNat value;                               // a^j - 1
    std::uint64_t omega = 0;                    // #{p <= x : p | value}
    std::vector<std::uint64_t> prime_divisors;  // those p, ascending
};

// a^j - 1 exactly. Requires a >= 2, j >= 1.
BigNat pow_minus_one(std::uint64_t a, std::uint64_t j);

// Number of distinct primes p <= x dividing n. Requires n > 0.
std::uint64_t omega_up_to(const BigNat& n, std::uint64_t x);
std::uint64_t omega_up_to(const BigNat& n, std::span<const std::uint64_t> primes);

// Mobius function of n >= 1.
int mobius(std::uint64_t n);

// Value of the j-th cyclotomic polynomial at a, via the Mobius product
// prod_{d | j} (a^d - 1)^{mu(j/d)}. Every division is checked exact.
BigNat cyclotomic_value(std::uint64_t j, std::uint64_t a);

// Full divisor report for a^j - 1 against primes <= x.
OracleResult inspect_pow_minus_one(std::uint64_t a, std::uint64_t j, std::uint64_t x);

// sum_{j=1..u} #{p <= x : p | a^j - 1}, computed purely by divisibility.
std::uint64_t hit_total(std::uint64_t a, std::uint64_t u, std::uint64_t x);

// Checks p | a^j - 1  <=>  ord_p(a) | j for one triple. Used by the
// verification suite to tie the two routes together.
bool order_divisibility_consistent(std::uint64_t a, std::uint64_t p, std::uint64_t j);

}  // namespace artin::oracle
