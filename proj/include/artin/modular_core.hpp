#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace artin {

// Thrown when a multiplicative order is requested for a residue that is not
// a unit, i.e. when p divides a.
struct undefined_order_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct Factorization {
    std::uint64_t n = 0;
    // (prime, exponent) pairs in ascending prime order.
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

// Per-prime summary of the subgroup generated by a in (Z/p)^*.
struct OrderRecord {
    std::uint64_t p = 0;
    std::uint64_t a_mod_p = 0;   // a reduced mod p, nonzero
    std::uint64_t order = 0;     // least f > 0 with a^f = 1 (mod p)
    std::uint64_t coset_count = 0;  // (p-1)/order
    std::uint64_t generator = 0;    // least primitive root mod p
};

// Partition of (Z/p)^* into cosets of the subgroup <a>.
// Coset i (1-based, i = 1..coset_count) is g^i * <a>, so its stored
// representative is g^i mod p and the subgroup itself is the last coset.
struct CosetTable {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> reps;      // reps[i-1] = g^i mod p
    std::vector<std::uint32_t> coset_of;  // size p; residue -> coset index, 0 unassigned

    // 1-based coset index of a nonzero residue r (0 < r < p).
    std::uint32_t coset_index(std::uint64_t r) const {
        if (r == 0 || r >= p) throw std::domain_error("coset_index: residue out of range");
        return coset_of[r];
    }
};

// Primes <= x in ascending order. Requires x >= 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t x);

// b^e mod m with 128-bit intermediate products. Requires m > 0.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// a mod p as a value in [0, p). Requires p > 0.
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t p);

// Trial-division factorization. Requires n > 0.
Factorization factorize(std::uint64_t n);

// Least f > 0 with a^f = 1 (mod p). Throws undefined_order_error if p | a.
std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t p);
std::uint64_t multiplicative_order(std::uint64_t a_mod, std::uint64_t p,
                                   const Factorization& p_minus_one);

// Least primitive root mod p (p prime).
std::uint64_t least_primitive_root(std::uint64_t p);
std::uint64_t least_primitive_root(std::uint64_t p, const Factorization& p_minus_one);

OrderRecord make_order_record(std::int64_t a, std::uint64_t p);

// Builds the coset partition for <a> inside (Z/p)^*. Requires p < 2^32
// (the table stores one entry per residue).
CosetTable build_coset_table(const OrderRecord& rec);

}  // namespace artin
