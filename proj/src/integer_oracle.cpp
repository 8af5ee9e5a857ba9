#include "artin/integer_oracle.hpp"

#include "artin/modular_core.hpp"

namespace artin::oracle {

BigNat pow_minus_one(std::uint64_t a, std::uint64_t j) {
    if (a < 2) throw std::domain_error("pow_minus_one: base must be >= 2");
    if (j < 1) throw std::domain_error("pow_minus_one: exponent must be >= 1");
    return boost::multiprecision::pow(BigNat(a), static_cast<unsigned>(j)) - 1;
}

std::uint64_t omega_up_to(const BigNat& n, std::span<const std::uint64_t> primes) {
    if (n == 0) throw std::domain_error("omega_up_to: zero argument");
    BigNat m = n < 0 ? BigNat(-n) : n;
    std::uint64_t count = 0;
    for (std::uint64_t p : primes) {
        if (m == 1) break;
        if (m % p == 0) {
            ++count;
            do m /= p; while (m % p == 0);
        }
    }
    return count;
}

std::uint64_t omega_up_to(const BigNat& n, std::uint64_t x) {
    std::vector<std::uint64_t> primes = sieve_primes(x);
    return omega_up_to(n, primes);
}

int mobius(std::uint64_t n) {
    Factorization f = factorize(n);
    int sign = 1;
    for (auto [q, e] : f.factors) {
        (void)q;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

BigNat cyclotomic_value(std::uint64_t j, std::uint64_t a) {
    if (j < 1) throw std::domain_error("cyclotomic_value: index must be >= 1");
    BigNat num = 1, den = 1;
    for (std::uint64_t d = 1; d <= j; ++d) {
        if (j % d != 0) continue;
        int mu = mobius(j / d);
        if (mu == 1)
            num *= pow_minus_one(a, d);
        else if (mu == -1)
            den *= pow_minus_one(a, d);
    }
    BigNat q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("cyclotomic_value: division not exact");
    return q;
}

OracleResult inspect_pow_minus_one(std::uint64_t a, std::uint64_t j, std::uint64_t x) {
    OracleResult out;
    out.j = j;
    out.value = pow_minus_one(a, j);
    BigNat m = out.value;
    for (std::uint64_t p : sieve_primes(x)) {
        if (m == 1) break;
        if (m % p == 0) {
            out.prime_divisors.push_back(p);
            do m /= p; while (m % p == 0);
        }
    }
    out.omega = out.prime_divisors.size();
    return out;
}

std::uint64_t hit_total(std::uint64_t a, std::uint64_t u, std::uint64_t x) {
    if (a < 2) throw std::domain_error("hit_total: base must be >= 2");
    if (u < 1) throw std::domain_error("hit_total: u must be >= 1");
    std::vector<std::uint64_t> primes = sieve_primes(x);
    BigNat pw = 1;
    std::uint64_t total = 0;
    for (std::uint64_t j = 1; j <= u; ++j) {
        pw *= a;
        total += omega_up_to(pw - 1, primes);
    }
    return total;
}

bool order_divisibility_consistent(std::uint64_t a, std::uint64_t p, std::uint64_t j) {
    bool divides = pow_minus_one(a, j) % p == 0;
    std::uint64_t f = multiplicative_order(static_cast<std::int64_t>(a), p);
    bool order_divides = j % f == 0;
    return divides == order_divides;
}

}  // namespace artin::oracle
