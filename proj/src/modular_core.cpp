#include "artin/modular_core.hpp"

namespace artin {

std::vector<std::uint64_t> sieve_primes(std::uint64_t x) {
    if (x < 2) throw std::domain_error("sieve_primes: x must be >= 2");
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i <= x / i; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= x; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw std::domain_error("mod_pow: zero modulus");
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::uint64_t>((__uint128_t)r * b % m);
        b = static_cast<std::uint64_t>((__uint128_t)b * b % m);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t p) {
    if (p == 0) throw std::domain_error("reduce_mod: zero modulus");
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = a % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: zero argument");
    Factorization out;
    out.n = n;
    std::uint64_t m = n;
    auto strip = [&](std::uint64_t d) {
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(d, e);
    };
    strip(2);
    for (std::uint64_t d = 3; d <= m / d; d += 2) strip(d);
    if (m > 1) out.factors.emplace_back(m, 1);
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a_mod, std::uint64_t p,
                                   const Factorization& p_minus_one) {
    if (a_mod == 0) throw undefined_order_error("multiplicative_order: p divides a");
    // Start at the group order and strip every prime factor that keeps a^f = 1.
    std::uint64_t f = p - 1;
    for (auto [q, e] : p_minus_one.factors)
        for (unsigned i = 0; i < e && f % q == 0 && mod_pow(a_mod, f / q, p) == 1; ++i)
            f /= q;
    return f;
}

std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t p) {
    std::uint64_t a_mod = reduce_mod(a, p);
    if (a_mod == 0) throw undefined_order_error("multiplicative_order: p divides a");
    return multiplicative_order(a_mod, p, factorize(p - 1));
}

std::uint64_t least_primitive_root(std::uint64_t p, const Factorization& p_minus_one) {
    if (p == 2) return 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto [q, e] : p_minus_one.factors) {
            (void)e;
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("least_primitive_root: no generator found, p not prime?");
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    return least_primitive_root(p, factorize(p - 1));
}

OrderRecord make_order_record(std::int64_t a, std::uint64_t p) {
    OrderRecord rec;
    rec.p = p;
    rec.a_mod_p = reduce_mod(a, p);
    if (rec.a_mod_p == 0) throw undefined_order_error("make_order_record: p divides a");
    Factorization pm1 = factorize(p - 1);
    rec.order = multiplicative_order(rec.a_mod_p, p, pm1);
    rec.coset_count = (p - 1) / rec.order;
    rec.generator = least_primitive_root(p, pm1);
    return rec;
}

CosetTable build_coset_table(const OrderRecord& rec) {
    const std::uint64_t p = rec.p;
    if (p > 0xFFFFFFFFull) throw std::domain_error("build_coset_table: p too large");
    CosetTable tab;
    tab.p = p;
    tab.coset_of.assign(p, 0);
    tab.reps.reserve(rec.coset_count);
    std::uint64_t gi = 1;
    for (std::uint64_t i = 1; i <= rec.coset_count; ++i) {
        gi = static_cast<std::uint64_t>((__uint128_t)gi * rec.generator % p);
        tab.reps.push_back(gi);
        std::uint64_t r = gi;
        for (std::uint64_t k = 0; k < rec.order; ++k) {
            if (tab.coset_of[r] != 0)
                throw std::logic_error("build_coset_table: residue visited twice");
            tab.coset_of[r] = static_cast<std::uint32_t>(i);
            r = static_cast<std::uint64_t>((__uint128_t)r * rec.a_mod_p % p);
        }
    }
    return tab;
}

}  // namespace artin
