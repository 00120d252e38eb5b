#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sdesign {

using BigInt = mpz_class;

BigInt parse_bigint(const std::string& text);
std::string to_string(const BigInt& n);

// Deterministic for n < 2^64; above that a Baillie-PSW test (base-2 strong
// probable prime plus strong Lucas), which has no known counterexample.
bool is_prime(const BigInt& n);
bool is_prime_certain(const BigInt& n);  // true when is_prime's answer is proven

struct Factorization {
    BigInt value;
    std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes

    BigInt product() const;
    BigInt divisor_count() const;
    std::string to_string() const;
};

constexpr std::uint64_t default_rho_seed = 1;

// Trial division below 10^6, then Brent's variant of Pollard rho. `max_iterations`
// bounds the rho work per composite; exceeding it throws Errc::timeout.
Factorization factorize(const BigInt& n, std::uint64_t seed = default_rho_seed,
                        std::uint64_t max_iterations = 50'000'000);

// Divisors d of f.value with lo <= d <= hi, ascending.
std::vector<BigInt> divisors(const Factorization& f, const BigInt& lo, const BigInt& hi);

struct PrimePower {
    BigInt p;
    unsigned a = 1;
    BigInt q;

    PrimePower(const BigInt& p, unsigned a);
    static PrimePower from_q(const BigInt& q);

    unsigned long small_p() const;
    unsigned long small_q() const;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long e);

}  // namespace sdesign
