#include "sdesign/algebra.hpp"

#include "sdesign/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace sdesign {

namespace {

constexpr unsigned long trial_limit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(trial_limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= trial_limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= trial_limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

const BigInt two64 = BigInt(1) << 64;

bool strong_probable_prime(const BigInt& n, const BigInt& base) {
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

BigInt mod(const BigInt& a, const BigInt& n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return r;
}

BigInt half_mod(const BigInt& a, const BigInt& n) {
    BigInt r = mod(a, n);
    if (mpz_odd_p(r.get_mpz_t())) r += n;
    return r / 2;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas(const BigInt& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long dval = 5;
    for (;;) {
        BigInt d(dval);
        int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(BigInt(dval)) != n) return false;
        dval = dval > 0 ? -(dval + 2) : -dval + 2;
    }
    const BigInt D(dval);
    const BigInt P(1);
    const BigInt Q = BigInt(1 - dval) / 4;

    BigInt d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    BigInt U(1), V(P), Qk = mod(Q, n);
    for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
        U = U * V % n;
        V = mod(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), bit)) {
            BigInt nu = half_mod(P * U + V, n);
            BigInt nv = half_mod(D * U + P * V, n);
            U = nu;
            V = nv;
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

BigInt rho_step(const BigInt& y, const BigInt& c, const BigInt& n) { return (y * y + c) % n; }

// Brent's cycle-finding variant; returns a divisor in (1, n) or 0 on failure.
BigInt brent(const BigInt& n, const BigInt& c, const BigInt& y0, std::uint64_t& budget) {
    const unsigned long m = 128;
    BigInt y = y0, x, ys, q(1), g(1);
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = rho_step(y, c, n);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = rho_step(y, c, n);
                q = q * abs(x - y) % n;
            }
            if (budget < lim) return 0;
            budget -= lim;
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = rho_step(ys, c, n);
            g = gcd(abs(x - ys), n);
            if (budget-- == 0) return 0;
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t seed,
           std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (budget == 0) fail(Errc::timeout, "factorization budget exhausted for " + n.get_str());
        BigInt c(static_cast<unsigned long>(seed + attempt));
        BigInt y0(static_cast<unsigned long>(2 + attempt));
        BigInt g = brent(n, c, y0, budget);
        if (g != 0) {
            split(g, out, seed, budget);
            split(n / g, out, seed, budget);
            return;
        }
    }
}

}  // namespace

BigInt parse_bigint(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '_') t.push_back(ch);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        fail(Errc::parse, "not a non-negative integer: '" + text + "'");
    return BigInt(t, 10);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < two64) {
        // This base set is deterministic for all n < 3.3 * 10^24.
        for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL})
            if (!strong_probable_prime(n, BigInt(a))) return false;
        return true;
    }
    return strong_probable_prime(n, BigInt(2)) && strong_lucas(n);
}

bool is_prime_certain(const BigInt& n) { return n < two64 || !is_prime(n); }

BigInt Factorization::product() const {
    BigInt r(1);
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r;
}

BigInt Factorization::divisor_count() const {
    BigInt r(1);
    for (const auto& f : factors) r *= f.second + 1;
    return r;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str();
        if (e > 1) os << '^' << e;
    }
    if (first) os << '1';
    return os.str();
}

Factorization factorize(const BigInt& n, std::uint64_t seed, std::uint64_t max_iterations) {
    if (n < 2) fail(Errc::invalid_argument, "factorize requires n >= 2");
    Factorization f;
    f.value = n;
    BigInt rest = n;
    std::map<BigInt, unsigned> found;
    for (unsigned long p : small_primes()) {
        if (BigInt(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            found[BigInt(p)] = e;
        }
    }
    std::uint64_t budget = max_iterations;
    split(rest, found, seed, budget);
    for (const auto& kv : found) f.factors.push_back(kv);
    return f;
}

std::vector<BigInt> divisors(const Factorization& f, const BigInt& lo, const BigInt& hi) {
    std::vector<BigInt> out;
    if (hi < 1 || lo > hi) return out;
    // depth-first over exponent vectors, pruning partial products above hi
    struct Frame {
        std::size_t index;
        BigInt value;
    };
    std::vector<Frame> stack{{0, BigInt(1)}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.index == f.factors.size()) {
            if (fr.value >= lo) out.push_back(fr.value);
            continue;
        }
        const auto& [p, e] = f.factors[fr.index];
        BigInt v = fr.value;
        for (unsigned i = 0; i <= e && v <= hi; ++i) {
            stack.push_back({fr.index + 1, v});
            v *= p;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimePower::PrimePower(const BigInt& p_, unsigned a_) : p(p_), a(a_) {
    if (a == 0 || !is_prime(p)) fail(Errc::invalid_argument, "not a prime power: " + p.get_str() + "^" + std::to_string(a));
    q = pow(p, a);
}

PrimePower PrimePower::from_q(const BigInt& q) {
    if (q < 2) fail(Errc::invalid_argument, "not a prime power: " + q.get_str());
    Factorization f = factorize(q);
    if (f.factors.size() != 1) fail(Errc::invalid_argument, "not a prime power: " + q.get_str());
    return PrimePower(f.factors[0].first, f.factors[0].second);
}

unsigned long PrimePower::small_p() const {
    if (!p.fits_ulong_p()) fail(Errc::out_of_range, "characteristic too large");
    return p.get_ui();
}

unsigned long PrimePower::small_q() const {
    if (!q.fits_ulong_p()) fail(Errc::out_of_range, "field too large");
    return q.get_ui();
}

}  // namespace sdesign
