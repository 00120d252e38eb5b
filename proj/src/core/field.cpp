#include "sdesign/field.hpp"

#include "sdesign/error.hpp"

namespace sdesign {

namespace {

std::vector<std::uint32_t> poly_mod_mul(const std::vector<std::uint32_t>& x,
                                        const std::vector<std::uint32_t>& y,
                                        const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
    const std::size_t a = modulus.size();
    std::vector<std::uint64_t> prod(2 * a, 0);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % p;
    // x^a = -(c_0 + ... + c_{a-1} x^{a-1})
    for (std::size_t k = 2 * a - 1; k >= a; --k) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < a; ++i)
            prod[k - a + i] = (prod[k - a + i] + (p - c) * modulus[i]) % p;
    }
    return {prod.begin(), prod.begin() + a};
}

// Monic polynomial of degree a with lower coefficients c has a factor of degree
// d <= a/2 iff it is divisible by some monic polynomial of degree d.
bool irreducible(const std::vector<std::uint32_t>& c, std::uint32_t p) {
    const std::size_t a = c.size();
    std::vector<std::uint32_t> f(c);
    f.push_back(1);
    for (std::size_t d = 1; d <= a / 2; ++d) {
        std::vector<std::uint32_t> g(d + 1, 0);
        g[d] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            std::vector<std::uint64_t> r(f.begin(), f.end());
            for (std::size_t k = a; k >= d; --k) {
                std::uint64_t lead = r[k];
                if (lead != 0)
                    for (std::size_t i = 0; i <= d; ++i)
                        r[k - d + i] = (r[k - d + i] + (p - lead) * g[i]) % p;
                if (k == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

FieldTable::FieldTable(const PrimePower& q) : q_(q) {
    if (q.q > BigInt(static_cast<unsigned long>(max_order)))
        fail(Errc::out_of_range, "field order " + q.q.get_str() + " exceeds table limit");
    p_ = static_cast<std::uint32_t>(q.small_p());
    a_ = q.a;
    order_ = static_cast<std::uint32_t>(q.small_q());

    // lexicographically smallest monic irreducible, compared from c_0 upward
    std::vector<std::uint32_t> c(a_, 0);
    for (std::uint32_t idx = 0; idx < order_; ++idx) {
        std::uint32_t t = idx;
        for (unsigned i = 0; i < a_; ++i) {
            c[i] = t % p_;
            t /= p_;
        }
        if (irreducible(c, p_)) break;
    }
    modulus_ = c;

    const std::uint32_t n = order_ - 1;
    exp_.assign(n, 0);
    log_.assign(order_, 0);
    for (Elem g = 1; g < order_; ++g) {
        Elem x = 1;
        std::uint32_t k = 0;
        do {
            exp_[k++] = x;
            x = poly_mul(x, g);
        } while (x != 1 && k < n);
        if (x == 1 && k == n) {
            generator_ = g;
            break;
        }
    }
    for (std::uint32_t k = 0; k < n; ++k) log_[exp_[k]] = k;
}

std::vector<std::uint32_t> FieldTable::digits(Elem x) const {
    std::vector<std::uint32_t> d(a_);
    for (unsigned i = 0; i < a_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

FieldTable::Elem FieldTable::from_digits(const std::vector<std::uint32_t>& d) const {
    Elem x = 0;
    for (unsigned i = a_; i-- > 0;) x = x * p_ + d[i];
    return x;
}

FieldTable::Elem FieldTable::poly_mul(Elem x, Elem y) const {
    return from_digits(poly_mod_mul(digits(x), digits(y), modulus_, p_));
}

FieldTable::Elem FieldTable::add(Elem x, Elem y) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < a_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return r;
}

FieldTable::Elem FieldTable::neg(Elem x) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < a_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return r;
}

FieldTable::Elem FieldTable::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FieldTable::Elem FieldTable::mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(std::uint64_t(log_[x]) + log_[y]) % (order_ - 1)];
}

FieldTable::Elem FieldTable::inv(Elem x) const {
    if (x == 0) fail(Errc::invalid_argument, "inverse of zero");
    return exp_[(order_ - 1 - log_[x]) % (order_ - 1)];
}

FieldTable::Elem FieldTable::pow(Elem x, std::uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    return exp_[(log_[x] * (e % (order_ - 1))) % (order_ - 1)];
}

}  // namespace sdesign
