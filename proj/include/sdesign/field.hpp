#pragma once

#include "sdesign/algebra.hpp"

#include <cstdint>
#include <vector>

namespace sdesign {

// GF(p^a) for small q. An element is encoded as the integer sum c_i p^i of its
// polynomial coefficients, so 0 and 1 are the field's zero and one.
class FieldTable {
public:
    using Elem = std::uint32_t;

    static constexpr unsigned long max_order = 1u << 16;

    explicit FieldTable(const PrimePower& q);

    const PrimePower& prime_power() const { return q_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return a_; }

    // modulus coefficients c_0..c_{a-1}; the leading coefficient 1 is implicit
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    Elem pow(Elem x, std::uint64_t e) const;

private:
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(const std::vector<std::uint32_t>& d) const;
    Elem poly_mul(Elem x, Elem y) const;

    PrimePower q_;
    std::uint32_t p_;
    unsigned a_;
    std::uint32_t order_;
    std::vector<std::uint32_t> modulus_;
    Elem generator_ = 1;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
};

}  // namespace sdesign
