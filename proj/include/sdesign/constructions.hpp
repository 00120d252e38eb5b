#pragma once

#include "sdesign/algebra.hpp"
#include "sdesign/design.hpp"
#include "sdesign/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdesign {

struct ProjectiveSpace {
    IncidenceStructure design;
    DesignParams expected;  // from the closed-form point/hyperplane counts
    bool lambda_prime = false;
};

// Points against hyperplanes of PG(n-1, q); n >= 3.
ProjectiveSpace projective_space(unsigned n, const PrimePower& q);

// A finite group of order <= 64 with elements numbered 0..order-1, 0 the identity.
// Abelian groups are products of cyclic factors, numbered in mixed radix with the
// first factor most significant. Q8 x Z2 numbers (u, z) as 2u + z with u running
// over 1, -1, i, -i, j, -j, k, -k.
class AmbientGroup {
public:
    static AmbientGroup cyclic(std::uint32_t n);
    static AmbientGroup elementary_abelian(std::uint32_t p, unsigned a);
    static AmbientGroup direct_product(std::vector<std::uint32_t> moduli);
    static AmbientGroup quaternion8_z2();
    // "cyclic:N", "ea:P:A", "product:M1,M2,..." or "q8xz2"
    static AmbientGroup parse(const std::string& spec);

    std::uint32_t order() const { return order_; }
    const std::string& name() const { return name_; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t inv(std::uint32_t x) const;

    // element text: "7" for one factor, "1.3" for several, "-i.1" for Q8 x Z2
    std::string label(std::uint32_t x) const;
    std::uint32_t parse_element(const std::string& text) const;

private:
    AmbientGroup() = default;
    std::uint32_t order_ = 1;
    std::string name_;
    std::vector<std::uint32_t> moduli_;  // empty for the quaternion product
};

struct DifferenceSetSpec {
    AmbientGroup group;
    std::vector<std::uint32_t> base;  // element numbers
};

struct DifferenceCheck {
    bool ok = false;
    std::uint64_t lambda = 0;  // multiplicity of the first nonidentity element
    std::uint32_t bad_element = 0;
    std::uint64_t bad_count = 0;
};

// Counts x * y^-1 over ordered pairs of distinct base elements.
DifferenceCheck check_difference_set(const DifferenceSetSpec& spec);
// Blocks are the right translates base * g; points are element numbers.
IncidenceStructure develop_difference_set(const DifferenceSetSpec& spec);
// Lexicographically first k-subset containing the identity, by exhaustive search.
std::optional<DifferenceSetSpec> find_difference_set(const AmbientGroup& group, std::uint32_t k,
                                                     std::uint64_t lambda);
// The right regular representation, on element numbers.
PermutationGroup regular_group(const AmbientGroup& group);

struct NamedInstance {
    std::string name;
    std::string description;
    IncidenceStructure design;
    std::optional<PermutationGroup> group;
    std::string group_description;
    DesignParams expected;
    // expected verdicts for the carried group
    std::optional<bool> flag_transitive;
    std::optional<bool> primitive;
    std::string note;
};

const std::vector<std::string>& catalog_names();
NamedInstance catalog(const std::string& name);

// Vendored data files compiled into the library (names as under data/).
const std::string& embedded_file(const std::string& name);
std::vector<std::string> embedded_file_names();

PermutationGroup cyclic_shift_group(std::size_t n);

}  // namespace sdesign
