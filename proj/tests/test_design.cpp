#include "oracle.hpp"
#include "sdesign/constructions.hpp"
#include "sdesign/design.hpp"
#include "sdesign/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sdesign;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return Errc::internal;
}

Block labels(std::initializer_list<Point> l) {
    Block b;
    for (Point p : l) b.push_back(p - 1);
    return b;
}

IncidenceStructure fano() { return orbit_design(cyclic_shift_group(7), labels({1, 2, 4})); }

}  // namespace

TEST_CASE("Fano plane and its complement") {
    const Verification f = verify_symmetric(fano());
    REQUIRE(f.ok());
    CHECK(f.params == DesignParams{7, 3, 1, true});
    const Verification c = verify_symmetric(complement(fano()));
    REQUIRE(c.ok());
    CHECK(c.params == DesignParams{7, 4, 2, true});
    CHECK(complement(complement(fano())) == fano());
    CHECK(fano().num_flags() == 21);
    CHECK(require_symmetric(fano()).lambda == 1);
}

TEST_CASE("four blocks on seven points is a block-count violation") {
    const IncidenceStructure d(7, {labels({1, 2, 3}), labels({1, 4, 5}), labels({1, 6, 7}), labels({2, 4, 6})});
    const Verification v = verify_symmetric(d);
    CHECK(v.kind == Violation::block_count);
    CHECK(v.observed == 4);
    CHECK(v.expected == 7);
    CHECK(v.describe() == "block-count mismatch: 4 blocks for v=7");
    CHECK(code_of([&] { require_symmetric(d); }) == Errc::not_symmetric);
}

TEST_CASE("the translates of {1,2,3,5,11} mod 11 are not a 2-design") {
    // label 11 is residue 0; difference 1 occurs three times in the block
    const IncidenceStructure d = orbit_design(cyclic_shift_group(11), labels({1, 2, 3, 5, 11}));
    CHECK(d.num_blocks() == 11);
    const Verification v = verify_symmetric(d);
    CHECK(v.kind == Violation::point_pair);
    CHECK_FALSE(oracle::count_pairs(d.v(), d.blocks()).symmetric);
}

TEST_CASE("violation kinds and witnesses") {
    SUBCASE("block size") {
        const IncidenceStructure d(3, {labels({1, 2}), labels({2, 3}), labels({1})});
        const Verification v = verify_symmetric(d);
        CHECK(v.kind == Violation::block_size);
    }
    SUBCASE("point pair") {
        // four blocks of size 2 on four points: {1,2} lies on one block, {1,4} on none
        const IncidenceStructure d(4, {labels({1, 2}), labels({3, 4}), labels({1, 3}), labels({2, 4})});
        const Verification v = verify_symmetric(d);
        CHECK(v.kind == Violation::point_pair);
        CHECK(v.describe().rfind("pair-count violation: points {", 0) == 0);
    }
}

TEST_CASE("verify_symmetric agrees with brute-force pair counting on perturbed designs (property)") {
    std::mt19937_64 rng(17);
    std::vector<IncidenceStructure> designs{fano(), complement(fano())};
    for (const auto& name : catalog_names()) designs.push_back(catalog(name).design);
    int compared = 0;
    for (const auto& d : designs) {
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<Block> blocks = d.blocks();
            const int moves = static_cast<int>(rng() % 3);
            for (int m = 0; m < moves; ++m) {
                Block& b = blocks[rng() % blocks.size()];
                std::vector<Point> outside;
                for (Point p = 0; p < d.v(); ++p)
                    if (!std::binary_search(b.begin(), b.end(), p)) outside.push_back(p);
                b[rng() % b.size()] = outside[rng() % outside.size()];
                std::sort(b.begin(), b.end());
            }
            std::vector<Block> sorted = blocks;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            const IncidenceStructure e(d.v(), blocks);
            const Verification v = verify_symmetric(e);
            const auto ref = oracle::count_pairs(e.v(), e.blocks());
            REQUIRE(v.ok() == ref.symmetric);
            if (ref.symmetric) CHECK(v.params.lambda == ref.lambda);
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("complement parameters (property)") {
    for (const auto& name : catalog_names()) {
        const IncidenceStructure d = catalog(name).design;
        const DesignParams p = require_symmetric(d);
        const DesignParams c = require_symmetric(complement(d));
        CHECK(c.v == p.v);
        CHECK(c.k == p.v - p.k);
        CHECK(c.lambda == p.v - 2 * p.k + p.lambda);
    }
}

TEST_CASE("incidence queries") {
    const IncidenceStructure d = fano();
    for (Point x = 0; x < 7; ++x) {
        CHECK(d.replication(x) == 3);
        for (Point y = x + 1; y < 7; ++y) CHECK(d.pair_count(x, y) == 1);
    }
    for (std::size_t a = 0; a < 7; ++a) {
        CHECK(d.find_block(d.block(a)) == a);
        for (std::size_t b = a + 1; b < 7; ++b) CHECK(d.block_intersection(a, b) == 1);
    }
    CHECK_FALSE(d.find_block(labels({1, 2, 3})).has_value());
}

TEST_CASE("automorphisms and flag-transitivity") {
    const NamedInstance inst = catalog("fano_complement");
    for (const auto& g : inst.group->generators()) CHECK(is_automorphism(inst.design, g));
    CHECK_FALSE(is_automorphism(inst.design, parse_cycles("(1,2)", 7)));
    CHECK(is_flag_transitive(*inst.group, inst.design));
    CHECK(is_flag_transitive_two_step(*inst.group, inst.design));
    // 7 group elements cannot reach 21 flags
    CHECK_FALSE(is_flag_transitive(cyclic_shift_group(7), fano()));
    CHECK_FALSE(is_flag_transitive_two_step(cyclic_shift_group(7), fano()));
    const PermutationGroup bad(7, {parse_cycles("(1,2)", 7)});
    CHECK(code_of([&] { is_flag_transitive(bad, fano()); }) == Errc::not_automorphism);
}

TEST_CASE("the two flag-transitivity tests agree on every catalog instance (property)") {
    for (const auto& name : catalog_names()) {
        const NamedInstance inst = catalog(name);
        REQUIRE(inst.group.has_value());
        CHECK(is_flag_transitive(*inst.group, inst.design) == is_flag_transitive_two_step(*inst.group, inst.design));
    }
}

TEST_CASE("orbit_design of the imprimitive base block") {
    const PermutationGroup g = parse_group(embedded_file("sigma45.grp"));
    auto [v, base] = parse_base_block(embedded_file("imprimitive45_base.des"));
    CHECK(v == 45);
    CHECK(base == labels({1, 2, 3, 4, 6, 11, 19, 28, 36, 40, 41, 45}));
    const IncidenceStructure d = orbit_design(g, base);
    CHECK(d.num_blocks() == 45);
    CHECK(require_symmetric(d) == DesignParams{45, 12, 3, true});
}

TEST_CASE("design file round trip and errors") {
    const IncidenceStructure d = complement(fano());
    CHECK(parse_design(to_text(d)) == d);
    CHECK(parse_design("# c\nv 3\n1,2 # first\n2, 3\n\n1,3\n").num_blocks() == 3);
    CHECK(code_of([] { parse_design("1,2\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_design("v 3\n1,4\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_design("v 3\n1,2\n2,1\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_design("v 3\n1,1\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_design("v 3\n1,,2\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_base_block("v 3\n1,2\n2,3\n"); }) == Errc::parse);
}
