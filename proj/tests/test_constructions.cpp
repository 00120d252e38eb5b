#include "oracle.hpp"
#include "sdesign/constructions.hpp"
#include "sdesign/error.hpp"

#include <doctest.h>

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

DifferenceSetSpec spec(const std::string& group, std::initializer_list<const char*> elems) {
    DifferenceSetSpec s{AmbientGroup::parse(group), {}};
    for (const char* e : elems) s.base.push_back(s.group.parse_element(e));
    return s;
}

}  // namespace

TEST_CASE("projective spaces have the closed-form parameters (property)") {
    const std::pair<unsigned, unsigned> cases[] = {{3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 7}, {3, 8}, {3, 9},
                                                   {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3}, {6, 2}};
    for (auto [n, q] : cases) {
        CAPTURE(n);
        CAPTURE(q);
        const ProjectiveSpace pg = projective_space(n, PrimePower::from_q(q));
        std::uint64_t qn = 1;
        for (unsigned i = 0; i < n; ++i) qn *= q;
        const DesignParams want{(qn - 1) / (q - 1), (qn / q - 1) / (q - 1), (qn / q / q - 1) / (q - 1), true};
        CHECK(pg.expected == want);
        const auto ref = oracle::count_pairs(pg.design.v(), pg.design.blocks());
        CHECK(ref.symmetric);
        CHECK(require_symmetric(pg.design) == want);
        CHECK(pg.lambda_prime == oracle::is_prime(want.lambda));
    }
}

TEST_CASE("projective space limits") {
    CHECK(code_of([] { projective_space(2, PrimePower::from_q(3)); }) == Errc::invalid_argument);
    CHECK(code_of([] { projective_space(4, PrimePower::from_q(49)); }) == Errc::out_of_range);
}

TEST_CASE("ambient groups: parsing, labels and group axioms (property)") {
    for (const char* s : {"cyclic:11", "ea:2:4", "product:2,8", "product:3,3,2", "q8xz2"}) {
        CAPTURE(s);
        const AmbientGroup g = AmbientGroup::parse(s);
        const std::uint32_t n = g.order();
        for (std::uint32_t x = 0; x < n; ++x) {
            CHECK(g.parse_element(g.label(x)) == x);
            CHECK(g.mul(x, 0) == x);
            CHECK(g.mul(0, x) == x);
            CHECK(g.mul(x, g.inv(x)) == 0);
            for (std::uint32_t y = 0; y < n; ++y)
                for (std::uint32_t z = 0; z < n; ++z) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
        }
    }
    CHECK(AmbientGroup::parse("ea:2:4").order() == 16);
    CHECK(AmbientGroup::parse("product:2,8").name() == "Z2xZ8");
    for (const char* bad : {"cyclic", "cyclic:x", "ea:4:2", "product:", "product:8,16", "z16", "cyclic:65"})
        CHECK_MESSAGE(code_of([&] { AmbientGroup::parse(bad); }) != Errc::internal, bad);
}

TEST_CASE("quaternion relations in Q8 x Z2") {
    const AmbientGroup g = AmbientGroup::quaternion8_z2();
    auto e = [&](const char* s) { return g.parse_element(s); };
    CHECK(g.mul(e("i.0"), e("i.0")) == e("-1.0"));
    CHECK(g.mul(e("i.0"), e("j.0")) == e("k.0"));
    CHECK(g.mul(e("j.0"), e("i.0")) == e("-k.0"));
    CHECK(g.mul(e("k.1"), e("k.1")) == e("-1.0"));
    CHECK(g.label(e("-i.1")) == "-i.1");
    CHECK(code_of([&] { g.parse_element("i.2"); }) == Errc::parse);
}

TEST_CASE("cyclic labels are read modulo n") {
    const AmbientGroup g = AmbientGroup::cyclic(11);
    CHECK(g.parse_element("11") == 0);
    CHECK(g.parse_element("3") == 3);
}

TEST_CASE("difference set checks") {
    const DifferenceCheck qr = check_difference_set(spec("cyclic:11", {"1", "3", "4", "5", "9"}));
    CHECK(qr.ok);
    CHECK(qr.lambda == 2);
    // with 11 read as 0, difference 1 occurs three times: 2-1, 3-2 and 1-0
    const DifferenceCheck bad = check_difference_set(spec("cyclic:11", {"1", "2", "3", "5", "11"}));
    CHECK_FALSE(bad.ok);
    CHECK(code_of([] { develop_difference_set(spec("cyclic:11", {"1", "2", "3", "5", "0"})); }) ==
          Errc::not_difference_set);
}

TEST_CASE("develop_difference_set builds the symmetric design") {
    const IncidenceStructure d = develop_difference_set(spec("cyclic:11", {"1", "3", "4", "5", "9"}));
    CHECK(require_symmetric(d) == DesignParams{11, 5, 2, true});
    CHECK(is_flag_transitive(regular_group(AmbientGroup::cyclic(11)), d) == false);
}

TEST_CASE("find_difference_set round-trips through develop (property)") {
    struct Case {
        const char* group;
        std::uint32_t k;
        std::uint64_t lambda;
    };
    for (const Case& c : {Case{"cyclic:7", 3, 1}, Case{"cyclic:11", 5, 2}, Case{"cyclic:13", 4, 1},
                          Case{"cyclic:15", 7, 3}, Case{"cyclic:21", 5, 1}, Case{"ea:2:4", 6, 2},
                          Case{"product:2,8", 6, 2}, Case{"q8xz2", 6, 2}, Case{"cyclic:31", 6, 1}}) {
        CAPTURE(c.group);
        const AmbientGroup g = AmbientGroup::parse(c.group);
        const auto found = find_difference_set(g, c.k, c.lambda);
        REQUIRE(found.has_value());
        CHECK(found->base.size() == c.k);
        CHECK(found->base.front() == 0);
        CHECK(check_difference_set(*found).ok);
        const IncidenceStructure d = develop_difference_set(*found);
        CHECK(require_symmetric(d) == DesignParams{g.order(), c.k, c.lambda, 2 < c.k && c.k + 1 < g.order()});
        CHECK(oracle::count_pairs(d.v(), d.blocks()).symmetric);
    }
}

TEST_CASE("no (16,6,2) difference set in the cyclic group of order 16") {
    CHECK_FALSE(find_difference_set(AmbientGroup::cyclic(16), 6, 2).has_value());
}

TEST_CASE("regular_group") {
    for (const char* s : {"cyclic:12", "ea:2:4", "q8xz2"}) {
        const AmbientGroup a = AmbientGroup::parse(s);
        const PermutationGroup g = regular_group(a);
        CHECK(g.order() == a.order());
        CHECK(g.is_transitive());
        CHECK(g.point_stabilizer(0).order() == 1);
    }
}

TEST_CASE("catalog instances verify and carry the recorded verdicts") {
    CHECK(catalog_names().size() == 8);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const NamedInstance inst = catalog(name);
        CHECK(inst.name == name);
        CHECK(require_symmetric(inst.design) == inst.expected);
        CHECK(parse_design(to_text(inst.design)) == inst.design);
        REQUIRE(inst.group.has_value());
        for (const auto& g : inst.group->generators()) CHECK(is_automorphism(inst.design, g));
        if (inst.flag_transitive) CHECK(is_flag_transitive(*inst.group, inst.design) == *inst.flag_transitive);
        if (inst.primitive) CHECK(inst.group->is_primitive() == *inst.primitive);
    }
    CHECK(code_of([] { catalog("nope"); }) == Errc::invalid_argument);
}

TEST_CASE("catalog parameters") {
    CHECK(catalog("fano_complement").expected == DesignParams{7, 4, 2, true});
    CHECK(catalog("paley_11_5_2").expected == DesignParams{11, 5, 2, true});
    CHECK(catalog("paley_complement_11_6_3").expected == DesignParams{11, 6, 3, true});
    CHECK(catalog("unitary_45_12_3").expected == DesignParams{45, 12, 3, true});
    CHECK(catalog("imprimitive_45_12_3").expected == DesignParams{45, 12, 3, true});
    for (const char* b : {"biplane16_ea", "biplane16_z2z8", "biplane16_q8z2"})
        CHECK(catalog(b).expected == DesignParams{16, 6, 2, true});
}

TEST_CASE("embedded data files") {
    const auto names = embedded_file_names();
    for (const char* f : {"catalog.txt", "psl2_7.grp", "psl2_11.grp", "psu4_2_45.grp", "sigma45.grp",
                          "unitary45_base.des", "imprimitive45_base.des"})
        CHECK(std::find(names.begin(), names.end(), f) != names.end());
    CHECK(embedded_file("sigma45.grp").find("degree 45") != std::string::npos);
    CHECK(code_of([] { embedded_file("missing.txt"); }) == Errc::invalid_argument);
}
