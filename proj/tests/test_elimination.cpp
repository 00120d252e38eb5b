#include "oracle.hpp"
#include "sdesign/elimination.hpp"
#include "sdesign/error.hpp"

#include <doctest.h>

#include <map>
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

BigInt big(const char* s) { return parse_bigint(s); }

std::vector<AdmissiblePair> pairs_of(std::initializer_list<std::pair<int, int>> l) {
    std::vector<AdmissiblePair> out;
    for (auto [k, lam] : l) out.push_back({k, lam});
    return out;
}

BigInt order_of(const char* family) { return simple_order(GroupFamilySpec::parse(family)); }

// p-adic valuation
unsigned valuation(BigInt n, const BigInt& p) {
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BigInt eval(const IntPoly& f, const BigInt& q) {
    BigInt r = 0;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) r = r * q + BigInt(static_cast<long>(c[i]));
    return r;
}

// g_n(q) written out directly
BigInt g_direct(unsigned n, const BigInt& q) {
    return pow(q, 2 * n - 1) + pow(q, n + 2) - pow(q, n + 1) - pow(q, n) - pow(q, n - 1) + pow(q, 5) - pow(q, 4) -
           pow(q, 3) + q + 1;
}

// An identity of polynomials of degree <= 2n holds iff it holds at 2n + 1 points.
bool identity_by_evaluation(unsigned n, unsigned j, const std::function<BigInt(const BigInt&)>& h,
                            const std::function<BigInt(const BigInt&)>& r) {
    for (long x = 2; x < 2 + 2 * static_cast<long>(n) + 12; ++x) {
        const BigInt q(x);
        if (g_direct(n, q) != h(q) * (pow(q, j) - 1) + r(q)) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// admissible

TEST_CASE("admissible: small cases") {
    CHECK(admissible(7, 24).pairs == pairs_of({{4, 2}}));
    CHECK(admissible(11, 60).pairs == pairs_of({{5, 2}, {6, 3}}));
    CHECK(admissible(45, 576).pairs == pairs_of({{12, 3}}));
    CHECK(admissible(28431, 645120).pairs.empty());
    CHECK(admissible(325, 360, BigInt(5)).pairs.empty());
    // (891, 446, 223): arithmetic-consistent
    CHECK(admissible(891, 446).pairs == pairs_of({{446, 223}}));
    CHECK(BigInt(223) * 890 == BigInt(446) * 445);
}

TEST_CASE("admissible: required lambda filters") {
    CHECK(admissible(11, 60, BigInt(3)).pairs == pairs_of({{6, 3}}));
    CHECK(admissible(11, 60, BigInt(7)).pairs.empty());
}

TEST_CASE("admissible: Tits coprimality flag") {
    CHECK(admissible(45, 576, std::nullopt, BigInt(2)).tits_ok == false);
    CHECK(admissible(45, 576, std::nullopt, BigInt(3)).tits_ok == true);
    CHECK_FALSE(admissible(45, 576).tits_ok.has_value());
}

TEST_CASE("admissible agrees with the full-range scan (property)") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint64_t v = 4 + rng() % 3000;
        std::uint64_t bound = 1;
        while (bound < 100000) bound *= 2 + rng() % 10;
        std::optional<std::uint64_t> lam;
        if (trial % 5 == 0) lam = 2 + rng() % 20;
        std::optional<BigInt> lam_big;
        if (lam) lam_big = BigInt(static_cast<unsigned long>(*lam));
        const AdmissibleResult r = admissible(BigInt(static_cast<unsigned long>(v)),
                                              BigInt(static_cast<unsigned long>(bound)), lam_big);
        const auto ref = oracle::admissible(v, bound, lam);
        REQUIRE(r.pairs.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(r.pairs[i].k == static_cast<unsigned long>(ref[i].first));
            CHECK(r.pairs[i].lambda == static_cast<unsigned long>(ref[i].second));
        }
        // each pair satisfies the four conditions
        for (const auto& p : r.pairs) {
            const BigInt vv(static_cast<unsigned long>(v));
            CHECK(BigInt(static_cast<unsigned long>(bound)) % p.k == 0);
            CHECK(p.k * (p.k - 1) == p.lambda * (vv - 1));
            CHECK(is_prime(p.lambda));
            CHECK(p.lambda * vv < p.k * p.k);
        }
    }
}

TEST_CASE("admissible: output does not depend on the rho seed") {
    const BigInt v(109221651), bound = big("6710027434028590694400");
    const AdmissibleResult a = admissible(v, bound, std::nullopt, std::nullopt, 1);
    const AdmissibleResult b = admissible(v, bound, std::nullopt, std::nullopt, 977);
    CHECK(a.pairs.empty());
    CHECK(a.pairs == b.pairs);
    CHECK(a.bound_factors.to_string() == b.bound_factors.to_string());
    CHECK(a.divisors_scanned == b.divisors_scanned);
}

TEST_CASE("format_pairs") {
    CHECK(format_pairs({}) == "EMPTY");
    CHECK(format_pairs(pairs_of({{5, 2}, {6, 3}})) == "(5,2) (6,3)");
}

// ---------------------------------------------------------------------------
// catalog

TEST_CASE("default catalog shape") {
    const auto& rows = default_catalog();
    std::map<std::string, int> per_table;
    for (const auto& r : rows) ++per_table[r.table];
    CHECK(per_table == std::map<std::string, int>{{"INLINE", 3}, {"T1", 4}, {"T3", 6}, {"T4", 3},
                                                   {"T5", 2},     {"T6", 10}, {"T7", 5}});
    CHECK(select_rows(rows, "T6").size() == 10);
    CHECK(select_rows(rows, "all").size() == rows.size());
    const auto one = select_rows(rows, "T6.3");
    REQUIRE(one.size() == 1);
    CHECK(one[0].v == 1416290265);
    CHECK(one[0].k_bound == 185794560);
    CHECK(select_rows(rows, "T4")[0].required_lambda == BigInt(5));
    CHECK(code_of([&] { select_rows(rows, "T9"); }) == Errc::invalid_argument);
}

TEST_CASE("catalog rows given in the task description are present") {
    const std::vector<std::pair<const char*, const char*>> want = {
        {"325", "360"},
        {"7381", "3960"},
        {"41905", "14688"},
        {"28431", "645120"},
        {"1416796875", "645120"},
        {"1416290265", "185794560"},
        {"3741072100580529", "81749606400"},
        {"564416277323644023433155", "51011754393600"},
        {"3838185", "15482880"},
        {"6906884765625", "15482880"},
        {"27575442453379079259", "2942985830400"},
        {"1399578039873", "3715891200"},
        {"32152618284915465959467883895", "1428329123020800"},
        {"209223", "388177920"},
        {"102703125", "1392768000000"},
        {"6075747307", "296651671142400"},
        {"127287028233", "32486299582464000"},
        {"16409061", "158469754060800"},
        {"32549121", "158469754060800"},
        {"5898080746972747508175", "18345885696"},
        {"181234396436428964138031005859375", "286654464000000"},
        {"109221651", "6710027434028590694400"},
        {"22113", "415720"},
        {"891", "446"},
    };
    for (auto [v, b] : want) {
        bool found = false;
        for (const auto& r : default_catalog()) found |= r.v == big(v) && r.k_bound == big(b);
        CHECK_MESSAGE(found, v);
    }
}

TEST_CASE("parse_catalog") {
    const auto rows = parse_catalog("# c\nX; G; H; 11; 60; ; pairs=(5,2)(6,3)\nX; G; H; 7; 24\nY; G; ; 891; 446; 223; external\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].id == "X.1");
    CHECK(rows[1].id == "X.2");
    CHECK(rows[2].id == "Y.1");
    CHECK(rows[0].expect == Expectation::pairs);
    CHECK(rows[0].expected_pairs == pairs_of({{5, 2}, {6, 3}}));
    CHECK(rows[1].expect == Expectation::empty);
    CHECK(rows[2].required_lambda == BigInt(223));
    CHECK(rows[2].expect == Expectation::external);
    CHECK(code_of([] { parse_catalog("X; G; H; 11\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_catalog("X; G; H; eleven; 60\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_catalog("X; G; H; 11; 60; ; maybe\n"); }) == Errc::parse);
}

TEST_CASE("run_catalog: every row passes and order is independent of workers") {
    std::vector<std::string> seen;
    const auto serial = run_catalog(default_catalog(), 1, default_rho_seed,
                                    [&](const RowReport& r) { seen.push_back(r.row.id); });
    const auto parallel = run_catalog(default_catalog(), 4);
    REQUIRE(serial.size() == default_catalog().size());
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(seen[i] == default_catalog()[i].id);
        CHECK(serial[i].status == RowStatus::pass);
        CHECK(machine_line(serial[i]) == machine_line(parallel[i]));
        CHECK(serial[i].note == parallel[i].note);
        if (serial[i].row.table != "T1" && serial[i].row.expect != Expectation::external)
            CHECK(serial[i].result.pairs.empty());
    }
    const RowReport& last = serial.back();
    CHECK(machine_line(last) == "#R INLINE.3 PASS (446,223)");
    CHECK(last.note == "arithmetic-consistent; excluded by external classification");
}

TEST_CASE("run_catalog: a mismatched expectation fails") {
    const auto rows = parse_catalog("Z; G; H; 11; 60; ; pairs=(5,2)\nZ; G; H; 7; 24\nZ; G; H; 7; 24; ; external\n");
    const auto rep = run_catalog(rows);
    CHECK(rep[0].status == RowStatus::fail);
    CHECK(rep[1].status == RowStatus::fail);
    CHECK(rep[2].status == RowStatus::pass);
    CHECK(machine_line(rep[1]) == "#R Z.2 FAIL (4,2)");
}

// ---------------------------------------------------------------------------
// group orders

TEST_CASE("simple group orders") {
    CHECK(order_of("PSL(2,7)") == 168);
    CHECK(order_of("PSL(2,11)") == 660);
    CHECK(order_of("PSL(3,3)") == 5616);
    CHECK(order_of("PSL(5,2)") == 9999360);
    CHECK(order_of("PSU(3,3)") == 6048);
    CHECK(order_of("PSU(4,3)") == 3265920);
    CHECK(order_of("PSp(6,2)") == 1451520);
    CHECK(order_of("Omega(7,3)") == big("4585351680"));
    CHECK(order_of("POmega+(8,2)") == 174182400);
    CHECK(order_of("POmega-(8,2)") == 197406720);
}

TEST_CASE("exceptional isomorphisms give equal orders") {
    CHECK(order_of("PSL(2,4)") == 60);
    CHECK(order_of("PSL(2,5)") == 60);
    CHECK(order_of("PSL(2,9)") == 360);
    CHECK(order_of("PSL(4,2)") == 20160);
    CHECK(order_of("PSL(3,4)") == 20160);
    CHECK(order_of("PSp(4,3)") == order_of("PSU(4,2)"));
    CHECK(order_of("PSU(4,2)") == 25920);
}

TEST_CASE("family ranges") {
    CHECK(code_of([] { GroupFamilySpec::parse("PSL(2,3)"); }) == Errc::invalid_argument);
    CHECK(code_of([] { GroupFamilySpec::parse("PSU(3,2)"); }) == Errc::invalid_argument);
    CHECK(code_of([] { GroupFamilySpec::parse("PSp(4,2)"); }) == Errc::invalid_argument);
    CHECK(code_of([] { GroupFamilySpec::parse("Omega(7,2)"); }) == Errc::invalid_argument);
    CHECK(code_of([] { GroupFamilySpec::parse("PSL(3,6)"); }) == Errc::invalid_argument);
    CHECK(code_of([] { GroupFamilySpec::parse("PSL[3,4]"); }) == Errc::parse);
    CHECK(GroupFamilySpec::parse("POmega-(10,3)").name() == "POmega-(10,3)");
}

TEST_CASE("the p-part of |X| is q^N (property)") {
    for (unsigned long q = 2; q <= 81; ++q) {
        const BigInt Q(q);
        PrimePower pq(2, 1);
        try {
            pq = PrimePower::from_q(Q);
        } catch (const Error&) {
            continue;
        }
        CAPTURE(q);
        auto check_family = [&](Family f, unsigned n, unsigned long exponent) {
            GroupFamilySpec s{f, 0, pq};
            try {
                s = GroupFamilySpec::make(f, n, pq);
            } catch (const Error&) {
                return;
            }
            CHECK(valuation(simple_order(s), pq.p) == pq.a * exponent);
        };
        for (unsigned n = 2; n <= 6; ++n) {
            check_family(Family::PSL, n, n * (n - 1) / 2);
            check_family(Family::PSU, n, n * (n - 1) / 2);
        }
        for (unsigned m = 2; m <= 4; ++m) {
            check_family(Family::PSp, 2 * m, m * m);
            check_family(Family::OmegaOdd, 2 * m + 1, m * m);
            check_family(Family::POmegaPlus, 2 * m, m * (m - 1));
            check_family(Family::POmegaMinus, 2 * m, m * (m - 1));
        }
    }
}

TEST_CASE("outer automorphism group orders") {
    auto out = [](const char* s) { return out_order(GroupFamilySpec::parse(s)); };
    CHECK(out("PSL(2,7)").value == 2);
    CHECK(out("PSL(2,8)").value == 3);
    CHECK(out("PSL(3,4)").value == 12);
    CHECK(out("PSL(4,2)").value == 2);
    CHECK(out("PSU(3,3)").value == 2);
    CHECK(out("PSU(4,2)").value == 2);
    CHECK(out("PSp(4,3)").value == 2);
    CHECK(out("PSp(4,4)").value == 4);
    CHECK(out("PSp(6,2)").value == 1);
    CHECK(out("Omega(7,3)").value == 2);
    CHECK(out("PSL(3,4)").exact);
    const OutOrder p = out("POmega+(8,2)");
    CHECK_FALSE(p.exact);
    CHECK(p.value % 6 == 0);
}

// ---------------------------------------------------------------------------
// bounds

TEST_CASE("check_bounds: stated examples") {
    BoundParams p;
    p.n = 5;
    p.q = 3;
    CHECK(check_bounds(Bound::order_psl, p));
    BoundParams f;
    f.t = 5;
    CHECK(check_bounds(Bound::factorial_5, f));
    CHECK(BigInt(120) * 120 * 120 < pow(5, 11));
    BoundParams pr;
    pr.n = 3;
    pr.q = 2;
    CHECK(check_bounds(Bound::product, pr));
}

TEST_CASE("check_bounds: the strict upper bounds are equalities for SL_2 and SU_3") {
    for (unsigned long qq : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 11ul}) {
        const BigInt q(qq);
        // |SL_2(q)| = q(q^2 - 1) = (1 - q^-2) q^3
        CHECK(q * (q * q - 1) * q * q == (q * q - 1) * pow(q, 3));
        BoundParams p;
        p.n = 2;
        p.q = q;
        CHECK_FALSE(check_bounds(Bound::order_psl, p));
        // |SU_3(q)| = q^3 (q^2 - 1)(q^3 + 1) = (1 - q^-2)(1 + q^-3) q^8
        CHECK(pow(q, 3) * (q * q - 1) * (pow(q, 3) + 1) * pow(q, 5) == (q * q - 1) * (pow(q, 3) + 1) * pow(q, 8));
        p.n = 3;
        CHECK_FALSE(check_bounds(Bound::order_psu, p));
        p.n = 4;
        CHECK(check_bounds(Bound::order_psl, p));
        CHECK(check_bounds(Bound::order_psu, p));
    }
}

TEST_CASE("check_bounds hold away from the edges (property)") {
    for (unsigned long qq : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
        BoundParams p;
        p.q = qq;
        for (p.n = 3; p.n <= 8; ++p.n) CHECK(check_bounds(Bound::order_psl, p));
        for (p.n = 4; p.n <= 8; ++p.n) CHECK(check_bounds(Bound::order_psu, p));
        p.n = 2;
        CHECK(check_bounds(Bound::order_psu, p));
        for (p.n = 4; p.n <= 12; p.n += 2) CHECK(check_bounds(Bound::order_psp, p));
        if (qq % 2)
            for (p.n = 5; p.n <= 11; p.n += 2) CHECK(check_bounds(Bound::order_omega_odd, p));
        for (p.n = 6; p.n <= 12; p.n += 2) {
            CHECK(check_bounds(Bound::order_pomega_plus, p));
            CHECK(check_bounds(Bound::order_pomega_minus, p));
        }
        for (p.n = 3; p.n <= 12; ++p.n) CHECK(check_bounds(Bound::product, p));
    }
    for (unsigned t = 4; t <= 30; ++t) {
        BoundParams p;
        p.t = t;
        if (t >= 5) CHECK(check_bounds(Bound::factorial_5, p));
        CHECK(check_bounds(Bound::factorial_2, p));
    }
}

TEST_CASE("check_bounds: large subgroup and ranges") {
    BoundParams p;
    p.x_order = 168;
    p.out_order = 2;
    p.h_order = 24;
    CHECK(check_bounds(Bound::large_subgroup, p));
    p.out_order = 1;
    p.h_order = 5;
    CHECK_FALSE(check_bounds(Bound::large_subgroup, p));

    BoundParams bad;
    bad.n = 1;
    bad.q = 2;
    CHECK(code_of([&] { check_bounds(Bound::order_psl, bad); }) == Errc::out_of_range);
    bad.n = 5;
    CHECK(code_of([&] { check_bounds(Bound::order_psp, bad); }) == Errc::out_of_range);
    bad.t = 4;
    CHECK(code_of([&] { check_bounds(Bound::factorial_5, bad); }) == Errc::out_of_range);
    bad.n = 4;
    bad.q = 6;
    CHECK(code_of([&] { check_bounds(Bound::product, bad); }) == Errc::invalid_argument);
    CHECK(parse_bound("order-pomega+") == Bound::order_pomega_plus);
    CHECK(std::string(bound_name(Bound::factorial_5)) == "factorial5");
    CHECK(code_of([] { parse_bound("order-e8"); }) == Errc::invalid_argument);
}

// ---------------------------------------------------------------------------
// division identities

TEST_CASE("IntPoly arithmetic") {
    const IntPoly a{{1, 2}, {-1, 0}};  // q^2 - 1
    const IntPoly b{{1, 1}, {1, 0}};   // q + 1
    CHECK((a * b).to_string() == "q^3 + q^2 - q - 1");
    CHECK((a - a).coefficients().empty());
    CHECK((a + b) == IntPoly{{1, 2}, {1, 1}});
    CHECK(IntPoly{}.to_string() == "0");
}

TEST_CASE("division_g matches the closed form") {
    for (unsigned n = 7; n <= 20; ++n)
        for (long x = 2; x < 8; ++x) CHECK(eval(division_g(n), BigInt(x)) == g_direct(n, BigInt(x)));
}

TEST_CASE("tabulated division rows for t = 3, 4, 5 hold (evaluation oracle)") {
    for (unsigned n = 7; n <= 40; ++n)
        for (unsigned t = 3; t <= 5; ++t) {
            CAPTURE(n);
            CAPTURE(t);
            const IntPoly h = division_h(n, t), r = division_r(n, t);
            const bool by_eval = identity_by_evaluation(
                n, n - t, [&](const BigInt& q) { return eval(h, q); }, [&](const BigInt& q) { return eval(r, q); });
            CHECK(by_eval);
            CHECK(check_division_identity(n, t) == by_eval);
        }
}

TEST_CASE("the tabulated t = 6 row holds only at n = 15") {
    for (unsigned n = 8; n <= 40; ++n) {
        CAPTURE(n);
        const IntPoly h = division_h(n, 6), r = division_r(n, 6);
        const bool by_eval = identity_by_evaluation(
            n, n - 6, [&](const BigInt& q) { return eval(h, q); }, [&](const BigInt& q) { return eval(r, q); });
        CHECK(check_division_identity(n, 6) == by_eval);
        CHECK(by_eval == (n == 15));
    }
    CHECK_FALSE(check_division_identity(12, 6));
}

TEST_CASE("a corrected t = 6 row holds for every n (evaluation oracle)") {
    // h = q^(n+5) + q^11 + q^8 - q^7 - q^6 - q^5, r = q^11 + q^8 - q^7 - q^6 - q^4 - q^3 + q + 1
    for (unsigned n = 8; n <= 40; ++n) {
        auto h = [&](const BigInt& q) -> BigInt {
            return pow(q, n + 5) + pow(q, 11) + pow(q, 8) - pow(q, 7) - pow(q, 6) - pow(q, 5);
        };
        auto r = [](const BigInt& q) -> BigInt {
            return pow(q, 11) + pow(q, 8) - pow(q, 7) - pow(q, 6) - pow(q, 4) - pow(q, 3) + q + 1;
        };
        CHECK(identity_by_evaluation(n, n - 6, h, r));
        const IntPoly hp{{1, n + 5}, {1, 11}, {1, 8}, {-1, 7}, {-1, 6}, {-1, 5}};
        const IntPoly rp{{1, 11}, {1, 8}, {-1, 7}, {-1, 6}, {-1, 4}, {-1, 3}, {1, 1}, {1, 0}};
        CHECK(division_identity_holds(n, n - 6, hp, rp));
    }
}

TEST_CASE("division identity: examples, perturbation and range") {
    CHECK(check_division_identity(10, 3));
    IntPoly r = division_r(10, 3);
    r.add_term(1, 0);
    CHECK_FALSE(division_identity_holds(10, 7, division_h(10, 3), r));
    CHECK(code_of([] { check_division_identity(7, 6); }) == Errc::out_of_range);
    CHECK(code_of([] { check_division_identity(10, 7); }) == Errc::out_of_range);
    CHECK(code_of([] { check_division_identity(6, 3); }) == Errc::out_of_range);
}

// ---------------------------------------------------------------------------
// parameter families

TEST_CASE("two-parameter families: examples") {
    const auto three = two_parameter_families(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].family == 'b');
    CHECK((three[0].v == 45 && three[0].k == 12 && three[0].c == 9 && three[0].d == 5 && three[0].l == 3));
    CHECK((three[1].c == 5 && three[1].d == 9 && three[1].l == 2));
    CHECK(three[2].family == 'c');
    CHECK((three[2].v == 45 && three[2].k == 12 && three[2].c == 9 && three[2].d == 5 && three[2].l == 3));

    const auto seven = two_parameter_families(7);
    REQUIRE(seven.size() == 3);
    CHECK((seven[0].v == 441 && seven[0].k == 56));
    CHECK((seven[2].v == 247 && seven[2].k == 42 && seven[2].c == 13 && seven[2].d == 19 && seven[2].l == 3));

    const auto five = two_parameter_families(5);
    CHECK(five.size() == 2);
    CHECK(code_of([] { two_parameter_families(9); }) == Errc::invalid_argument);
}

TEST_CASE("two-parameter families satisfy the design identities (property)") {
    for (unsigned long l = 2; l <= 3000; ++l) {
        if (!oracle::is_prime(l)) continue;
        const auto tuples = two_parameter_families(l);
        bool has_c = false;
        for (const auto& t : tuples) {
            CHECK(t.k * (t.k - 1) == t.lambda * (t.v - 1));
            CHECK(t.c * t.d == t.v);
            has_c |= t.family == 'c';
        }
        CHECK(has_c == (l % 6 == 1 || l % 6 == 3));
    }
}
