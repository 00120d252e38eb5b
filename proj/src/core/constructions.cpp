#include "sdesign/constructions.hpp"

#include "sdesign/error.hpp"
#include "sdesign/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sdesign {

// ---------------------------------------------------------------------------
// Projective spaces

ProjectiveSpace projective_space(unsigned n, const PrimePower& pq) {
    if (n < 3) fail(Errc::invalid_argument, "projective_space needs n >= 3");
    const BigInt v_big = (pow(pq.q, n) - 1) / (pq.q - 1);
    if (v_big > 20000) fail(Errc::out_of_range, "PG(" + std::to_string(n - 1) + "," + pq.q.get_str() + ") is too large");
    FieldTable f(pq);
    const std::uint32_t q = f.order();

    // normalized vectors (first nonzero coordinate 1), lexicographic in coordinates
    std::vector<std::vector<FieldTable::Elem>> pts;
    std::vector<FieldTable::Elem> x(n, 0);
    for (;;) {
        std::size_t lead = 0;
        while (lead < n && x[lead] == 0) ++lead;
        if (lead < n && x[lead] == 1) pts.push_back(x);
        std::size_t i = n;
        while (i > 0 && ++x[i - 1] == q) x[--i] = 0;
        if (i == 0) break;
    }

    std::vector<Block> blocks;
    blocks.reserve(pts.size());
    for (const auto& a : pts) {
        Block b;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            FieldTable::Elem s = 0;
            for (unsigned i = 0; i < n; ++i) s = f.add(s, f.mul(a[i], pts[j][i]));
            if (s == 0) b.push_back(static_cast<Point>(j));
        }
        blocks.push_back(std::move(b));
    }

    ProjectiveSpace out{IncidenceStructure(pts.size(), std::move(blocks)), {}, false};
    const BigInt k = (pow(pq.q, n - 1) - 1) / (pq.q - 1);
    const BigInt lambda = (pow(pq.q, n - 2) - 1) / (pq.q - 1);
    out.expected = {v_big.get_ui(), k.get_ui(), lambda.get_ui(), 2 < k && k + 1 < v_big};
    out.lambda_prime = is_prime(lambda);
    return out;
}

// ---------------------------------------------------------------------------
// Ambient groups

namespace {

// Q8 in the order 1, -1, i, -i, j, -j, k, -k; entry [a][b] is a*b.
constexpr std::uint8_t q8_table[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 1, 0, 6, 7, 5, 4}, {3, 2, 0, 1, 7, 6, 4, 5},
    {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2}, {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1},
};
constexpr const char* q8_names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::uint32_t parse_small(const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(Errc::parse, "expected a small non-negative integer, got '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

AmbientGroup AmbientGroup::direct_product(std::vector<std::uint32_t> moduli) {
    if (moduli.empty()) fail(Errc::invalid_argument, "direct product needs at least one factor");
    AmbientGroup g;
    std::uint64_t order = 1;
    std::ostringstream name;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) fail(Errc::invalid_argument, "cyclic factor of order 0");
        order *= moduli[i];
        if (order > 64) fail(Errc::out_of_range, "ambient groups are limited to order 64");
        name << (i ? "xZ" : "Z") << moduli[i];
    }
    g.order_ = static_cast<std::uint32_t>(order);
    g.moduli_ = std::move(moduli);
    g.name_ = name.str();
    return g;
}

AmbientGroup AmbientGroup::cyclic(std::uint32_t n) { return direct_product({n}); }

AmbientGroup AmbientGroup::elementary_abelian(std::uint32_t p, unsigned a) {
    if (a == 0 || !is_prime(BigInt(static_cast<unsigned long>(p))))
        fail(Errc::invalid_argument, "elementary abelian group needs a prime and a positive rank");
    AmbientGroup g = direct_product(std::vector<std::uint32_t>(a, p));
    g.name_ = "Z" + std::to_string(p) + "^" + std::to_string(a);
    return g;
}

AmbientGroup AmbientGroup::quaternion8_z2() {
    AmbientGroup g;
    g.order_ = 16;
    g.name_ = "Q8xZ2";
    return g;
}

AmbientGroup AmbientGroup::parse(const std::string& spec) {
    if (spec == "q8xz2") return quaternion8_z2();
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "cyclic") return cyclic(parse_small(parts[1]));
    if (parts.size() == 3 && parts[0] == "ea") return elementary_abelian(parse_small(parts[1]), parse_small(parts[2]));
    if (parts.size() == 2 && parts[0] == "product") {
        std::vector<std::uint32_t> m;
        for (const auto& s : split(parts[1], ',')) m.push_back(parse_small(s));
        return direct_product(m);
    }
    fail(Errc::parse, "unknown ambient group '" + spec + "' (use cyclic:N, ea:P:A, product:M1,M2,... or q8xz2)");
}

std::uint32_t AmbientGroup::mul(std::uint32_t x, std::uint32_t y) const {
    if (moduli_.empty()) return 2u * q8_table[x / 2][y / 2] + ((x + y) % 2);
    std::uint32_t r = 0, scale = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        const std::uint32_t m = moduli_[i];
        r += ((x % m + y % m) % m) * scale;
        x /= m;
        y /= m;
        scale *= m;
    }
    return r;
}

std::uint32_t AmbientGroup::inv(std::uint32_t x) const {
    for (std::uint32_t y = 0; y < order_; ++y)
        if (mul(x, y) == 0) return y;
    fail(Errc::internal, "element without inverse");
}

std::string AmbientGroup::label(std::uint32_t x) const {
    if (moduli_.empty()) return std::string(q8_names[x / 2]) + "." + std::to_string(x % 2);
    std::vector<std::uint32_t> digits(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        digits[i] = x % moduli_[i];
        x /= moduli_[i];
    }
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) out += (i ? "." : "") + std::to_string(digits[i]);
    return out;
}

std::uint32_t AmbientGroup::parse_element(const std::string& text) const {
    auto parts = split(text, '.');
    if (moduli_.empty()) {
        if (parts.size() != 2) fail(Errc::parse, "Q8xZ2 element must look like -i.1, got '" + text + "'");
        for (std::uint32_t u = 0; u < 8; ++u)
            if (parts[0] == q8_names[u]) {
                std::uint32_t z = parse_small(parts[1]);
                if (z > 1) break;
                return 2 * u + z;
            }
        fail(Errc::parse, "bad Q8xZ2 element '" + text + "'");
    }
    if (parts.size() != moduli_.size())
        fail(Errc::parse, "element '" + text + "' needs " + std::to_string(moduli_.size()) + " coordinates");
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // a single coordinate is read modulo n, so the label n names residue 0
        std::uint32_t d = parse_small(parts[i]);
        if (moduli_.size() > 1 && d >= moduli_[i]) fail(Errc::parse, "coordinate out of range in '" + text + "'");
        r = r * moduli_[i] + d % moduli_[i];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Difference sets

DifferenceCheck check_difference_set(const DifferenceSetSpec& spec) {
    const AmbientGroup& g = spec.group;
    std::vector<std::uint32_t> base = spec.base;
    std::sort(base.begin(), base.end());
    if (base.empty() || base.back() >= g.order()) fail(Errc::invalid_argument, "base set elements out of range");
    if (std::adjacent_find(base.begin(), base.end()) != base.end())
        fail(Errc::invalid_argument, "base set repeats an element");
    std::vector<std::uint64_t> count(g.order(), 0);
    for (std::uint32_t x : base)
        for (std::uint32_t y : base)
            if (x != y) ++count[g.mul(x, g.inv(y))];
    DifferenceCheck r;
    if (g.order() == 1) {
        r.ok = true;
        return r;
    }
    r.lambda = count[1];
    for (std::uint32_t e = 1; e < g.order(); ++e)
        if (count[e] != r.lambda) {
            r.bad_element = e;
            r.bad_count = count[e];
            return r;
        }
    r.ok = true;
    return r;
}

IncidenceStructure develop_difference_set(const DifferenceSetSpec& spec) {
    DifferenceCheck c = check_difference_set(spec);
    if (!c.ok)
        fail(Errc::not_difference_set, "not a difference set in " + spec.group.name() + ": element " +
                                           spec.group.label(c.bad_element) + " occurs " +
                                           std::to_string(c.bad_count) + " times as a difference, element " +
                                           spec.group.label(1) + " occurs " + std::to_string(c.lambda));
    std::vector<Block> blocks;
    for (std::uint32_t t = 0; t < spec.group.order(); ++t) {
        Block b;
        for (std::uint32_t d : spec.base) b.push_back(spec.group.mul(d, t));
        blocks.push_back(std::move(b));
    }
    return IncidenceStructure(spec.group.order(), std::move(blocks));
}

std::optional<DifferenceSetSpec> find_difference_set(const AmbientGroup& group, std::uint32_t k,
                                                     std::uint64_t lambda) {
    const std::uint32_t n = group.order();
    if (k == 0 || k > n) return std::nullopt;
    if (std::uint64_t(k) * (k - 1) != lambda * (n - 1)) return std::nullopt;

    std::vector<std::uint32_t> inv(n);
    for (std::uint32_t x = 0; x < n; ++x) inv[x] = group.inv(x);
    std::vector<std::uint64_t> count(n, 0);
    std::vector<std::uint32_t> chosen{0};

    // returns true when `chosen` has been completed
    auto extend = [&](auto&& self, std::uint32_t next) -> bool {
        if (chosen.size() == k) return true;
        for (std::uint32_t x = next; x + (k - chosen.size()) <= n; ++x) {
            std::vector<std::uint32_t> touched;
            bool ok = true;
            for (std::uint32_t y : chosen) {
                for (std::uint32_t d : {group.mul(x, inv[y]), group.mul(y, inv[x])}) {
                    touched.push_back(d);
                    if (++count[d] > lambda) ok = false;
                }
            }
            if (ok) {
                chosen.push_back(x);
                if (self(self, x + 1)) return true;
                chosen.pop_back();
            }
            for (std::uint32_t d : touched) --count[d];
        }
        return false;
    };
    if (!extend(extend, 1)) return std::nullopt;
    return DifferenceSetSpec{group, chosen};
}

PermutationGroup regular_group(const AmbientGroup& group) {
    const std::uint32_t n = group.order();
    std::vector<Permutation> gens;
    for (std::uint32_t h = 1; h < n; ++h) {
        std::vector<Point> img(n);
        for (std::uint32_t x = 0; x < n; ++x) img[x] = group.mul(x, h);
        Permutation p(std::move(img));
        if (!PermutationGroup(n, gens).contains(p)) gens.push_back(std::move(p));
    }
    return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_shift_group(std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    return PermutationGroup(n, {Permutation(std::move(img))});
}

// ---------------------------------------------------------------------------
// Named catalog

namespace {

Block labels(std::initializer_list<Point> one_based) {
    Block b;
    for (Point x : one_based) b.push_back(x - 1);
    return b;
}

NamedInstance biplane(const std::string& name, const AmbientGroup& g, const std::string& where) {
    auto spec = find_difference_set(g, 6, 2);
    if (!spec) fail(Errc::internal, "no (16,6,2) difference set found in " + g.name());
    NamedInstance inst{name, "(16,6,2) biplane developed from a difference set in " + where,
                       develop_difference_set(*spec), regular_group(g), "right regular representation of " + g.name(),
                       {16, 6, 2, true}, false, false, ""};
    std::string base;
    for (std::uint32_t x : spec->base) base += (base.empty() ? "" : " ") + g.label(x);
    inst.note = "difference set {" + base + "}; the carried group is the translation group only, so it is "
                "neither flag-transitive nor primitive; the full automorphism group is not computed";
    return inst;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "fano_complement", "paley_11_5_2",  "paley_complement_11_6_3", "unitary_45_12_3",
        "imprimitive_45_12_3", "biplane16_ea", "biplane16_z2z8",       "biplane16_q8z2",
    };
    return names;
}

NamedInstance catalog(const std::string& name) {
    if (name == "fano_complement") {
        IncidenceStructure fano = orbit_design(cyclic_shift_group(7), labels({1, 2, 4}));
        return {name, "complement of the Fano plane (lines: translates of {1,2,4} mod 7)", complement(fano),
                parse_group(embedded_file("psl2_7.grp")), "PSL(2,7)", {7, 4, 2, true}, true, true, ""};
    }
    if (name == "paley_11_5_2" || name == "paley_complement_11_6_3") {
        // label 11 stands for residue 0
        IncidenceStructure paley = orbit_design(cyclic_shift_group(11), labels({1, 3, 4, 5, 9}));
        const std::string note = "base block: the quadratic residues mod 11";
        if (name == "paley_11_5_2")
            return {name, "Paley (11,5,2) biplane: translates of {1,3,4,5,9} mod 11", paley,
                    parse_group(embedded_file("psl2_11.grp")), "PSL(2,11)", {11, 5, 2, true}, true, true, note};
        return {name, "complement of the Paley (11,5,2) biplane", complement(paley),
                parse_group(embedded_file("psl2_11.grp")), "PSL(2,11)", {11, 6, 3, true}, true, true, note};
    }
    if (name == "unitary_45_12_3") {
        PermutationGroup g = parse_group(embedded_file("psu4_2_45.grp"));
        auto [v, base] = parse_base_block(embedded_file("unitary45_base.des"));
        return {name, "(45,12,3) design on the isotropic points of the Hermitian surface in PG(3,4)",
                orbit_design(g, base), g, "PSU(4,2)", {45, 12, 3, true}, true, true,
                "block of a point: the other points collinear with it"};
    }
    if (name == "imprimitive_45_12_3") {
        PermutationGroup g = parse_group(embedded_file("sigma45.grp"));
        auto [v, base] = parse_base_block(embedded_file("imprimitive45_base.des"));
        return {name, "point-imprimitive (45,12,3) design from a group of order 3240", orbit_design(g, base), g,
                "sigma1..sigma5 (order 3240)", {45, 12, 3, true}, true, false, ""};
    }
    if (name == "biplane16_ea") return biplane(name, AmbientGroup::elementary_abelian(2, 4), "Z2^4");
    if (name == "biplane16_z2z8") return biplane(name, AmbientGroup::direct_product({2, 8}), "Z2 x Z8");
    if (name == "biplane16_q8z2") return biplane(name, AmbientGroup::quaternion8_z2(), "Q8 x Z2");
    fail(Errc::invalid_argument, "unknown catalog name '" + name + "'");
}

}  // namespace sdesign

// ---------------------------------------------------------------------------
// Embedded data

namespace sdesign::detail {
const std::vector<std::pair<std::string, std::string>>& embedded_files();
}

namespace sdesign {

const std::string& embedded_file(const std::string& name) {
    for (const auto& [n, text] : detail::embedded_files())
        if (n == name) return text;
    fail(Errc::invalid_argument, "no embedded data file '" + name + "'");
}

std::vector<std::string> embedded_file_names() {
    std::vector<std::string> out;
    for (const auto& f : detail::embedded_files()) out.push_back(f.first);
    return out;
}

}  // namespace sdesign
