#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sdesign::oracle {

std::optional<std::uint64_t> closure_order(std::size_t degree, const std::vector<Images>& gens, std::uint64_t cap) {
    Images id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
    std::set<Images> seen{id};
    std::vector<Images> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const Images& g : gens) {
            Images h(degree);
            for (std::size_t i = 0; i < degree; ++i) h[i] = g[queue[qi][i]];
            if (seen.insert(h).second) {
                if (seen.size() > cap) return std::nullopt;
                queue.push_back(std::move(h));
            }
        }
    }
    return seen.size();
}

PairCount count_pairs(std::size_t v, const std::vector<std::vector<std::uint32_t>>& blocks) {
    PairCount r;
    r.v = v;
    if (blocks.size() != v || v == 0) return r;
    auto contains = [](const std::vector<std::uint32_t>& b, std::uint32_t x) {
        for (std::uint32_t y : b)
            if (y == x) return true;
        return false;
    };
    r.k = blocks[0].size();
    for (const auto& b : blocks)
        if (b.size() != r.k) return r;
    std::optional<std::uint64_t> lambda;
    for (std::uint32_t x = 0; x < v; ++x)
        for (std::uint32_t y = x + 1; y < v; ++y) {
            std::uint64_t c = 0;
            for (const auto& b : blocks) c += contains(b, x) && contains(b, y);
            if (!lambda) lambda = c;
            if (c != *lambda) return r;
        }
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) {
            std::uint64_t c = 0;
            for (std::uint32_t x = 0; x < v; ++x) c += contains(blocks[i], x) && contains(blocks[j], x);
            if (c != lambda.value_or(0)) return r;
        }
    r.lambda = lambda.value_or(0);
    r.symmetric = true;
    return r;
}

std::vector<std::uint32_t> minimal_block(std::size_t degree, const std::vector<Images>& gens, std::uint32_t a,
                                         std::uint32_t b) {
    if (degree > 20) throw std::invalid_argument("exhaustive block search is limited to degree 20");
    using Mask = std::uint32_t;
    const Mask must = (Mask{1} << a) | (Mask{1} << b);
    auto image = [&](Mask s, const Images& g) {
        Mask r = 0;
        for (std::size_t i = 0; i < degree; ++i)
            if (s >> i & 1) r |= Mask{1} << g[i];
        return r;
    };
    // S is a block iff its images under the group are pairwise equal or disjoint
    auto is_block = [&](Mask s) {
        std::vector<Mask> orbit{s};
        for (std::size_t qi = 0; qi < orbit.size(); ++qi)
            for (const Images& g : gens) {
                Mask t = image(orbit[qi], g);
                if (t != s && (t & s)) return false;
                if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) orbit.push_back(t);
            }
        return true;
    };
    Mask best = (degree == 32 ? ~Mask{0} : (Mask{1} << degree) - 1);
    for (Mask s = 0; s < (Mask{1} << degree); ++s) {
        if ((s & must) != must) continue;
        if (__builtin_popcount(s) >= __builtin_popcount(best)) continue;
        if (is_block(s)) best = s;
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < degree; ++i)
        if (best >> i & 1) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> admissible(std::uint64_t v, std::uint64_t k_bound,
                                                                std::optional<std::uint64_t> required_lambda) {
    if (v >= (std::uint64_t{1} << 40)) throw std::invalid_argument("oracle scan needs v < 2^40");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t k = 3; k + 1 < v && k <= k_bound; ++k) {
        if (k_bound % k) continue;
        unsigned __int128 num = static_cast<unsigned __int128>(k) * (k - 1);
        if (num % (v - 1)) continue;
        std::uint64_t lambda = static_cast<std::uint64_t>(num / (v - 1));
        if (required_lambda && lambda != *required_lambda) continue;
        if (static_cast<unsigned __int128>(lambda) * v >= static_cast<unsigned __int128>(k) * k) continue;
        if (!is_prime(lambda)) continue;
        out.emplace_back(k, lambda);
    }
    return out;
}

}  // namespace sdesign::oracle
