#pragma once

// Brute-force references used to cross-check the library. Nothing here calls
// into the core algorithms; inputs are plain image arrays and point lists.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sdesign::oracle {

using Images = std::vector<std::uint32_t>;

// |<gens>| by enumerating every element; nullopt once more than `cap` are found.
std::optional<std::uint64_t> closure_order(std::size_t degree, const std::vector<Images>& gens, std::uint64_t cap);

struct PairCount {
    bool symmetric = false;
    std::uint64_t v = 0, k = 0, lambda = 0;
};

// Counts every point pair over every block, every block pair over every point.
PairCount count_pairs(std::size_t v, const std::vector<std::vector<std::uint32_t>>& blocks);

// Smallest block of imprimitivity containing a and b, by trying every subset.
std::vector<std::uint32_t> minimal_block(std::size_t degree, const std::vector<Images>& gens, std::uint32_t a,
                                         std::uint32_t b);

bool is_prime(std::uint64_t n);  // trial division

// Every k in [3, v-2] dividing k_bound, tested against the full set of conditions.
std::vector<std::pair<std::uint64_t, std::uint64_t>> admissible(std::uint64_t v, std::uint64_t k_bound,
                                                                std::optional<std::uint64_t> required_lambda);

}  // namespace sdesign::oracle
