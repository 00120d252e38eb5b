#pragma once

#include "sdesign/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdesign {

using Block = std::vector<Point>;

class IncidenceStructure {
public:
    // Blocks are sorted internally and the list is kept in lexicographic order.
    // Repeated or empty blocks and out-of-range points are rejected.
    IncidenceStructure(std::size_t v, std::vector<Block> blocks);

    std::size_t v() const { return v_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t i) const { return blocks_[i]; }

    bool incident(Point p, std::size_t block) const;
    // index of the block equal to `b` (sorted), if any
    std::optional<std::size_t> find_block(const Block& b) const;
    // number of blocks containing both points / points on both blocks
    std::size_t pair_count(Point x, Point y) const;
    std::size_t block_intersection(std::size_t a, std::size_t b) const;
    std::size_t replication(Point p) const;
    std::size_t num_flags() const;

    friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
        return a.v_ == b.v_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t v_;
    std::vector<Block> blocks_;
    std::size_t words_per_point_ = 0;  // bits indexed by block
    std::size_t words_per_block_ = 0;  // bits indexed by point
    std::vector<std::uint64_t> point_rows_;
    std::vector<std::uint64_t> block_rows_;
};

struct DesignParams {
    std::uint64_t v = 0, k = 0, lambda = 0;
    bool nontrivial = false;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

enum class Violation { none, block_count, block_size, point_pair, block_pair };

struct Verification {
    Violation kind = Violation::none;
    DesignParams params;  // meaningful when kind == none
    // witnesses: points (point_pair), block indices (block_pair, block_size)
    std::uint64_t a = 0, b = 0;
    std::uint64_t observed = 0, expected = 0;

    bool ok() const { return kind == Violation::none; }
    std::string describe() const;  // 1-based labels
};

Verification verify_symmetric(const IncidenceStructure& d);
// verify_symmetric that throws Errc::not_symmetric on a violation
DesignParams require_symmetric(const IncidenceStructure& d);

IncidenceStructure complement(const IncidenceStructure& d);

bool is_automorphism(const IncidenceStructure& d, const Permutation& g);

// Orbit of one flag under G compared against the number of flags. Throws
// Errc::not_automorphism naming the first generator that does not preserve d.
bool is_flag_transitive(const PermutationGroup& g, const IncidenceStructure& d);
// Same question via point-transitivity and transitivity of the stabilizer of
// point 0 on the blocks through it; used as a cross-check.
bool is_flag_transitive_two_step(const PermutationGroup& g, const IncidenceStructure& d);

IncidenceStructure orbit_design(const PermutationGroup& g, const Block& base_block);

// Design file: "v N" then one block per line, comma-separated 1-based labels.
IncidenceStructure parse_design(const std::string& text);
std::string to_text(const IncidenceStructure& d);

// Reads "v N" plus exactly one block line; used for base-block files.
std::pair<std::size_t, Block> parse_base_block(const std::string& text);

}  // namespace sdesign
