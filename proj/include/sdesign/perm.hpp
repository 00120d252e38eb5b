#pragma once

#include "sdesign/algebra.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdesign {

using Point = std::uint32_t;

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);  // validated bijection
    static Permutation identity(std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point i) const { return images_[i]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    BigInt order() const;
    std::vector<std::size_t> cycle_type() const;  // lengths of nontrivial cycles, descending

    // 1-based disjoint-cycle notation, "()" for the identity
    std::string to_cycles() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

private:
    std::vector<Point> images_;
};

// a then b: compose(a, b)[i] = b[a[i]]
Permutation compose(const Permutation& a, const Permutation& b);

// Parses 1-based disjoint-cycle text such as "(1,2,4)(3,5)"; "" and "()" are the identity.
Permutation parse_cycles(const std::string& text, std::size_t degree);

struct BlockSystem {
    std::size_t degree = 0;
    std::vector<std::uint32_t> class_of;  // class ids numbered by first point
    std::size_t num_classes = 0;
    std::size_t class_size = 0;

    std::vector<std::vector<Point>> classes() const;
};

class PermutationGroup {
public:
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    std::vector<Point> orbit(Point p) const;  // ascending
    std::vector<std::vector<Point>> orbits() const;
    bool is_transitive() const;

    BigInt order() const;
    bool contains(const Permutation& g) const;
    PermutationGroup point_stabilizer(Point p) const;
    std::vector<std::size_t> subdegrees(Point p) const;  // ascending

    std::vector<Point> minimal_block(Point alpha, Point beta) const;
    // nullopt when primitive; otherwise the system generated by the smallest block
    // containing point 0 and some other point
    std::optional<BlockSystem> block_system() const;
    bool is_primitive() const { return !block_system().has_value(); }

    // base points and basic orbit lengths of the memoized chain
    std::vector<Point> base() const;
    std::vector<std::size_t> basic_orbit_lengths() const;

    std::string to_text() const;  // group file format

private:
    struct Chain;
    const Chain& chain() const;
    void require_transitive(const char* what) const;

    std::size_t degree_;
    std::vector<Permutation> generators_;
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

// Group file: "degree N" then one generator per line; '#' starts a comment.
PermutationGroup parse_group(const std::string& text);

// Image of a point set under g, sorted.
std::vector<Point> image_of(const std::vector<Point>& set, const Permutation& g);

}  // namespace sdesign
