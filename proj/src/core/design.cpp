#include "sdesign/design.hpp"

#include "sdesign/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace sdesign {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words; ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return n;
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
    if (v == 0) fail(Errc::invalid_argument, "design needs at least one point");
    for (Block& b : blocks_) {
        if (b.empty()) fail(Errc::invalid_argument, "empty block");
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            fail(Errc::invalid_argument, "block repeats point " + std::to_string(b[0] + 1));
        if (b.back() >= v) fail(Errc::invalid_argument, "block point " + std::to_string(b.back() + 1) + " exceeds v");
    }
    std::sort(blocks_.begin(), blocks_.end());
    if (auto it = std::adjacent_find(blocks_.begin(), blocks_.end()); it != blocks_.end())
        fail(Errc::invalid_argument, "repeated block");

    words_per_point_ = words_for(blocks_.size());
    words_per_block_ = words_for(v_);
    point_rows_.assign(v_ * words_per_point_, 0);
    block_rows_.assign(blocks_.size() * words_per_block_, 0);
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        for (Point p : blocks_[j]) {
            point_rows_[p * words_per_point_ + j / 64] |= std::uint64_t{1} << (j % 64);
            block_rows_[j * words_per_block_ + p / 64] |= std::uint64_t{1} << (p % 64);
        }
}

bool IncidenceStructure::incident(Point p, std::size_t block) const {
    return (block_rows_[block * words_per_block_ + p / 64] >> (p % 64)) & 1u;
}

std::optional<std::size_t> IncidenceStructure::find_block(const Block& b) const {
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
    if (it == blocks_.end() || *it != b) return std::nullopt;
    return static_cast<std::size_t>(it - blocks_.begin());
}

std::size_t IncidenceStructure::pair_count(Point x, Point y) const {
    return and_popcount(&point_rows_[x * words_per_point_], &point_rows_[y * words_per_point_], words_per_point_);
}

std::size_t IncidenceStructure::block_intersection(std::size_t a, std::size_t b) const {
    return and_popcount(&block_rows_[a * words_per_block_], &block_rows_[b * words_per_block_], words_per_block_);
}

std::size_t IncidenceStructure::replication(Point p) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_per_point_; ++i)
        n += static_cast<std::size_t>(std::popcount(point_rows_[p * words_per_point_ + i]));
    return n;
}

std::size_t IncidenceStructure::num_flags() const {
    std::size_t n = 0;
    for (const Block& b : blocks_) n += b.size();
    return n;
}

std::string Verification::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Violation::none:
        os << "symmetric (" << params.v << "," << params.k << "," << params.lambda << ") design"
           << (params.nontrivial ? "" : " (trivial)");
        break;
    case Violation::block_count:
        os << "block-count mismatch: " << observed << " blocks for v=" << expected;
        break;
    case Violation::block_size:
        os << "non-uniform block size: block " << a + 1 << " has " << observed << " points, block 1 has " << expected;
        break;
    case Violation::point_pair:
        os << "pair-count violation: points {" << a + 1 << "," << b + 1 << "} lie in " << observed
           << " blocks, expected " << expected;
        break;
    case Violation::block_pair:
        os << "dual violation: blocks " << a + 1 << " and " << b + 1 << " meet in " << observed
           << " points, expected " << expected;
        break;
    }
    return os.str();
}

Verification verify_symmetric(const IncidenceStructure& d) {
    Verification r;
    const std::size_t v = d.v();
    if (d.num_blocks() != v) {
        r.kind = Violation::block_count;
        r.observed = d.num_blocks();
        r.expected = v;
        return r;
    }
    const std::size_t k = d.block(0).size();
    for (std::size_t j = 1; j < v; ++j)
        if (d.block(j).size() != k) {
            r.kind = Violation::block_size;
            r.a = j;
            r.observed = d.block(j).size();
            r.expected = k;
            return r;
        }
    const std::size_t lambda = v >= 2 ? d.pair_count(0, 1) : 0;
    for (Point x = 0; x < v; ++x)
        for (Point y = x + 1; y < v; ++y)
            if (std::size_t c = d.pair_count(x, y); c != lambda) {
                r.kind = Violation::point_pair;
                r.a = x;
                r.b = y;
                r.observed = c;
                r.expected = lambda;
                return r;
            }
    // Square and point-pair balanced forces block-pair balance; a failure here
    // means the incidence bookkeeping is inconsistent.
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = a + 1; b < v; ++b)
            if (std::size_t c = d.block_intersection(a, b); c != lambda) {
                r.kind = Violation::block_pair;
                r.a = a;
                r.b = b;
                r.observed = c;
                r.expected = lambda;
                return r;
            }
    r.params = {v, k, lambda, 2 < k && k + 1 < v};
    return r;
}

DesignParams require_symmetric(const IncidenceStructure& d) {
    Verification r = verify_symmetric(d);
    if (!r.ok()) fail(Errc::not_symmetric, r.describe());
    return r.params;
}

IncidenceStructure complement(const IncidenceStructure& d) {
    require_symmetric(d);
    std::vector<Block> out;
    out.reserve(d.num_blocks());
    for (std::size_t j = 0; j < d.num_blocks(); ++j) {
        Block c;
        for (Point p = 0; p < d.v(); ++p)
            if (!d.incident(p, j)) c.push_back(p);
        if (c.empty()) fail(Errc::invalid_argument, "complement has an empty block");
        out.push_back(std::move(c));
    }
    return IncidenceStructure(d.v(), std::move(out));
}

bool is_automorphism(const IncidenceStructure& d, const Permutation& g) {
    if (g.degree() != d.v()) fail(Errc::invalid_argument, "permutation degree does not match v");
    for (const Block& b : d.blocks())
        if (!d.find_block(image_of(b, g))) return false;
    return true;
}

namespace {

// block index images for every generator; throws if one is not an automorphism
std::vector<std::vector<std::size_t>> block_actions(const PermutationGroup& g, const IncidenceStructure& d) {
    if (g.degree() != d.v()) fail(Errc::invalid_argument, "group degree does not match v");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
        const Permutation& s = g.generators()[i];
        std::vector<std::size_t> act(d.num_blocks());
        for (std::size_t j = 0; j < d.num_blocks(); ++j) {
            auto img = d.find_block(image_of(d.block(j), s));
            if (!img)
                fail(Errc::not_automorphism, "generator " + std::to_string(i + 1) + " " + s.to_cycles() +
                                                 " is not an automorphism");
            act[j] = *img;
        }
        out.push_back(std::move(act));
    }
    return out;
}

}  // namespace

bool is_flag_transitive(const PermutationGroup& g, const IncidenceStructure& d) {
    const auto actions = block_actions(g, d);
    std::vector<std::size_t> offset(d.num_blocks() + 1, 0);
    for (std::size_t j = 0; j < d.num_blocks(); ++j) offset[j + 1] = offset[j] + d.block(j).size();
    const std::size_t flags = offset.back();
    if (flags == 0) return true;

    auto index = [&](Point p, std::size_t j) {
        const Block& b = d.block(j);
        return offset[j] + static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), p) - b.begin());
    };
    std::vector<bool> seen(flags, false);
    std::vector<std::pair<Point, std::size_t>> queue{{d.block(0)[0], 0}};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [p, j] = queue[qi];
        for (std::size_t s = 0; s < actions.size(); ++s) {
            Point p2 = g.generators()[s][p];
            std::size_t j2 = actions[s][j];
            std::size_t f = index(p2, j2);
            if (!seen[f]) {
                seen[f] = true;
                queue.emplace_back(p2, j2);
            }
        }
    }
    return queue.size() == flags;
}

bool is_flag_transitive_two_step(const PermutationGroup& g, const IncidenceStructure& d) {
    block_actions(g, d);
    if (!g.is_transitive()) return false;
    PermutationGroup stab = g.point_stabilizer(0);
    const auto actions = block_actions(stab, d);
    std::vector<std::size_t> through;
    for (std::size_t j = 0; j < d.num_blocks(); ++j)
        if (d.incident(0, j)) through.push_back(j);
    if (through.empty()) return true;
    std::vector<bool> seen(d.num_blocks(), false);
    std::vector<std::size_t> queue{through[0]};
    seen[through[0]] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& act : actions)
            if (!seen[act[queue[qi]]]) {
                seen[act[queue[qi]]] = true;
                queue.push_back(act[queue[qi]]);
            }
    return queue.size() == through.size();
}

IncidenceStructure orbit_design(const PermutationGroup& g, const Block& base_block) {
    if (base_block.empty()) fail(Errc::invalid_argument, "base block is empty");
    Block base = base_block;
    std::sort(base.begin(), base.end());
    if (std::adjacent_find(base.begin(), base.end()) != base.end())
        fail(Errc::invalid_argument, "base block repeats a point");
    if (base.back() >= g.degree()) fail(Errc::invalid_argument, "base block point exceeds group degree");

    std::set<Block> seen{base};
    std::vector<Block> queue{base};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const Permutation& s : g.generators()) {
            Block img = image_of(queue[qi], s);
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    return IncidenceStructure(g.degree(), std::move(queue));
}

namespace {

struct Lines {
    std::vector<std::pair<std::size_t, std::string>> items;  // (line number, trimmed text)
};

Lines content_lines(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        out.items.emplace_back(lineno, line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
    }
    return out;
}

std::size_t parse_header(const Lines& lines) {
    if (lines.items.empty()) fail(Errc::parse, "missing 'v N' header");
    std::istringstream hdr(lines.items[0].second);
    std::string kw, extra;
    long long n = 0;
    if (!(hdr >> kw >> n) || kw != "v" || n <= 0 || (hdr >> extra))
        fail(Errc::parse, "line " + std::to_string(lines.items[0].first) + ": expected 'v N'");
    return static_cast<std::size_t>(n);
}

Block parse_block_line(const std::string& s, std::size_t v, std::size_t lineno) {
    Block b;
    std::size_t i = 0;
    for (;;) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail(Errc::parse, "line " + std::to_string(lineno) + ": expected a point label");
        if (i - start > 18) fail(Errc::parse, "line " + std::to_string(lineno) + ": point label too long");
        unsigned long long label = std::stoull(s.substr(start, i - start));
        if (label < 1 || label > v)
            fail(Errc::parse, "line " + std::to_string(lineno) + ": point " + std::to_string(label) + " out of range");
        b.push_back(static_cast<Point>(label - 1));
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i == s.size()) break;
        if (s[i] != ',') fail(Errc::parse, "line " + std::to_string(lineno) + ": expected ','");
        ++i;
    }
    return b;
}

}  // namespace

IncidenceStructure parse_design(const std::string& text) {
    Lines lines = content_lines(text);
    std::size_t v = parse_header(lines);
    std::vector<Block> blocks;
    for (std::size_t i = 1; i < lines.items.size(); ++i)
        blocks.push_back(parse_block_line(lines.items[i].second, v, lines.items[i].first));
    try {
        return IncidenceStructure(v, std::move(blocks));
    } catch (const Error& e) {
        fail(Errc::parse, e.what());
    }
}

std::pair<std::size_t, Block> parse_base_block(const std::string& text) {
    Lines lines = content_lines(text);
    std::size_t v = parse_header(lines);
    if (lines.items.size() != 2) fail(Errc::parse, "expected exactly one base block");
    return {v, parse_block_line(lines.items[1].second, v, lines.items[1].first)};
}

std::string to_text(const IncidenceStructure& d) {
    std::ostringstream os;
    os << "v " << d.v() << '\n';
    for (const Block& b : d.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
        os << '\n';
    }
    return os.str();
}

}  // namespace sdesign
