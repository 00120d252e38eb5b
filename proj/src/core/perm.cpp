#include "sdesign/perm.hpp"

#include "sdesign/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sdesign {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x]) fail(Errc::invalid_argument, "image array is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

BigInt Permutation::order() const {
    BigInt r(1);
    for (std::size_t len : cycle_type()) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), len);
    return r;
}

std::string Permutation::to_cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        os << '(';
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            if (j != i) os << ',';
            seen[j] = true;
            os << j + 1;
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail(Errc::invalid_argument, "degree mismatch in composition");
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = b[a[static_cast<Point>(i)]];
    return Permutation(std::move(img));
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') fail(Errc::parse, "expected '(' at offset " + std::to_string(i) + " in '" + text + "'");
        ++i;
        std::vector<Point> cycle;
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            ++i;
            skip_ws();
            continue;
        }
        for (;;) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) fail(Errc::parse, "expected a point at offset " + std::to_string(start) + " in '" + text + "'");
            unsigned long long label = std::stoull(text.substr(start, i - start));
            if (label < 1 || label > degree)
                fail(Errc::parse, "point " + std::to_string(label) + " out of range 1.." + std::to_string(degree));
            Point pt = static_cast<Point>(label - 1);
            if (std::find(cycle.begin(), cycle.end(), pt) != cycle.end())
                fail(Errc::parse, "point " + std::to_string(label) + " repeated within a cycle");
            if (used[pt]) fail(Errc::parse, "point " + std::to_string(label) + " appears in two cycles");
            cycle.push_back(pt);
            skip_ws();
            if (i >= text.size()) fail(Errc::parse, "unterminated cycle in '" + text + "'");
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ')') {
                ++i;
                break;
            }
            fail(Errc::parse, "unexpected character '" + std::string(1, text[i]) + "' in '" + text + "'");
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            used[cycle[k]] = true;
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

std::vector<std::vector<Point>> BlockSystem::classes() const {
    std::vector<std::vector<Point>> out(num_classes);
    for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(static_cast<Point>(i));
    return out;
}

std::vector<Point> image_of(const std::vector<Point>& set, const Permutation& g) {
    std::vector<Point> out;
    out.reserve(set.size());
    for (Point x : set) out.push_back(g[x]);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims with explicit transversals)

struct PermutationGroup::Chain {
    struct Level {
        Point base;
        std::vector<Permutation> gens;
        std::vector<Point> orbit;
        std::vector<int> where;  // point -> index in orbit/trans, -1 if absent
        std::vector<Permutation> trans;
    };
    std::vector<Level> levels;
};

struct PermutationGroup::Memo {
    std::once_flag once;
    std::unique_ptr<Chain> chain;
};

namespace {

template <class Level>
void rebuild_orbit(Level& lv, std::size_t degree) {
    lv.orbit.assign(1, lv.base);
    lv.where.assign(degree, -1);
    lv.where[lv.base] = 0;
    lv.trans.assign(1, Permutation::identity(degree));
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        Point x = lv.orbit[idx];
        for (const Permutation& s : lv.gens) {
            Point y = s[x];
            if (lv.where[y] >= 0) continue;
            lv.where[y] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.trans.push_back(compose(lv.trans[idx], s));
        }
    }
}

Point first_moved(const Permutation& g) {
    for (Point i = 0; i < g.degree(); ++i)
        if (g[i] != i) return i;
    return static_cast<Point>(g.degree());
}

template <class Levels>
std::pair<Permutation, std::size_t> strip(Permutation g, const Levels& levels, std::size_t from) {
    for (std::size_t j = from; j < levels.size(); ++j) {
        const auto& lv = levels[j];
        Point beta = g[lv.base];
        if (lv.where[beta] < 0) return {g, j};
        g = compose(g, lv.trans[lv.where[beta]].inverse());
    }
    return {g, levels.size()};
}

template <class Chain>
std::unique_ptr<Chain> build_chain(std::size_t degree, const std::vector<Permutation>& generators,
                                   const std::vector<Point>& prefix) {
    using Level = typename Chain::Level;
    auto chain = std::make_unique<Chain>();
    auto& levels = chain->levels;

    std::vector<Permutation> gens;
    for (const Permutation& g : generators)
        if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

    std::vector<Point> base = prefix;
    for (const Permutation& g : gens) {
        bool fixes_all = std::all_of(base.begin(), base.end(), [&](Point b) { return g[b] == b; });
        if (fixes_all) base.push_back(first_moved(g));
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        Level lv;
        lv.base = base[i];
        for (const Permutation& g : gens) {
            bool fixes_prefix = true;
            for (std::size_t j = 0; j < i; ++j) fixes_prefix = fixes_prefix && g[base[j]] == base[j];
            if (fixes_prefix) lv.gens.push_back(g);
        }
        rebuild_orbit(lv, degree);
        levels.push_back(std::move(lv));
    }

    long i = static_cast<long>(levels.size()) - 1;
    while (i >= 0) {
        bool raised = false;
        Level& lv = levels[static_cast<std::size_t>(i)];
        for (std::size_t idx = 0; !raised && idx < lv.orbit.size(); ++idx) {
            for (std::size_t si = 0; !raised && si < lv.gens.size(); ++si) {
                const Permutation& s = lv.gens[si];
                Point gamma = s[lv.orbit[idx]];
                Permutation g = compose(compose(lv.trans[idx], s), lv.trans[lv.where[gamma]].inverse());
                if (g.is_identity()) continue;
                auto [h, j] = strip(g, levels, static_cast<std::size_t>(i) + 1);
                if (j == levels.size() && h.is_identity()) continue;
                if (j == levels.size()) {
                    Level fresh;
                    fresh.base = first_moved(h);
                    levels.push_back(std::move(fresh));
                }
                for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                    levels[l].gens.push_back(h);
                    rebuild_orbit(levels[l], degree);
                }
                i = static_cast<long>(j);
                raised = true;
            }
        }
        if (!raised) --i;
    }
    return chain;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), memo_(std::make_shared<Memo>()) {
    if (degree == 0) fail(Errc::invalid_argument, "group degree must be positive");
    for (const Permutation& g : generators_)
        if (g.degree() != degree) fail(Errc::invalid_argument, "generator degree does not match group degree");
}

const PermutationGroup::Chain& PermutationGroup::chain() const {
    std::call_once(memo_->once, [this] { memo_->chain = build_chain<Chain>(degree_, generators_, {}); });
    return *memo_->chain;
}

std::vector<Point> PermutationGroup::orbit(Point p) const {
    if (p >= degree_) fail(Errc::invalid_argument, "point out of range");
    std::vector<bool> seen(degree_, false);
    std::vector<Point> out{p};
    seen[p] = true;
    for (std::size_t idx = 0; idx < out.size(); ++idx)
        for (const Permutation& g : generators_) {
            Point y = g[out[idx]];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<Point>> out;
    for (Point p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        out.push_back(orbit(p));
        for (Point x : out.back()) seen[x] = true;
    }
    return out;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

void PermutationGroup::require_transitive(const char* what) const {
    if (!is_transitive()) fail(Errc::not_transitive, std::string(what) + " requires a transitive group");
}

BigInt PermutationGroup::order() const {
    BigInt r(1);
    for (const auto& lv : chain().levels) r *= static_cast<unsigned long>(lv.orbit.size());
    return r;
}

bool PermutationGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) fail(Errc::invalid_argument, "degree mismatch in membership test");
    const auto& levels = chain().levels;
    auto [h, j] = strip(g, levels, 0);
    return j == levels.size() && h.is_identity();
}

PermutationGroup PermutationGroup::point_stabilizer(Point p) const {
    if (p >= degree_) fail(Errc::invalid_argument, "point out of range");
    auto c = build_chain<Chain>(degree_, generators_, {p});
    std::vector<Permutation> gens;
    if (c->levels.size() > 1) gens = c->levels[1].gens;
    return PermutationGroup(degree_, std::move(gens));
}

std::vector<std::size_t> PermutationGroup::subdegrees(Point p) const {
    require_transitive("subdegrees");
    std::vector<std::size_t> out;
    for (const auto& o : point_stabilizer(p).orbits()) out.push_back(o.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> PermutationGroup::base() const {
    std::vector<Point> out;
    for (const auto& lv : chain().levels) out.push_back(lv.base);
    return out;
}

std::vector<std::size_t> PermutationGroup::basic_orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& lv : chain().levels) out.push_back(lv.orbit.size());
    return out;
}

std::vector<Point> PermutationGroup::minimal_block(Point alpha, Point beta) const {
    if (alpha >= degree_ || beta >= degree_) fail(Errc::invalid_argument, "point out of range");
    if (alpha == beta) fail(Errc::invalid_argument, "minimal_block needs two distinct points");
    require_transitive("minimal_block");

    std::vector<Point> parent(degree_);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::deque<std::pair<Point, Point>> queue;
    parent[find(beta)] = find(alpha);
    queue.emplace_back(alpha, beta);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (const Permutation& g : generators_) {
            Point u = find(g[x]), w = find(g[y]);
            if (u == w) continue;
            parent[w] = u;
            queue.emplace_back(u, w);
        }
    }
    std::vector<Point> block;
    Point root = find(alpha);
    for (Point x = 0; x < degree_; ++x)
        if (find(x) == root) block.push_back(x);
    return block;
}

std::optional<BlockSystem> PermutationGroup::block_system() const {
    require_transitive("primitivity test");
    std::vector<Point> best;
    for (Point beta = 1; beta < degree_; ++beta) {
        std::vector<Point> b = minimal_block(0, beta);
        if (b.size() < degree_ && (best.empty() || b.size() < best.size())) best = std::move(b);
    }
    if (best.empty()) return std::nullopt;

    BlockSystem sys;
    sys.degree = degree_;
    sys.class_size = best.size();
    sys.class_of.assign(degree_, ~0u);
    std::vector<std::vector<Point>> found{best};
    for (std::size_t idx = 0; idx < found.size(); ++idx)
        for (const Permutation& g : generators_) {
            std::vector<Point> img = image_of(found[idx], g);
            if (std::find(found.begin(), found.end(), img) == found.end()) found.push_back(std::move(img));
        }
    std::sort(found.begin(), found.end());
    for (std::size_t c = 0; c < found.size(); ++c)
        for (Point x : found[c]) {
            if (sys.class_of[x] != ~0u) fail(Errc::internal, "block images overlap");
            sys.class_of[x] = static_cast<std::uint32_t>(c);
        }
    sys.num_classes = found.size();
    return sys;
}

std::string PermutationGroup::to_text() const {
    std::ostringstream os;
    os << "degree " << degree_ << '\n';
    for (const Permutation& g : generators_) os << g.to_cycles() << '\n';
    return os.str();
}

PermutationGroup parse_group(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::size_t> degree;
    std::vector<Permutation> gens;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (!degree) {
            std::istringstream hdr(line);
            std::string kw;
            long long n = 0;
            std::string extra;
            if (!(hdr >> kw >> n) || kw != "degree" || n <= 0 || (hdr >> extra))
                fail(Errc::parse, "line " + std::to_string(lineno) + ": expected 'degree N'");
            degree = static_cast<std::size_t>(n);
            continue;
        }
        try {
            gens.push_back(parse_cycles(line, *degree));
        } catch (const Error& e) {
            fail(Errc::parse, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!degree) fail(Errc::parse, "missing 'degree N' header");
    return PermutationGroup(*degree, std::move(gens));
}

}  // namespace sdesign
