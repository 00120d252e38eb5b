#include "sdesign/sdesign.h"

#include "sdesign/constructions.hpp"
#include "sdesign/design.hpp"
#include "sdesign/elimination.hpp"
#include "sdesign/error.hpp"
#include "sdesign/perm.hpp"
#include "sdesign/selftest.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

using namespace sdesign;

struct sd_group {
    PermutationGroup g;
};

struct sd_design {
    IncidenceStructure d;
};

namespace {

thread_local std::string last_error;

sd_status to_status(Errc e) {
    switch (e) {
    case Errc::invalid_argument: return SD_INVALID_ARGUMENT;
    case Errc::parse: return SD_PARSE;
    case Errc::io: return SD_IO;
    case Errc::not_transitive: return SD_NOT_TRANSITIVE;
    case Errc::not_symmetric: return SD_NOT_SYMMETRIC;
    case Errc::not_automorphism: return SD_NOT_AUTOMORPHISM;
    case Errc::not_difference_set: return SD_NOT_DIFFERENCE_SET;
    case Errc::out_of_range: return SD_OUT_OF_RANGE;
    case Errc::timeout: return SD_TIMEOUT;
    case Errc::internal: return SD_INTERNAL;
    }
    return SD_INTERNAL;
}

template <class F>
sd_status guarded(F&& f) {
    last_error.clear();
    try {
        f();
        return SD_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SD_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SD_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(Errc::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string read_file(const char* path) {
    need(path, "path");
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io, std::string("cannot open '") + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(Errc::io, std::string("cannot read '") + path + "'");
    return ss.str();
}

std::string join_points(const std::vector<Point>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + std::to_string(pts[i] + 1);
    return out;
}

Point point_arg(const sd_group* g, std::uint32_t p) {
    if (p < 1 || p > g->g.degree())
        fail(Errc::out_of_range, "point " + std::to_string(p) + " is not in 1.." + std::to_string(g->g.degree()));
    return p - 1;
}

std::optional<BigInt> optional_big(const char* s) {
    if (!s || !*s) return std::nullopt;
    return parse_bigint(s);
}

const char* yes_no(const std::optional<bool>& b) { return !b ? "unknown" : *b ? "yes" : "no"; }

std::string params_text(const DesignParams& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + ")";
}

std::string human_line(const RowReport& r) {
    std::ostringstream os;
    os << r.row.id << "  " << r.row.x;
    if (!r.row.h0.empty()) os << "  H=" << r.row.h0;
    os << "  v=" << r.row.v.get_str() << "  k|" << r.row.k_bound.get_str();
    if (r.row.required_lambda) os << "  lambda=" << r.row.required_lambda->get_str();
    os << "  -> " << format_pairs(r.result.pairs) << "  " << status_name(r.status);
    if (!r.note.empty()) os << "  (" << r.note << ")";
    return os.str();
}

}  // namespace

extern "C" {

const char* sd_last_error(void) { return last_error.c_str(); }

const char* sd_status_name(sd_status s) {
    switch (s) {
    case SD_OK: return "ok";
    case SD_INVALID_ARGUMENT: return "invalid argument";
    case SD_PARSE: return "parse error";
    case SD_IO: return "i/o error";
    case SD_NOT_TRANSITIVE: return "not transitive";
    case SD_NOT_SYMMETRIC: return "not a symmetric design";
    case SD_NOT_AUTOMORPHISM: return "not an automorphism";
    case SD_NOT_DIFFERENCE_SET: return "not a difference set";
    case SD_OUT_OF_RANGE: return "out of range";
    case SD_TIMEOUT: return "timeout";
    case SD_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void sd_string_free(char* s) { std::free(s); }

// ---- groups

sd_status sd_group_parse(const char* text, sd_group** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new sd_group{parse_group(text)};
    });
}

sd_status sd_group_read_file(const char* path, sd_group** out) {
    return guarded([&] {
        need(out, "out");
        *out = new sd_group{parse_group(read_file(path))};
    });
}

void sd_group_free(sd_group* g) { delete g; }

size_t sd_group_degree(const sd_group* g) { return g ? g->g.degree() : 0; }

sd_status sd_group_to_text(const sd_group* g, char** out) {
    return guarded([&] {
        need(g, "group");
        need(out, "out");
        *out = dup(g->g.to_text());
    });
}

sd_status sd_group_order(const sd_group* g, char** decimal) {
    return guarded([&] {
        need(g, "group");
        need(decimal, "out");
        *decimal = dup(g->g.order().get_str());
    });
}

sd_status sd_group_orbits(const sd_group* g, char** out) {
    return guarded([&] {
        need(g, "group");
        need(out, "out");
        std::string text;
        for (const auto& o : g->g.orbits()) text += join_points(o) + "\n";
        *out = dup(text);
    });
}

sd_status sd_group_is_transitive(const sd_group* g, int* out) {
    return guarded([&] {
        need(g, "group");
        need(out, "out");
        *out = g->g.is_transitive();
    });
}

sd_status sd_group_block_system(const sd_group* g, int* primitive, size_t* num_classes, size_t* class_size,
                                char** classes_text) {
    return guarded([&] {
        need(g, "group");
        need(primitive, "primitive");
        const auto sys = g->g.block_system();
        *primitive = !sys;
        if (num_classes) *num_classes = sys ? sys->num_classes : 1;
        if (class_size) *class_size = sys ? sys->class_size : g->g.degree();
        if (classes_text) {
            std::string text;
            if (sys)
                for (const auto& c : sys->classes()) text += join_points(c) + "\n";
            *classes_text = dup(text);
        }
    });
}

sd_status sd_group_minimal_block(const sd_group* g, uint32_t a, uint32_t b, char** block) {
    return guarded([&] {
        need(g, "group");
        need(block, "out");
        *block = dup(join_points(g->g.minimal_block(point_arg(g, a), point_arg(g, b))));
    });
}

sd_status sd_group_subdegrees(const sd_group* g, uint32_t point, char** out) {
    return guarded([&] {
        need(g, "group");
        need(out, "out");
        std::string text;
        for (std::size_t d : g->g.subdegrees(point_arg(g, point))) text += (text.empty() ? "" : " ") + std::to_string(d);
        *out = dup(text);
    });
}

// ---- designs

sd_status sd_design_parse(const char* text, sd_design** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new sd_design{parse_design(text)};
    });
}

sd_status sd_design_read_file(const char* path, sd_design** out) {
    return guarded([&] {
        need(out, "out");
        *out = new sd_design{parse_design(read_file(path))};
    });
}

void sd_design_free(sd_design* d) { delete d; }

size_t sd_design_points(const sd_design* d) { return d ? d->d.v() : 0; }

size_t sd_design_blocks(const sd_design* d) { return d ? d->d.num_blocks() : 0; }

sd_status sd_design_to_text(const sd_design* d, char** out) {
    return guarded([&] {
        need(d, "design");
        need(out, "out");
        *out = dup(to_text(d->d));
    });
}

sd_status sd_design_complement(const sd_design* d, sd_design** out) {
    return guarded([&] {
        need(d, "design");
        need(out, "out");
        *out = new sd_design{complement(d->d)};
    });
}

sd_status sd_orbit_design(const sd_group* g, const char* base_block, sd_design** out) {
    return guarded([&] {
        need(g, "group");
        need(base_block, "base block");
        need(out, "out");
        const std::string text = "v " + std::to_string(g->g.degree()) + "\n" + base_block + "\n";
        *out = new sd_design{orbit_design(g->g, parse_base_block(text).second)};
    });
}

sd_status sd_design_verify(const sd_design* d, sd_verification* out, char** description) {
    return guarded([&] {
        need(d, "design");
        need(out, "out");
        const Verification v = verify_symmetric(d->d);
        *out = sd_verification{static_cast<sd_violation>(v.kind),
                               v.params.v,
                               v.params.k,
                               v.params.lambda,
                               v.params.nontrivial,
                               v.a,
                               v.b,
                               v.observed,
                               v.expected};
        if (description) *description = dup(v.describe());
    });
}

sd_status sd_flag_transitive(const sd_group* g, const sd_design* d, int* out) {
    return guarded([&] {
        need(g, "group");
        need(d, "design");
        need(out, "out");
        *out = is_flag_transitive(g->g, d->d);
    });
}

// ---- constructions

sd_status sd_catalog_names(char** out) {
    return guarded([&] {
        need(out, "out");
        std::string text;
        for (const auto& n : catalog_names()) text += n + "\n";
        *out = dup(text);
    });
}

sd_status sd_catalog_construct(const char* name, sd_design** design, sd_group** group, char** info) {
    return guarded([&] {
        need(name, "name");
        need(design, "design");
        NamedInstance inst = catalog(name);
        std::ostringstream os;
        os << "name: " << inst.name << "\n"
           << "description: " << inst.description << "\n"
           << "parameters: " << params_text(inst.expected) << "\n";
        if (inst.group) {
            os << "group: " << inst.group_description << "\n"
               << "flag-transitive: " << yes_no(inst.flag_transitive) << "\n"
               << "primitive: " << yes_no(inst.primitive) << "\n";
        }
        if (!inst.note.empty()) os << "note: " << inst.note << "\n";
        auto d = std::make_unique<sd_design>(sd_design{std::move(inst.design)});
        std::unique_ptr<sd_group> g;
        if (group && inst.group) g = std::make_unique<sd_group>(sd_group{std::move(*inst.group)});
        char* text = info ? dup(os.str()) : nullptr;
        *design = d.release();
        if (group) *group = g.release();
        if (info) *info = text;
    });
}

sd_status sd_projective_space(unsigned n, uint64_t q, sd_design** design, char** info) {
    return guarded([&] {
        need(design, "design");
        const ProjectiveSpace pg = projective_space(n, PrimePower::from_q(BigInt(std::to_string(q))));
        std::ostringstream os;
        os << "name: PG(" << n - 1 << "," << q << ")\n"
           << "parameters: " << params_text(pg.expected) << "\n"
           << "lambda prime: " << (pg.lambda_prime ? "yes" : "no") << "\n";
        char* text = info ? dup(os.str()) : nullptr;
        *design = new sd_design{pg.design};
        if (info) *info = text;
    });
}

namespace {

DifferenceSetSpec diffset_spec(const char* ambient, const char* base) {
    need(ambient, "ambient group");
    need(base, "base");
    DifferenceSetSpec spec{AmbientGroup::parse(ambient), {}};
    std::istringstream in(base);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        spec.base.push_back(spec.group.parse_element(item));
    }
    if (spec.base.empty()) fail(Errc::parse, "empty base set");
    return spec;
}

}  // namespace

sd_status sd_diffset_develop(const char* ambient, const char* base, sd_design** design, sd_group** group) {
    return guarded([&] {
        need(design, "design");
        const DifferenceSetSpec spec = diffset_spec(ambient, base);
        auto d = std::make_unique<sd_design>(sd_design{develop_difference_set(spec)});
        if (group) *group = new sd_group{regular_group(spec.group)};
        *design = d.release();
    });
}

sd_status sd_diffset_find(const char* ambient, unsigned k, uint64_t lambda, int* found, char** base) {
    return guarded([&] {
        need(ambient, "ambient group");
        need(found, "found");
        const AmbientGroup g = AmbientGroup::parse(ambient);
        const auto spec = find_difference_set(g, k, lambda);
        *found = spec.has_value();
        if (spec && base) {
            std::string text;
            for (std::uint32_t x : spec->base) text += (text.empty() ? "" : ",") + g.label(x);
            *base = dup(text);
        }
    });
}

// ---- elimination

sd_status sd_admissible(const char* v, const char* k_bound, const char* lambda, uint64_t seed, char** pairs,
                        char** details) {
    return guarded([&] {
        need(v, "v");
        need(k_bound, "k_bound");
        need(pairs, "pairs");
        const AdmissibleResult r = admissible(parse_bigint(v), parse_bigint(k_bound), optional_big(lambda),
                                              std::nullopt, seed);
        std::ostringstream os;
        os << "k_bound = " << r.bound_factors.to_string() << "\n"
           << "divisors in range: " << r.divisors_scanned << "\n";
        if (!r.lambda_certain) os << "note: lambda is a probable prime\n";
        char* text = details ? dup(os.str()) : nullptr;
        *pairs = dup(format_pairs(r.pairs));
        if (details) *details = text;
    });
}

sd_status sd_run_catalog(const char* which, unsigned jobs, uint64_t seed, sd_line_callback on_line, void* context,
                         int* all_pass) {
    return guarded([&] {
        need(which, "table");
        const auto rows = select_rows(default_catalog(), which);
        bool ok = true;
        run_catalog(rows, jobs, seed, [&](const RowReport& r) {
            ok &= r.status == RowStatus::pass;
            if (on_line) {
                on_line(human_line(r).c_str(), context);
                on_line(machine_line(r).c_str(), context);
            }
        });
        if (all_pass) *all_pass = ok;
    });
}

sd_status sd_families(const char* lambda, char** out) {
    return guarded([&] {
        need(lambda, "lambda");
        need(out, "out");
        std::ostringstream os;
        for (const FamilyTuple& t : two_parameter_families(parse_bigint(lambda)))
            os << "(" << t.family << ") (v,k,lambda) = (" << t.v.get_str() << "," << t.k.get_str() << ","
               << t.lambda.get_str() << ")  (c,d,l) = (" << t.c.get_str() << "," << t.d.get_str() << ","
               << t.l.get_str() << ")\n";
        *out = dup(os.str());
    });
}

sd_status sd_check_bound(const char* kind, unsigned n, const char* q, unsigned t, const char* x_order,
                         const char* out_order, const char* h_order, int* holds) {
    return guarded([&] {
        need(kind, "kind");
        need(holds, "holds");
        BoundParams p;
        p.n = n;
        p.t = t;
        p.q = optional_big(q).value_or(0);
        p.x_order = optional_big(x_order).value_or(0);
        p.out_order = optional_big(out_order).value_or(0);
        p.h_order = optional_big(h_order).value_or(0);
        *holds = check_bounds(parse_bound(kind), p);
    });
}

sd_status sd_check_division_identity(unsigned n, unsigned t, int* holds) {
    return guarded([&] {
        need(holds, "holds");
        *holds = check_division_identity(n, t);
    });
}

// ---- acceptance suite

sd_status sd_selftest(int criterion, uint64_t seed, unsigned jobs, sd_line_callback on_line, void* context,
                      int* all_pass) {
    return guarded([&] {
        SelftestOptions opt;
        opt.seed = seed;
        opt.jobs = jobs ? jobs : 1;
        bool ok = true;
        auto emit = [&](const CriterionResult& r) {
            ok &= r.passed;
            if (on_line)
                for (const auto& line : report_lines(r)) on_line(line.c_str(), context);
        };
        if (criterion == 0)
            run_selftest(opt, emit);
        else
            emit(run_criterion(criterion, opt));
        if (all_pass) *all_pass = ok;
    });
}

}  // extern "C"
