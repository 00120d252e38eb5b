// Command-line front end over the C API.
//
// Exit codes: 0 expected outcome, 1 violated expectation, 2 usage error,
// 3 missing or unreadable file, 4 malformed input.
#include "sdesign/sdesign.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { ok = 0, violated = 1, usage = 2, missing_file = 3, malformed = 4 };

struct Failure {
    int code;
};

int exit_for(sd_status s) {
    switch (s) {
    case SD_OK: return ok;
    case SD_IO: return missing_file;
    case SD_PARSE: return malformed;
    case SD_INVALID_ARGUMENT:
    case SD_OUT_OF_RANGE: return usage;
    default: return violated;
    }
}

// Throws Failure after printing the library's diagnostic.
void check(sd_status s) {
    if (s == SD_OK) return;
    std::cerr << "error (" << sd_status_name(s) << "): " << sd_last_error() << '\n';
    throw Failure{exit_for(s)};
}

struct StringDeleter {
    void operator()(char* s) const { sd_string_free(s); }
};
using String = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
    void operator()(sd_group* g) const { sd_group_free(g); }
};
using Group = std::unique_ptr<sd_group, GroupDeleter>;

struct DesignDeleter {
    void operator()(sd_design* d) const { sd_design_free(d); }
};
using Design = std::unique_ptr<sd_design, DesignDeleter>;

std::string str(char* s) {
    String owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

Group read_group(const std::string& path) {
    sd_group* g = nullptr;
    check(sd_group_read_file(path.c_str(), &g));
    return Group(g);
}

Design read_design(const std::string& path) {
    sd_design* d = nullptr;
    check(sd_design_read_file(path.c_str(), &d));
    return Design(d);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (out) out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        throw Failure{missing_file};
    }
}

std::string comment_lines(const std::string& info) {
    std::string out;
    std::size_t start = 0;
    while (start < info.size()) {
        std::size_t end = info.find('\n', start);
        if (end == std::string::npos) end = info.size();
        out += "# " + info.substr(start, end - start) + "\n";
        start = end + 1;
    }
    return out;
}

void print_line(const char* line, void*) {
    std::cout << line << '\n';
    std::cout.flush();
}

// "primitive: yes", "primitive: no (9×5 system)" or "primitive: no (intransitive)"
std::string primitivity(const sd_group* g, std::string* classes = nullptr) {
    int transitive = 0;
    check(sd_group_is_transitive(g, &transitive));
    if (!transitive) return "primitive: no (intransitive)";
    int primitive = 0;
    size_t num = 0, size = 0;
    char* text = nullptr;
    check(sd_group_block_system(g, &primitive, &num, &size, &text));
    std::string cls = str(text);
    if (classes) *classes = cls;
    if (primitive) return "primitive: yes";
    return "primitive: no (" + std::to_string(size) + "×" + std::to_string(num) + " system)";
}

// -- verbs ------------------------------------------------------------------

struct ConstructArgs {
    std::vector<std::string> target;
    std::string out, group_out;
    unsigned k = 0;
    std::string lambda;
};

int run_construct(const ConstructArgs& a) {
    const auto& t = a.target;
    sd_design* d = nullptr;
    sd_group* g = nullptr;
    char* info = nullptr;
    std::string info_text;
    if (t[0] == "pg") {
        if (t.size() != 3) throw CLI::ValidationError("construct pg needs N and Q");
        check(sd_projective_space(static_cast<unsigned>(std::stoul(t[1])), std::stoull(t[2]), &d, &info));
        info_text = str(info);
    } else if (t[0] == "diffset") {
        if (t.size() < 2) throw CLI::ValidationError("construct diffset needs an ambient group");
        std::string base;
        if (t.size() == 3) {
            base = t[2];
        } else if (t.size() == 2 && a.k > 0 && !a.lambda.empty()) {
            int found = 0;
            char* b = nullptr;
            check(sd_diffset_find(t[1].c_str(), a.k, std::stoull(a.lambda), &found, &b));
            if (!found) {
                std::cout << "no (" << a.k << "," << a.lambda << ") difference set in " << t[1] << '\n';
                return violated;
            }
            base = str(b);
        } else {
            throw CLI::ValidationError("construct diffset needs GROUP BASE or GROUP --k K --lambda L");
        }
        check(sd_diffset_develop(t[1].c_str(), base.c_str(), &d, &g));
        info_text = "name: development of {" + base + "} in " + t[1] + "\ngroup: right regular representation\n";
    } else {
        if (t.size() != 1) throw CLI::ValidationError("construct takes one catalog name");
        check(sd_catalog_construct(t[0].c_str(), &d, &g, &info));
        info_text = str(info);
    }
    Design design(d);
    Group group(g);

    sd_verification ver{};
    char* desc = nullptr;
    check(sd_design_verify(design.get(), &ver, &desc));
    const std::string verdict = str(desc);
    char* text = nullptr;
    check(sd_design_to_text(design.get(), &text));
    const std::string file = comment_lines(info_text) + str(text);

    if (a.out.empty()) {
        std::cout << file;
    } else {
        write_file(a.out, file);
        std::cout << "wrote " << a.out << ": " << verdict << '\n';
    }
    if (!a.group_out.empty()) {
        if (!group) {
            std::cerr << "error: this construction carries no group\n";
            return usage;
        }
        char* gt = nullptr;
        check(sd_group_to_text(group.get(), &gt));
        write_file(a.group_out, str(gt));
        std::cout << "wrote " << a.group_out << '\n';
    }
    if (ver.violation != SD_VIOLATION_NONE) {
        std::cerr << verdict << '\n';
        return violated;
    }
    return ok;
}

int run_verify(const std::string& path) {
    Design d = read_design(path);
    sd_verification ver{};
    char* desc = nullptr;
    check(sd_design_verify(d.get(), &ver, &desc));
    std::cout << str(desc) << '\n';
    return ver.violation == SD_VIOLATION_NONE ? ok : violated;
}

int run_group(const std::string& action, const std::string& path, unsigned point) {
    Group g = read_group(path);
    char* out = nullptr;
    if (action == "order") {
        check(sd_group_order(g.get(), &out));
        std::cout << str(out) << '\n';
    } else if (action == "orbits") {
        check(sd_group_orbits(g.get(), &out));
        std::cout << str(out);
    } else if (action == "primitive") {
        std::string classes;
        std::cout << primitivity(g.get(), &classes) << '\n' << classes;
    } else {
        check(sd_group_subdegrees(g.get(), point, &out));
        std::cout << str(out) << '\n';
    }
    return ok;
}

int run_flagtest(const std::string& group_path, const std::string& design_path) {
    Group g = read_group(group_path);
    Design d = read_design(design_path);
    int ft = 0;
    check(sd_flag_transitive(g.get(), d.get(), &ft));
    std::cout << "flag-transitive: " << (ft ? "yes" : "no") << "; " << primitivity(g.get()) << '\n';
    return ft ? ok : violated;
}

struct EliminateArgs {
    std::string table, v, bound, lambda;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool verbose = false;
};

int run_eliminate(const EliminateArgs& a) {
    if (!a.table.empty()) {
        int all = 0;
        check(sd_run_catalog(a.table.c_str(), a.jobs, a.seed, print_line, nullptr, &all));
        return all ? ok : violated;
    }
    char* pairs = nullptr;
    char* details = nullptr;
    check(sd_admissible(a.v.c_str(), a.bound.c_str(), a.lambda.empty() ? nullptr : a.lambda.c_str(), a.seed, &pairs,
                        &details));
    const std::string d = str(details);
    if (a.verbose) std::cout << d;
    std::cout << str(pairs) << '\n';
    return ok;
}

int run_families(const std::string& lambda) {
    char* out = nullptr;
    check(sd_families(lambda.c_str(), &out));
    std::cout << str(out);
    return ok;
}

int run_selftest(int criterion, std::uint64_t seed, unsigned jobs) {
    int all = 0;
    check(sd_selftest(criterion, seed, jobs, print_line, nullptr, &all));
    return all ? ok : violated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric designs, their automorphism groups and parameter eliminations"};
    app.require_subcommand(1, 1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a design: NAME | pg N Q | diffset GROUP [BASE]");
    construct->add_option("target", ca.target, "catalog name, 'pg N Q' or 'diffset GROUP [BASE]'")
        ->required()
        ->expected(1, 3);
    construct->add_option("-o,--output", ca.out, "design file to write (default: stdout)");
    construct->add_option("--group-out", ca.group_out, "group file to write");
    construct->add_option("--k", ca.k, "diffset search: block size");
    construct->add_option("--lambda", ca.lambda, "diffset search: lambda");
    construct->footer("catalog names: fano_complement paley_11_5_2 paley_complement_11_6_3 unitary_45_12_3\n"
                      "  imprimitive_45_12_3 biplane16_ea biplane16_z2z8 biplane16_q8z2\n"
                      "diffset groups: cyclic:N ea:P:A product:M1,M2,... q8xz2");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check that a design file is a symmetric design");
    verify->add_option("design", verify_path, "design file")->required();

    std::string group_action, group_path;
    unsigned point = 1;
    auto* group = app.add_subcommand("group", "group properties: order, orbits, primitive, subdegrees");
    group->add_option("action", group_action)->required()->check(CLI::IsMember({"order", "orbits", "primitive",
                                                                                 "subdegrees"}));
    group->add_option("group", group_path, "group file")->required();
    group->add_option("--point", point, "point for subdegrees (1-based)")->check(CLI::PositiveNumber);

    std::string ft_group, ft_design;
    auto* flagtest = app.add_subcommand("flagtest", "is the group flag-transitive on the design");
    flagtest->add_option("group", ft_group, "group file")->required();
    flagtest->add_option("design", ft_design, "design file")->required();

    EliminateArgs ea;
    auto* eliminate = app.add_subcommand("eliminate", "admissible (k, lambda) pairs");
    auto* table_opt = eliminate->add_option("--table", ea.table, "catalog rows: all, a table id or a row id");
    auto* v_opt = eliminate->add_option("--v", ea.v, "number of points");
    auto* bound_opt = eliminate->add_option("--bound", ea.bound, "k must divide this number");
    eliminate->add_option("--lambda", ea.lambda, "required lambda")->needs(v_opt);
    eliminate->add_option("--jobs", ea.jobs, "catalog workers")->check(CLI::PositiveNumber);
    eliminate->add_option("--seed", ea.seed, "factorization seed");
    eliminate->add_flag("--verbose", ea.verbose, "print the factorization of the bound");
    table_opt->excludes(v_opt)->excludes(bound_opt);
    v_opt->needs(bound_opt);
    bound_opt->needs(v_opt);

    std::string fam_lambda;
    auto* families = app.add_subcommand("families", "parameter families for a prime lambda");
    families->add_option("--lambda", fam_lambda, "prime lambda")->required();

    int criterion = 0;
    std::uint64_t st_seed = 1;
    unsigned st_jobs = 1;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--criterion", criterion, "run only this criterion")->check(CLI::Range(1, 8));
    selftest->add_option("--seed", st_seed, "seed");
    selftest->add_option("--jobs", st_jobs, "catalog workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (eliminate->parsed() && ea.table.empty() && ea.v.empty())
            throw CLI::RequiredError("eliminate needs --table or --v with --bound");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(verify_path);
        if (group->parsed()) return run_group(group_action, group_path, point);
        if (flagtest->parsed()) return run_flagtest(ft_group, ft_design);
        if (eliminate->parsed()) return run_eliminate(ea);
        if (families->parsed()) return run_families(fam_lambda);
        if (selftest->parsed()) return run_selftest(criterion, st_seed, st_jobs);
    } catch (const Failure& f) {
        return f.code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument&) {
        std::cerr << "usage error: expected a number\n";
        return usage;
    } catch (const std::out_of_range&) {
        std::cerr << "usage error: number out of range\n";
        return usage;
    }
    return usage;
}
