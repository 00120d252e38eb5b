#include "sdesign/elimination.hpp"

#include "sdesign/constructions.hpp"
#include "sdesign/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <regex>
#include <sstream>
#include <thread>

namespace sdesign {

// ---------------------------------------------------------------------------
// Families and orders

namespace {

unsigned long gcd_ul(const BigInt& a, unsigned long b) { return gcd(a, BigInt(b)).get_ui(); }

BigInt product_q_minus_1(const BigInt& q, unsigned from, unsigned to, unsigned step = 1) {
    BigInt r(1);
    for (unsigned j = from; j <= to; j += step) r *= pow(q, j) - 1;
    return r;
}

const char* family_tag(Family f) {
    switch (f) {
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::OmegaOdd: return "Omega";
    case Family::POmegaPlus: return "POmega+";
    case Family::POmegaMinus: return "POmega-";
    }
    return "?";
}

}  // namespace

GroupFamilySpec GroupFamilySpec::make(Family family, unsigned n, const PrimePower& q) {
    auto bad = [&](const std::string& why) {
        fail(Errc::invalid_argument, std::string(family_tag(family)) + "(" + std::to_string(n) + "," +
                                         q.q.get_str() + "): " + why);
    };
    switch (family) {
    case Family::PSL:
        if (n < 2) bad("needs n >= 2");
        if (n == 2 && (q.q == 2 || q.q == 3)) bad("not simple");
        break;
    case Family::PSU:
        if (n < 3) bad("needs n >= 3");
        if (n == 3 && q.q == 2) bad("not simple");
        break;
    case Family::PSp:
        if (n < 4 || n % 2) bad("needs even n >= 4");
        if (n == 4 && q.q == 2) bad("not simple");
        break;
    case Family::OmegaOdd:
        if (n < 7 || n % 2 == 0) bad("needs odd n >= 7");
        if (q.p == 2) bad("needs odd q");
        break;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
        if (n < 8 || n % 2) bad("needs even n >= 8");
        break;
    }
    return GroupFamilySpec{family, n, q};
}

GroupFamilySpec GroupFamilySpec::parse(const std::string& text) {
    static const std::regex re(R"(\s*(PSL|PSU|PSp|Omega|POmega\+|POmega-)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) fail(Errc::parse, "cannot parse group family '" + text + "'");
    static const std::vector<std::pair<std::string, Family>> tags = {
        {"PSL", Family::PSL},          {"PSU", Family::PSU},          {"PSp", Family::PSp},
        {"Omega", Family::OmegaOdd}, {"POmega+", Family::POmegaPlus}, {"POmega-", Family::POmegaMinus},
    };
    Family f = Family::PSL;
    for (const auto& [tag, fam] : tags)
        if (m[1] == tag) f = fam;
    return make(f, static_cast<unsigned>(std::stoul(m[2])), PrimePower::from_q(parse_bigint(m[3])));
}

std::string GroupFamilySpec::name() const {
    return std::string(family_tag(family)) + "(" + std::to_string(n) + "," + q.q.get_str() + ")";
}

BigInt sl_order(unsigned n, const BigInt& q) { return pow(q, n * (n - 1) / 2) * product_q_minus_1(q, 2, n); }

BigInt su_order(unsigned n, const BigInt& q) {
    BigInt r = pow(q, n * (n - 1) / 2);
    for (unsigned j = 2; j <= n; ++j) r *= pow(q, j) + (j % 2 ? 1 : -1);
    return r;
}

BigInt sp_order(unsigned n, const BigInt& q) {
    const unsigned m = n / 2;
    return pow(q, m * m) * product_q_minus_1(q, 2, 2 * m, 2);
}

BigInt so_odd_order(unsigned n, const BigInt& q) {
    const unsigned m = (n - 1) / 2;
    return pow(q, m * m) * product_q_minus_1(q, 2, 2 * m, 2);
}

BigInt so_even_order(unsigned n, int sign, const BigInt& q) {
    const unsigned m = n / 2;
    const BigInt delta = gcd(BigInt(2), q);
    return delta * pow(q, m * (m - 1)) * (pow(q, m) - sign) * product_q_minus_1(q, 2, 2 * (m - 1), 2);
}

BigInt simple_order(const GroupFamilySpec& s) {
    const BigInt& q = s.q.q;
    const unsigned n = s.n;
    switch (s.family) {
    case Family::PSL: return sl_order(n, q) / gcd_ul(q - 1, n);
    case Family::PSU: return su_order(n, q) / gcd_ul(q + 1, n);
    case Family::PSp: return sp_order(n, q) / gcd_ul(q - 1, 2);
    case Family::OmegaOdd: return so_odd_order(n, q) / gcd_ul(q - 1, 2);
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
        const int sign = s.family == Family::POmegaPlus ? 1 : -1;
        const unsigned m = n / 2;
        const BigInt qm = pow(q, m) - sign;
        return pow(q, m * (m - 1)) * qm * product_q_minus_1(q, 2, 2 * (m - 1), 2) / gcd_ul(qm, 4);
    }
    }
    fail(Errc::internal, "unknown family");
}

OutOrder out_order(const GroupFamilySpec& s) {
    const BigInt& q = s.q.q;
    const BigInt a(s.q.a);
    switch (s.family) {
    case Family::PSL:
        if (s.n == 2) return {a * gcd_ul(q - 1, 2), true};
        return {2 * a * gcd_ul(q - 1, s.n), true};
    case Family::PSU: return {2 * a * gcd_ul(q + 1, s.n), true};
    case Family::PSp: {
        // the extra graph automorphism of Sp4 in characteristic 2
        BigInt v = a * gcd_ul(q - 1, 2);
        if (s.n == 4 && s.q.p == 2) v *= 2;
        return {v, true};
    }
    case Family::OmegaOdd: return {2 * a, true};
    case Family::POmegaPlus:
    case Family::POmegaMinus: return {(s.q.p == 2 ? 6 : 24) * a, false};
    }
    fail(Errc::internal, "unknown family");
}

// ---------------------------------------------------------------------------
// Admissible (k, lambda) scan

AdmissibleResult admissible(const BigInt& v, const BigInt& k_bound, const std::optional<BigInt>& required_lambda,
                            const std::optional<BigInt>& tits_p, std::uint64_t seed) {
    if (v < 4) fail(Errc::invalid_argument, "admissible needs v >= 4");
    if (k_bound < 1) fail(Errc::invalid_argument, "k bound must be positive");
    AdmissibleResult out;
    if (tits_p) out.tits_ok = gcd(*tits_p, v - 1) == 1;
    if (k_bound == 1) {
        out.bound_factors.value = 1;
        return out;
    }
    out.bound_factors = factorize(k_bound, seed);
    const BigInt vm1 = v - 1;
    for (const BigInt& k : divisors(out.bound_factors, BigInt(3), v - 2)) {
        ++out.divisors_scanned;
        const BigInt num = k * (k - 1);
        if (!mpz_divisible_p(num.get_mpz_t(), vm1.get_mpz_t())) continue;
        const BigInt lambda = num / vm1;
        if (required_lambda && lambda != *required_lambda) continue;
        if (lambda * v >= k * k) continue;
        if (!is_prime(lambda)) continue;
        out.lambda_certain = out.lambda_certain && is_prime_certain(lambda);
        out.pairs.push_back({k, lambda});
    }
    return out;
}

std::string format_pairs(const std::vector<AdmissiblePair>& pairs) {
    if (pairs.empty()) return "EMPTY";
    std::string s;
    for (const auto& p : pairs) s += (s.empty() ? "(" : " (") + p.k.get_str() + "," + p.lambda.get_str() + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<AdmissiblePair> parse_pair_list(const std::string& s) {
    static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::vector<AdmissiblePair> out;
    std::string rest = s;
    std::smatch m;
    while (std::regex_search(rest, m, pair_re)) {
        if (!trim(m.prefix()).empty()) fail(Errc::parse, "bad pair list '" + s + "'");
        out.push_back({parse_bigint(m[1]), parse_bigint(m[2])});
        rest = m.suffix();
    }
    if (!trim(rest).empty() || out.empty()) fail(Errc::parse, "bad pair list '" + s + "'");
    return out;
}

}  // namespace

std::vector<CatalogRow> parse_catalog(const std::string& text) {
    std::vector<CatalogRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<std::string, unsigned>> counters;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::vector<std::string> f;
        std::istringstream fs(line);
        std::string field;
        while (std::getline(fs, field, ';')) f.push_back(trim(field));
        auto where = [&] { return "catalog line " + std::to_string(lineno) + ": "; };
        if (f.size() < 5 || f.size() > 7) fail(Errc::parse, where() + "expected 5 to 7 ';'-separated fields");
        CatalogRow r;
        r.table = f[0];
        if (r.table.empty()) fail(Errc::parse, where() + "empty table id");
        r.x = f[1];
        r.h0 = f[2];
        try {
            r.v = parse_bigint(f[3]);
            r.k_bound = parse_bigint(f[4]);
            if (f.size() > 5 && !f[5].empty()) r.required_lambda = parse_bigint(f[5]);
        } catch (const Error& e) {
            fail(Errc::parse, where() + e.what());
        }
        if (r.v < 4 || r.k_bound < 1) fail(Errc::parse, where() + "needs v >= 4 and k bound >= 1");
        if (f.size() > 6 && !f[6].empty()) {
            if (f[6] == "empty") {
                r.expect = Expectation::empty;
            } else if (f[6] == "external") {
                r.expect = Expectation::external;
            } else if (f[6].rfind("pairs=", 0) == 0) {
                r.expect = Expectation::pairs;
                try {
                    r.expected_pairs = parse_pair_list(f[6].substr(6));
                } catch (const Error& e) {
                    fail(Errc::parse, where() + e.what());
                }
            } else {
                fail(Errc::parse, where() + "unknown expectation '" + f[6] + "'");
            }
        }
        auto it = std::find_if(counters.begin(), counters.end(), [&](const auto& c) { return c.first == r.table; });
        if (it == counters.end()) it = counters.insert(counters.end(), {r.table, 0});
        r.id = r.table + "." + std::to_string(++it->second);
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<CatalogRow>& default_catalog() {
    static const std::vector<CatalogRow> rows = parse_catalog(embedded_file("catalog.txt"));
    return rows;
}

std::vector<CatalogRow> select_rows(const std::vector<CatalogRow>& rows, const std::string& which) {
    if (which == "all") return rows;
    std::vector<CatalogRow> out;
    for (const auto& r : rows)
        if (r.table == which || r.id == which) out.push_back(r);
    if (out.empty()) fail(Errc::invalid_argument, "no catalog rows match '" + which + "'");
    return out;
}

const char* status_name(RowStatus s) {
    switch (s) {
    case RowStatus::pass: return "PASS";
    case RowStatus::fail: return "FAIL";
    case RowStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

RowReport evaluate_row_untimed(const CatalogRow& row, std::uint64_t seed) {
    RowReport rep;
    rep.row = row;
    try {
        rep.result = admissible(row.v, row.k_bound, row.required_lambda, std::nullopt, seed);
    } catch (const Error& e) {
        if (e.code() != Errc::timeout) throw;
        rep.status = RowStatus::inconclusive;
        rep.note = e.what();
        return rep;
    }
    const auto& pairs = rep.result.pairs;
    switch (row.expect) {
    case Expectation::empty:
        rep.status = pairs.empty() ? RowStatus::pass : RowStatus::fail;
        if (!pairs.empty()) rep.note = "expected no admissible pair";
        break;
    case Expectation::pairs:
        rep.status = pairs == row.expected_pairs ? RowStatus::pass : RowStatus::fail;
        if (rep.status == RowStatus::fail) rep.note = "expected " + format_pairs(row.expected_pairs);
        break;
    case Expectation::external:
        rep.status = pairs.empty() ? RowStatus::fail : RowStatus::pass;
        rep.note = pairs.empty() ? "expected the arithmetic to admit a pair"
                                 : "arithmetic-consistent; excluded by external classification";
        break;
    }
    if (!rep.result.lambda_certain) rep.note += (rep.note.empty() ? "" : "; ") + std::string("lambda probable prime");
    return rep;
}

RowReport evaluate_row(const CatalogRow& row, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    RowReport rep = evaluate_row_untimed(row, seed);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

std::vector<RowReport> run_catalog(const std::vector<CatalogRow>& rows, unsigned jobs, std::uint64_t seed,
                                   const std::function<void(const RowReport&)>& on_row) {
    std::vector<RowReport> out(rows.size());
    if (jobs <= 1 || rows.size() <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out[i] = evaluate_row(rows[i], seed);
            if (on_row) on_row(out[i]);
        }
        return out;
    }

    std::vector<bool> ready(rows.size(), false);
    std::vector<std::exception_ptr> errors(rows.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
            RowReport r;
            std::exception_ptr err;
            try {
                r = evaluate_row(rows[i], seed);
            } catch (...) {
                err = std::current_exception();
            }
            std::lock_guard lock(mu);
            out[i] = std::move(r);
            errors[i] = err;
            ready[i] = true;
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, rows.size()); ++w) pool.emplace_back(worker);
    std::exception_ptr first_error;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready[i]; });
        if (errors[i] && !first_error) first_error = errors[i];
        if (!first_error && on_row) {
            RowReport copy = out[i];
            lock.unlock();
            on_row(copy);
        }
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::string machine_line(const RowReport& r) {
    return "#R " + r.row.id + " " + status_name(r.status) + " " + format_pairs(r.result.pairs);
}

// ---------------------------------------------------------------------------
// Bound lemmas

namespace {

struct BoundName {
    Bound kind;
    const char* name;
};

constexpr BoundName bound_names[] = {
    {Bound::order_psl, "order-psl"},
    {Bound::order_psu, "order-psu"},
    {Bound::order_psp, "order-psp"},
    {Bound::order_omega_odd, "order-omega"},
    {Bound::order_pomega_plus, "order-pomega+"},
    {Bound::order_pomega_minus, "order-pomega-"},
    {Bound::factorial_5, "factorial5"},
    {Bound::factorial_2, "factorial2"},
    {Bound::product, "product"},
    {Bound::large_subgroup, "large-subgroup"},
};

BigInt factorial(unsigned t) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), t);
    return r;
}

void require(bool ok, Bound kind, const std::string& what) {
    if (!ok) fail(Errc::out_of_range, std::string(bound_name(kind)) + ": " + what);
}

}  // namespace

const char* bound_name(Bound kind) {
    for (const auto& b : bound_names)
        if (b.kind == kind) return b.name;
    return "?";
}

Bound parse_bound(const std::string& name) {
    for (const auto& b : bound_names)
        if (name == b.name) return b.kind;
    fail(Errc::invalid_argument, "unknown bound '" + name + "'");
}

bool check_bounds(Bound kind, const BoundParams& p) {
    auto need_q = [&] {
        PrimePower::from_q(p.q);  // throws if q is not a prime power
        return p.q;
    };
    switch (kind) {
    case Bound::order_psl: {
        require(p.n >= 2, kind, "needs n >= 2");
        const BigInt q = need_q();
        const unsigned n = p.n;
        const BigInt sl = sl_order(n, q);
        const BigInt psl = sl / gcd_ul(q - 1, n);
        // q^(n^2-2) < |PSL| <= |SL| < (1 - q^-2) q^(n^2-1)
        return pow(q, n * n - 2) < psl && psl <= sl && sl * q * q < (q * q - 1) * pow(q, n * n - 1);
    }
    case Bound::order_psu: {
        require(p.n >= 2, kind, "needs n >= 2");
        const BigInt q = need_q();
        const unsigned n = p.n;
        const BigInt su = su_order(n, q);
        const BigInt psu = su / gcd_ul(q + 1, n);
        // (1 - q^-1) q^(n^2-2) < |PSU| <= |SU| < (1 - q^-2)(1 + q^-3) q^(n^2-1)
        return (q - 1) * pow(q, n * n - 3) < psu && psu <= su &&
               su * pow(q, 5) < (q * q - 1) * (pow(q, 3) + 1) * pow(q, n * n - 1);
    }
    case Bound::order_psp: {
        require(p.n >= 4 && p.n % 2 == 0, kind, "needs even n >= 4");
        const BigInt q = need_q();
        const unsigned n = p.n;
        const BigInt sp = sp_order(n, q);
        const unsigned long beta = gcd_ul(q - 1, 2);
        const BigInt psp = sp / beta;
        // q^(n(n+1)/2) / (2 beta) < |PSp| <= |Sp| <= (1 - q^-2)(1 - q^-4) q^(n(n+1)/2)
        return pow(q, n * (n + 1) / 2) < 2 * beta * psp && psp <= sp &&
               sp * pow(q, 6) <= (q * q - 1) * (pow(q, 4) - 1) * pow(q, n * (n + 1) / 2);
    }
    case Bound::order_omega_odd: {
        require(p.n >= 5 && p.n % 2 == 1, kind, "needs odd n >= 5");
        const BigInt q = need_q();
        require(q % 2 == 1, kind, "needs odd q");
        const unsigned n = p.n;
        const BigInt so = so_odd_order(n, q);
        const BigInt omega = so / 2;
        // q^(n(n-1)/2) / 4 < |Omega| < |SO| <= (1 - q^-2)(1 - q^-4) q^(n(n-1)/2)
        return pow(q, n * (n - 1) / 2) < 4 * omega && omega < so &&
               so * pow(q, 6) <= (q * q - 1) * (pow(q, 4) - 1) * pow(q, n * (n - 1) / 2);
    }
    case Bound::order_pomega_plus:
    case Bound::order_pomega_minus: {
        require(p.n >= 6 && p.n % 2 == 0, kind, "needs even n >= 6");
        const BigInt q = need_q();
        const unsigned n = p.n, m = n / 2;
        const int sign = kind == Bound::order_pomega_plus ? 1 : -1;
        const BigInt so = so_even_order(n, sign, q);
        const BigInt qm = pow(q, m) - sign;
        const BigInt pomega = pow(q, m * (m - 1)) * qm * product_q_minus_1(q, 2, 2 * (m - 1), 2) / gcd_ul(qm, 4);
        const BigInt delta = gcd(BigInt(2), q);
        // q^(n(n-1)/2) / 8 < |POmega| < |SO| <= delta (1 - q^-2)(1 - q^-4)(1 + q^(-n/2)) q^(n(n-1)/2)
        return pow(q, n * (n - 1) / 2) < 8 * pomega && pomega < so &&
               so * pow(q, 6 + m) <= delta * (q * q - 1) * (pow(q, 4) - 1) * (pow(q, m) + 1) * pow(q, n * (n - 1) / 2);
    }
    case Bound::factorial_5: {
        require(p.t >= 5, kind, "needs t >= 5");
        const unsigned t = p.t;
        // t! < 5^((t^2-3t+1)/3), cubed
        return pow(factorial(t), 3) < pow(BigInt(5), t * t - 3 * t + 1);
    }
    case Bound::factorial_2: {
        require(p.t >= 4, kind, "needs t >= 4");
        const unsigned t = p.t;
        return pow(factorial(t), 3) < pow(BigInt(2), 4 * t * (t - 3));
    }
    case Bound::product: {
        require(p.n >= 3, kind, "needs n >= 3");
        const BigInt q = need_q();
        const unsigned n = p.n;
        BigInt minus(1), alternating(1);
        for (unsigned j = 2; j <= n; ++j) {
            minus *= pow(q, j) - 1;
            alternating *= pow(q, j) + (j % 2 ? 1 : -1);
        }
        return pow(q, n * (n - 1) / 2) < minus && minus < alternating && alternating < pow(q, (n * n + n - 2) / 2);
    }
    case Bound::large_subgroup:
        require(p.x_order > 0 && p.out_order > 0 && p.h_order > 0, kind, "needs positive orders");
        return p.x_order < p.out_order * p.out_order * p.h_order * p.h_order * p.h_order;
    }
    fail(Errc::internal, "unknown bound");
}

// ---------------------------------------------------------------------------
// Polynomial division identities

IntPoly::IntPoly(std::initializer_list<std::pair<long long, unsigned>> terms) {
    for (const auto& [c, e] : terms) add_term(c, e);
}

IntPoly& IntPoly::add_term(long long coeff, unsigned exp) {
    if (c_.size() <= exp) c_.resize(exp + 1, 0);
    c_[exp] += coeff;
    trim();
    return *this;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.add_term(b.c_[i], static_cast<unsigned>(i));
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.add_term(-b.c_[i], static_cast<unsigned>(i));
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        long long c = c_[i];
        if (c == 0) continue;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << (a != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

IntPoly division_g(unsigned n) {
    return IntPoly{{1, 2 * n - 1}, {1, n + 2}, {-1, n + 1}, {-1, n}, {-1, n - 1},
                   {1, 5},         {-1, 4},    {-1, 3},     {1, 1},  {1, 0}};
}

namespace {

void require_row(unsigned n, unsigned t) {
    if (t < 3 || t > 6) fail(Errc::out_of_range, "division table rows are t = 3..6");
    if (n < 7 || n < t + 2) fail(Errc::out_of_range, "division identity needs n >= 7 and j = n - t >= 2");
}

}  // namespace

IntPoly division_h(unsigned n, unsigned t) {
    require_row(n, t);
    switch (t) {
    case 3: return IntPoly{{1, n + 2}, {2, 5}, {-1, 4}, {-1, 3}, {-1, 2}};
    case 4: return IntPoly{{1, n + 3}, {1, 7}, {1, 6}, {-1, 5}, {-1, 4}, {-1, 3}};
    case 5: return IntPoly{{1, n + 4}, {1, 9}, {1, 7}, {-1, 6}, {-1, 5}, {-1, 4}};
    default: return IntPoly{{1, n + 5}, {1, 11}, {1, 8}, {-1, 7}, {-1, 6}, {-1, 5}, {1, 2}};
    }
}

IntPoly division_r(unsigned n, unsigned t) {
    require_row(n, t);
    switch (t) {
    case 3: return IntPoly{{3, 5}, {-2, 4}, {-2, 3}, {-1, 2}, {1, 1}, {1, 0}};
    case 4: return IntPoly{{1, 7}, {1, 6}, {-2, 4}, {-2, 3}, {1, 1}, {1, 0}};
    case 5: return IntPoly{{1, 9}, {1, 7}, {-1, 6}, {-2, 4}, {-1, 3}, {1, 1}, {1, 0}};
    default: return IntPoly{{1, 8}, {-1, 7}, {-1, 6}, {-1, 4}, {-1, 3}, {1, 2}, {1, 1}, {1, 0}};
    }
}

bool division_identity_holds(unsigned n, unsigned j, const IntPoly& h, const IntPoly& r) {
    return division_g(n) == h * IntPoly{{1, j}, {-1, 0}} + r;
}

bool check_division_identity(unsigned n, unsigned t) {
    return division_identity_holds(n, n - t, division_h(n, t), division_r(n, t));
}

// ---------------------------------------------------------------------------
// Parameter families of flag-transitive point-imprimitive designs

std::vector<FamilyTuple> two_parameter_families(const BigInt& lambda) {
    if (!is_prime(lambda)) fail(Errc::invalid_argument, "lambda must be prime, got " + lambda.get_str());
    const BigInt& l = lambda;
    std::vector<FamilyTuple> out;
    const BigInt v = l * l * (l + 2), k = l * (l + 1);
    out.push_back({'b', v, k, l, l * l, l + 2, l});
    out.push_back({'b', v, k, l, l + 2, l * l, 2});
    const unsigned long r6 = mpz_fdiv_ui(l.get_mpz_t(), 6);
    const BigInt quad = l * l + 4 * l - 1;
    if ((r6 == 1 || r6 == 3) && quad % 4 == 0) {
        const BigInt d = quad / 4;
        out.push_back({'c', (l + 6) * d, l * (l + 5) / 2, l, l + 6, d, 3});
    }
    return out;
}

}  // namespace sdesign
