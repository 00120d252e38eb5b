#pragma once

#include "sdesign/algebra.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdesign {

enum class Family { PSL, PSU, PSp, OmegaOdd, POmegaPlus, POmegaMinus };

// `n` is the dimension of the natural module: n for PSL/PSU, 2m for PSp and
// POmega+-, 2m+1 for Omega.
struct GroupFamilySpec {
    Family family;
    unsigned n;
    PrimePower q;

    // Validates the ranges in which the family is simple and not repeated.
    static GroupFamilySpec make(Family family, unsigned n, const PrimePower& q);
    // "PSL(n,q)", "PSU(n,q)", "PSp(n,q)", "Omega(n,q)", "POmega+(n,q)", "POmega-(n,q)"
    static GroupFamilySpec parse(const std::string& text);
    std::string name() const;
};

BigInt simple_order(const GroupFamilySpec& spec);

struct OutOrder {
    BigInt value;
    bool exact;  // false: `value` is only a multiple of |Out(X)|
};
OutOrder out_order(const GroupFamilySpec& spec);

// Orders of the covering matrix groups used by the bound lemmas.
BigInt sl_order(unsigned n, const BigInt& q);
BigInt su_order(unsigned n, const BigInt& q);
BigInt sp_order(unsigned n, const BigInt& q);                 // n even
BigInt so_odd_order(unsigned n, const BigInt& q);             // n odd, q odd
BigInt so_even_order(unsigned n, int sign, const BigInt& q);  // n even, sign +1 or -1

struct AdmissiblePair {
    BigInt k;
    BigInt lambda;
    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

struct AdmissibleResult {
    std::vector<AdmissiblePair> pairs;
    std::optional<bool> tits_ok;  // gcd(p, v-1) == 1, when a p was supplied
    Factorization bound_factors;
    std::size_t divisors_scanned = 0;
    bool lambda_certain = true;  // false if some lambda was only a probable prime
};

// Divisors k of k_bound with 2 < k < v-1, (v-1) | k(k-1), lambda = k(k-1)/(v-1)
// prime, lambda*v < k^2, and lambda == required_lambda when given.
AdmissibleResult admissible(const BigInt& v, const BigInt& k_bound,
                            const std::optional<BigInt>& required_lambda = std::nullopt,
                            const std::optional<BigInt>& tits_p = std::nullopt,
                            std::uint64_t seed = default_rho_seed);

std::string format_pairs(const std::vector<AdmissiblePair>& pairs);  // "(5,2) (6,3)" or "EMPTY"

enum class Expectation { empty, pairs, external };

struct CatalogRow {
    std::string id;     // table id and 1-based position, e.g. "T6.3"
    std::string table;  // T1, T3, ..., INLINE
    std::string x;
    std::string h0;
    BigInt v;
    BigInt k_bound;
    std::optional<BigInt> required_lambda;
    Expectation expect = Expectation::empty;
    std::vector<AdmissiblePair> expected_pairs;
};

// Lines "table; X; H0; v; k_bound; [lambda]; [empty | pairs=(k,l)... | external]".
std::vector<CatalogRow> parse_catalog(const std::string& text);
const std::vector<CatalogRow>& default_catalog();
// "all", a table id such as "T6", or a row id such as "T6.3"
std::vector<CatalogRow> select_rows(const std::vector<CatalogRow>& rows, const std::string& which);

enum class RowStatus { pass, fail, inconclusive };

struct RowReport {
    CatalogRow row;
    RowStatus status = RowStatus::inconclusive;
    AdmissibleResult result;
    std::string note;
    double seconds = 0;  // wall time spent on this row
};

// Rows may be evaluated by `jobs` workers; on_row sees reports in row order.
std::vector<RowReport> run_catalog(const std::vector<CatalogRow>& rows, unsigned jobs = 1,
                                   std::uint64_t seed = default_rho_seed,
                                   const std::function<void(const RowReport&)>& on_row = {});
std::string machine_line(const RowReport& r);  // "#R T6.1 PASS EMPTY"
const char* status_name(RowStatus s);

enum class Bound {
    order_psl,
    order_psu,
    order_psp,
    order_omega_odd,
    order_pomega_plus,
    order_pomega_minus,
    factorial_5,
    factorial_2,
    product,
    large_subgroup,
};

struct BoundParams {
    unsigned n = 0;
    BigInt q = 0;
    unsigned t = 0;
    BigInt x_order = 0, out_order = 0, h_order = 0;  // large_subgroup only
};

// Evaluates both sides of the inequality chain exactly; throws
// Errc::out_of_range outside the range the inequality is stated for.
bool check_bounds(Bound kind, const BoundParams& params);
Bound parse_bound(const std::string& name);
const char* bound_name(Bound kind);

// Dense integer polynomial in q; coefficient i multiplies q^i.
class IntPoly {
public:
    IntPoly() = default;
    // terms as (coefficient, exponent)
    IntPoly(std::initializer_list<std::pair<long long, unsigned>> terms);

    IntPoly& add_term(long long coeff, unsigned exp);
    const std::vector<long long>& coefficients() const { return c_; }
    long long coefficient(unsigned exp) const { return exp < c_.size() ? c_[exp] : 0; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<long long> c_;
};

IntPoly division_g(unsigned n);
// tabulated quotient and remainder for j = n - t, t in 3..6
IntPoly division_h(unsigned n, unsigned t);
IntPoly division_r(unsigned n, unsigned t);
// g_n == h * (q^j - 1) + r
bool division_identity_holds(unsigned n, unsigned j, const IntPoly& h, const IntPoly& r);
bool check_division_identity(unsigned n, unsigned t);

struct FamilyTuple {
    char family;  // 'b' or 'c'
    BigInt v, k, lambda, c, d, l;
};

std::vector<FamilyTuple> two_parameter_families(const BigInt& lambda);

}  // namespace sdesign
