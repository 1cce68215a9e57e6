#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gq/arithmetic.hpp"
#include "gq/perm.hpp"

namespace gq {

enum class Family { Alt, PSL, PSU, PSp, OmegaOdd, POmega, Sz, G2, TwoF4, E8, M11 };

std::string to_string(Family f);
/// Accepts the names printed by to_string. Throws UnsupportedFamily.
Family parse_family(const std::string& name);

/// A finite simple group by family and parameters. For PSp and Omega_odd `n`
/// is the half dimension (PSp(2n,q), Omega(2n+1,q)); for POmega it is half
/// the dimension and `eps` is +1 or -1.
struct SimpleGroupSpec {
    Family family = Family::Alt;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    int eps = 0;

    static SimpleGroupSpec alt(std::uint32_t n) { return {Family::Alt, n, 0, 0}; }
    static SimpleGroupSpec psl(std::uint32_t n, std::uint64_t q) { return {Family::PSL, n, q, 0}; }
    static SimpleGroupSpec m11() { return {Family::M11, 0, 0, 0}; }

    std::string name() const;
    /// Throws InvalidSpec when the parameters leave the family's simple range.
    void validate() const;
    bool valid() const;

    bool operator==(const SimpleGroupSpec&) const = default;
};

struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t f = 0;
};
std::optional<PrimePower> prime_power(std::uint64_t q);

BigInt order_of_simple(const SimpleGroupSpec& spec);

struct CentralizerEstimate {
    std::string witness;
    BigInt value;
    bool exact = true;   // false: value is a lower bound for |C_T(x)|
};

/// Closed-form |C_T(x)| for the family's chosen witness. Throws
/// UnsupportedFamily (M11 has no closed form) or NonIntegerFormulaValue.
CentralizerEstimate centralizer_formula(const SimpleGroupSpec& spec);

/// Rational exponent num/den in (0,1].
struct Exponent {
    std::uint32_t num = 1, den = 1;

    static constexpr Exponent quarter() { return {1, 4}; }
    static constexpr Exponent half() { return {1, 2}; }
    static constexpr Exponent three_quarters() { return {3, 4}; }
    /// 1 - r/4 for r in {1,2,3}.
    static Exponent one_minus_quarter(std::uint32_t r);
    std::string str() const;
};

/// c > t^e, decided as c^den > t^num.
bool exceeds(const BigInt& c, const BigInt& t, Exponent e);
/// c >= t^e, decided as c^den >= t^num.
bool reaches(const BigInt& c, const BigInt& t, Exponent e);

enum class Decision { Exceeds, DoesNotExceed, Inconclusive };
std::string to_string(Decision d);

/// Lower bounds can only certify Exceeds.
Decision threshold_class(const CentralizerEstimate& c, const BigInt& order, Exponent e);
Decision threshold_class(const SimpleGroupSpec& spec, Exponent e);

// ---------------------------------------------------------------------------
// Brute force

struct BruteMax {
    std::uint64_t max = 0;
    Permutation witness;
    std::uint64_t group_order = 0;
    std::size_t classes = 0;
};

/// Maximum |C_G(x)| over nonidentity x, one representative per class.
BruteMax brute_max_centralizer(const PermGroup& g, std::size_t cap = kDefaultEnumerationCap);
/// |G| divided by the size of the conjugacy class of x.
std::uint64_t centralizer_order(const PermGroup& g, const Permutation& x, std::size_t cap = kDefaultEnumerationCap);

PermGroup alternating_group(std::uint32_t n);
/// PSL(n,q) on the points of PG(n-1,q), generated by elementary transvections.
PermGroup psl_group(std::uint32_t n, std::uint32_t q);
/// The transvection I + E_{01} in the same action.
Permutation psl_transvection(std::uint32_t n, std::uint32_t q);
/// PSp(4,3) on the 40 points of W(3), generated by symplectic transvections.
PermGroup psp43_group();
/// M11 on 11 points; throws VerificationFailed unless the closure has 7920
/// elements and is 4-transitive.
PermGroup m11_group();
bool is_k_transitive(const PermGroup& g, std::uint32_t k);

struct BruteRepresentation {
    PermGroup group = PermGroup::trivial(0);
    std::optional<Permutation> witness;   // element matching the formula witness
    std::string action;
};

/// Permutation representation for the small groups with a brute-force oracle:
/// Alt(n) n <= 10, PSL(n,q) with small projective space, PSp(4,3), M11.
/// Throws UnsupportedFamily otherwise.
BruteRepresentation brute_representation(const SimpleGroupSpec& spec);

struct FormulaCheck {
    SimpleGroupSpec spec;
    std::string status;                 // "Match", "FormulaMismatch", "NonIntegerFormulaValue", "NoFormula"
    std::optional<BigInt> formula;      // absent unless the formula evaluated
    std::uint64_t brute_witness = 0;    // |C_G(witness)|, 0 when no witness
    BruteMax brute;
    BigInt order_formula;
    bool order_matches = false;
    std::string detail;

    bool ok() const { return status == "Match" && order_matches; }
};

/// Formula value for the witness against brute force on the representation.
/// Discrepancies are reported in `status`, never hidden.
FormulaCheck compare_formula_brute(const SimpleGroupSpec& spec);

// ---------------------------------------------------------------------------
// Table 1

enum class Table1Mode { SD, CD_r2, CD_r3 };
std::string to_string(Table1Mode m);
Table1Mode parse_table1_mode(const std::string& s);
/// The exponent 1 - r/4 whose reach excludes T.
Exponent table1_exponent(Table1Mode m);

struct Table1Entry {
    SimpleGroupSpec spec;
    std::string status;                 // "excluded", "survives", "invalid"
    std::optional<CentralizerEstimate> estimate;
    BigInt order;
    std::string reason;
};

struct Table1Result {
    Table1Mode mode = Table1Mode::SD;
    std::vector<Table1Entry> entries;
    std::vector<SimpleGroupSpec> survivors;
};

/// Excludes T when the witness has |C_T(x)| >= |T|^{1-r/4}. M11 uses its
/// brute-force maximum; specs outside a family's simple range are "invalid".
Table1Result table1_filter(Table1Mode mode, const std::vector<SimpleGroupSpec>& specs);

} // namespace gq
