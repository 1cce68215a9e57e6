#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gq {

using BigInt = boost::multiprecision::cpp_int;

struct FeasibilityReport {
    std::uint64_t s = 0, t = 0;
    BigInt points, lines;            // (s+1)(st+1), (t+1)(st+1)
    bool higman_s = false;           // s <= t^2
    bool higman_t = false;           // t <= s^2
    BigInt divisor, dividend;        // s+t and st(s+1)(t+1)
    bool divisible = false;

    bool feasible() const { return higman_s && higman_t && divisible; }
};

FeasibilityReport feasible_parameters(std::uint64_t s, std::uint64_t t);

struct SubGQReport {
    bool s_equal = false, st_le_s = false;  // s = s' or s't' <= s
    bool t_equal = false, st_le_t = false;  // t = t' or s't' <= t

    bool first() const { return s_equal || st_le_s; }
    bool second() const { return t_equal || st_le_t; }
    bool holds() const { return first() && second(); }
};

/// Order constraints for a subquadrangle of order (s',t') in one of order (s,t).
SubGQReport subgq_constraints(std::uint64_t s, std::uint64_t t, std::uint64_t s2, std::uint64_t t2);

struct HSReport {
    std::uint64_t s = 0, t = 0;
    bool divides = false;   // s+t | 1+st
    bool in_range = false;  // s+2 <= t <= s^2-s
    bool coprime = false;   // gcd(s,t) = 1

    bool passes() const { return divides && in_range && coprime; }
};

HSReport hs_filter(std::uint64_t s, std::uint64_t t);

struct HSFinalReport {
    std::uint64_t max = 0;
    std::vector<std::uint64_t> bs;
    /// Thick solutions of s+t = (b-1)(1+st), one list per b.
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> solutions;
    std::uint64_t pairs_checked = 0;
    /// (s-1)(t-1) > 0, i.e. 1+st > s+t, held on every thick pair.
    bool gap_witness = false;
    /// s+t = 1+st holds on every thin pair (1,k) and (k,1), k <= max.
    bool thin_boundary = false;

    bool clean() const;
};

HSFinalReport hs_final_sweep(std::uint64_t max, std::vector<std::uint64_t> bs = {2, 3});

struct InequalityResult {
    std::string id;          // short stable tag, e.g. "I1"
    std::string statement;   // the inequality as written
    std::string domain;      // where it is claimed
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
    std::string note;

    bool holds() const { return checked > 0 && violations == 0; }
};

struct Cor34SweepReport {
    std::uint64_t lo = 0, hi = 0;
    std::uint64_t pairs = 0;         // Higman-feasible pairs in range
    std::vector<InequalityResult> inequalities;

    bool all_hold() const;
};

/// Every inequality quoted in the proof that multiplier centralizers are
/// below |G|^{3/4}, checked on all Higman-feasible pairs lo <= s,t <= hi
/// with exact integer powers.
Cor34SweepReport cor34_inequality_sweep(std::uint64_t lo = 4, std::uint64_t hi = 512);

/// Smallest integer a with a^3 >= n.
std::uint64_t ceil_cbrt(std::uint64_t n);

} // namespace gq
