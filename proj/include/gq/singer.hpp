#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gq/geo_aut.hpp"
#include "gq/group_aut.hpp"
#include "gq/incidence.hpp"
#include "gq/perm.hpp"

namespace gq {

// ---------------------------------------------------------------------------
// Singer group search

struct SingerSearchOptions {
    std::uint64_t node_budget = 200'000;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    bool dedupe_conjugates = true;
    std::size_t conjugacy_orbit_cap = 200'000;
};

struct SingerSearchResult {
    std::vector<PermGroup> groups;     // sorted by element list
    std::size_t distinct_found = 0;    // before conjugacy deduplication
    bool deduplicated = false;         // conjugacy classes were merged
    std::uint64_t nodes = 0;
};

/// Regular subgroups of `a` of order |P|. When |P| is a prime power the search
/// runs inside a Sylow subgroup (which contains a conjugate of every such
/// subgroup); otherwise inside `a` itself. Throws SearchBudgetExceeded.
SingerSearchResult find_singer_groups(const IncidenceStructure& s, const PermGroup& a,
                                      const SingerSearchOptions& opts = {});

/// Sorted element lists of all conjugates of `h` under `a`; nullopt when the
/// orbit is larger than `cap`.
std::optional<std::vector<std::vector<Permutation>>> conjugate_subgroups(const PermGroup& a, const PermGroup& h,
                                                                         std::size_t cap);

// ---------------------------------------------------------------------------
// Point/group identification

/// A point-regular group G with the identification g <-> base^g. Element
/// indices follow G.elements() (lexicographic), index 0 is the identity.
struct SingerContext {
    IncidenceStructure structure;
    GQOrder order;
    PermGroup group = PermGroup::trivial(0);
    Point base = 0;
    std::shared_ptr<const GroupTable> table;
    std::vector<Point> point_of;           // element index -> point
    std::vector<std::uint32_t> elem_of;    // point -> element index
    std::vector<std::uint32_t> delta;      // sorted element indices
    std::vector<bool> in_delta;

    std::size_t size() const { return point_of.size(); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table->mul(a, b); }
    std::uint32_t inv(std::uint32_t a) const { return table->inv(a); }
    std::uint32_t identity() const { return table->identity(); }
};

/// Throws NotRegular, or VerificationFailed when |Delta| != s(t+1) or Delta
/// is not inverse-closed.
SingerContext make_context(const IncidenceStructure& s, const PermGroup& g, Point base = 0);

// ---------------------------------------------------------------------------
// Multipliers

struct MultiplierRecord {
    GroupAutomorphism theta;            // on element indices
    Permutation point_map;              // induced collineation
    std::uint64_t order = 1;
    std::vector<std::uint32_t> h;       // C_G(theta), sorted
    std::vector<std::uint32_t> x;       // {g^theta g^-1}, sorted
    std::size_t x_cap_delta = 0;        // |X cap Delta|
    std::uint32_t c = 0;                // fixed lines through the base point
};

/// Recomputes H, X, c and the point map from theta alone.
MultiplierRecord make_record(const SingerContext& ctx, const GroupAutomorphism& theta);
bool preserves_delta(const SingerContext& ctx, const GroupAutomorphism& theta);

/// Aut(G) filtered by Delta^theta = Delta and the line test. Throws
/// CapExceeded from the Aut(G) search, VerificationFailed if not closed.
std::vector<MultiplierRecord> multipliers_group_side(const SingerContext& ctx, std::uint64_t cap = 1'000'000);
/// Elements of N_A(G) fixing the base point, converted to automorphisms of G.
std::vector<MultiplierRecord> multipliers_geometry_side(const SingerContext& ctx, const PermGroup& a,
                                                        std::size_t cap = kDefaultEnumerationCap);

struct MultiplierComputation {
    std::vector<MultiplierRecord> records;
    std::string strategy;            // "group-side" or "geometry-side"
    std::string fallback_reason;     // why group-side was abandoned
};

/// Group side under `cap`, geometry side otherwise.
MultiplierComputation compute_multipliers(const SingerContext& ctx, const PermGroup& a, std::uint64_t cap = 1'000'000);

// ---------------------------------------------------------------------------
// Verifications

struct Prop31Report {
    bool fixed_points_match = false;   // P0 = H
    bool p1_matches = false;           // P1 = {g : g^theta g^-1 in Delta}
    bool product_formula = false;      // |P1| = |H| |X cap Delta|
    bool c_constant = false;           // c fixed lines on every point of H
    std::size_t p0 = 0, p1 = 0, h = 0, x_cap_delta = 0;
    std::uint32_t c = 0;
    std::string first_failure;

    bool passed() const { return first_failure.empty(); }
};

Prop31Report check_prop31(const SingerContext& ctx, const MultiplierRecord& rec);

struct Prop32Report {
    bool applicable = false;           // o(theta) in {2,3}
    bool semiregular = false;          // H semiregular on L1
    bool l1_formula = false;           // |L1| = (t+1-c)|H|
    bool l0_formula = false;           // (1+s)|L0| = |H|(c + |X cap Delta|)
    std::size_t l0 = 0, l1 = 0;
    std::string first_failure;

    bool passed() const { return applicable && first_failure.empty(); }
};

Prop32Report check_prop32(const SingerContext& ctx, const MultiplierRecord& rec);

struct Theorem33Result {
    std::string tag;                              // "Trivial", "a", "b", "c", "c'", "d", "e"
    std::optional<SubstructureClass> geometry;    // absent when H = 1
    std::vector<std::string> verified;            // every case whose payload held
    std::string evidence;
};

/// Evaluates each case's full statement independently; throws NoCaseVerifies
/// unless exactly one holds.
Theorem33Result classify_theorem33(const SingerContext& ctx, const MultiplierRecord& rec);

struct Cor34Report {
    bool hypothesis_met = false;       // min(s,t) >= 4
    bool holds = false;                // |H|^4 < |G|^3
    std::uint64_t h = 0, g = 0;
    std::string status;                // "HypothesisNotMet", "Holds", "Violated"
};

Cor34Report check_cor34(const SingerContext& ctx, const MultiplierRecord& rec);
/// The bare comparison |H|^4 < |G|^3 in exact arithmetic.
bool centralizer_below_three_quarters(std::uint64_t h, std::uint64_t g);

} // namespace gq
