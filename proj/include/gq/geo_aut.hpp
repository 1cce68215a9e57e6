#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gq/incidence.hpp"
#include "gq/perm.hpp"

namespace gq {

inline constexpr std::size_t kMaxAutomorphismPoints = 512;

struct AutomorphismSearch {
    PermGroup group;                          // acting on points
    std::uint64_t order = 0;                  // product of basic orbit lengths
    std::vector<Point> base;                  // individualized points, fixed prefix first
    std::vector<std::uint64_t> orbit_lengths; // one per non-fixed base point
};

/// Full automorphism group (or the pointwise stabilizer of `fixed`) by
/// individualization/refinement backtracking over the point-line incidence
/// graph. The search is complete; the returned order is exact.
AutomorphismSearch search_automorphisms(const IncidenceStructure& s, std::span<const Point> fixed = {});
PermGroup automorphism_group(const IncidenceStructure& s);

/// True iff `g` maps every line onto a line. Throws DomainMismatch.
bool is_automorphism(const IncidenceStructure& s, const Permutation& g);

/// Line images under a point automorphism; throws NotAutomorphism.
std::vector<LineIndex> line_images(const IncidenceStructure& s, const Permutation& g);
Permutation line_permutation(const IncidenceStructure& s, const Permutation& g);
/// The induced action of `g` on the lines of `s`.
PermGroup line_action(const IncidenceStructure& s, const PermGroup& g);

struct FixedPartition {
    Permutation g;
    std::vector<Point> p0, p1, p2;
    std::vector<LineIndex> l0, l1, l2;
};

FixedPartition fixed_partition(const IncidenceStructure& s, const Permutation& g);

struct BensonReport {
    std::uint64_t point_side = 0;  // (1+t)|P0| + |P1|
    std::uint64_t line_side = 0;   // (1+s)|L0| + |L1|
    std::uint64_t target = 0;      // (s+1)(t+1)
    std::uint64_t modulus = 0;     // s+t
    std::uint64_t residue = 0;     // point_side mod (s+t)
    bool sides_equal = false;
    bool congruence_holds = false;

    bool holds() const noexcept { return sides_equal && congruence_holds; }
};

/// Benson's congruence for an automorphism of a thick GQ. Throws NotThick
/// for thin structures and NotAutomorphism.
BensonReport benson_check(const IncidenceStructure& s, const GQOrder& order, const Permutation& g);
BensonReport benson_check(const IncidenceStructure& s, const Permutation& g);

enum class SubstructureCase { C0, C1, C1p, C2, C2p, C3, C3p, C4 };
std::string to_string(SubstructureCase c);

struct SubstructureClass {
    SubstructureCase tag = SubstructureCase::C0;
    std::optional<Point> point;      // C2 distinguished point
    std::optional<LineIndex> line;   // C2' distinguished line
    std::uint32_t a = 0, b = 0;      // grid (s1,s2), dual grid (t1,t2) or subquadrangle (s',t')
};

std::string describe(const SubstructureClass& c);

/// Shape of the fixed substructure, tested in the order
/// (0),(1),(1'),(2),(2'),(3),(3'),(4). Throws NoCaseApplies.
SubstructureClass classify_fixed_substructure(const IncidenceStructure& s, const FixedPartition& part);
SubstructureClass classify_fixed_substructure(const IncidenceStructure& s, const Permutation& g);

/// Independently re-derives the defining property of `c` on `part`.
bool recheck_substructure(const IncidenceStructure& s, const FixedPartition& part, const SubstructureClass& c);

} // namespace gq
