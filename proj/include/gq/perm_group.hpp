#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gq/perm.hpp"

namespace gq {

/// Orbit of `x` under the generators, in breadth-first discovery order.
std::vector<Point> orbit(const PermGroup& g, Point x);

/// Orbits of the points of `subset`, each sorted ascending, ordered by their
/// smallest point. Throws NotInvariant if `subset` is not a union of orbits.
std::vector<std::vector<Point>> orbits(const PermGroup& g, std::span<const Point> subset);
std::vector<std::vector<Point>> orbits(const PermGroup& g);

bool is_transitive(const PermGroup& g, std::span<const Point> subset);
bool is_transitive(const PermGroup& g);
/// Transitive on `subset` and |G| = |subset|.
bool is_regular(const PermGroup& g, std::span<const Point> subset, std::size_t cap = kDefaultEnumerationCap);
bool is_regular(const PermGroup& g, std::size_t cap = kDefaultEnumerationCap);
/// Every point stabilizer inside `subset` is trivial.
bool is_semiregular(const PermGroup& g, std::span<const Point> subset, std::size_t cap = kDefaultEnumerationCap);

PermGroup stabilizer(const PermGroup& g, Point x, std::size_t cap = kDefaultEnumerationCap);
PermGroup centralizer(const PermGroup& g, const Permutation& x, std::size_t cap = kDefaultEnumerationCap);
/// Elements of `g` normalizing `h` (h need not lie in g).
PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::size_t cap = kDefaultEnumerationCap);

struct ConjugacyClass {
    Permutation representative;  // lexicographically least member
    std::uint64_t size = 0;
};

/// Classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, std::size_t cap = kDefaultEnumerationCap);

/// Smallest block containing {0, beta} for each beta; returns a nontrivial
/// block if one exists. Throws NotTransitive.
std::optional<std::vector<Point>> find_nontrivial_block(const PermGroup& g);
bool is_primitive(const PermGroup& g);

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::size_t cap = kDefaultEnumerationCap);
/// All subgroups of order n, ordered by their sorted element lists.
std::vector<PermGroup> subgroups_of_order(const PermGroup& h, std::uint64_t n, std::size_t cap = 10'000);

/// The subgroup generated by `gens` together with `extra`.
PermGroup join(const PermGroup& g, const Permutation& extra);

/// True if `a^-1 H a = K` for some a in `g`; returns such an a.
std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                               std::size_t cap = kDefaultEnumerationCap);

} // namespace gq
