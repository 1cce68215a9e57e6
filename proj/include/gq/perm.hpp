#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gq/error.hpp"

namespace gq {

using Point = std::uint32_t;

/// A bijection of {0..n-1} stored in image form. Products act on the right:
/// x^(a*b) = (x^a)^b, matching the exponent notation used for group actions.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t degree);
    static Permutation from_images(std::span<const Point> images);
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](Point x) const { return images_[x]; }
    const std::vector<std::uint16_t>& images() const noexcept { return images_; }
    std::vector<Point> image_vector() const { return {images_.begin(), images_.end()}; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation pow(std::int64_t e) const;
    /// g^-1 * this * g
    Permutation conjugate_by(const Permutation& g) const;

    std::uint64_t order() const;
    bool is_identity() const noexcept;
    std::size_t fixed_point_count() const noexcept;
    std::uint64_t hash() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {}

    std::vector<std::uint16_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept { return static_cast<std::size_t>(p.hash()); }
};

/// Insertion-ordered set of permutations with O(1) membership lookup.
class PermutationIndex {
public:
    /// Returns (index, inserted).
    std::pair<std::uint32_t, bool> insert(const Permutation& p);
    std::optional<std::uint32_t> find(const Permutation& p) const;
    bool contains(const Permutation& p) const { return find(p).has_value(); }

    std::size_t size() const noexcept { return items_.size(); }
    const std::vector<Permutation>& items() const noexcept { return items_; }
    std::vector<Permutation> release() { buckets_.clear(); return std::move(items_); }

private:
    std::vector<Permutation> items_;
    std::unordered_multimap<std::uint64_t, std::uint32_t> buckets_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// A finitely generated permutation group. Immutable after construction; the
/// element list is computed once on demand by breadth-first closure and shared
/// between copies.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    static PermGroup trivial(std::size_t degree);
    /// Builds a group whose full element set is already known. The elements
    /// must be closed under multiplication; a small generating set is
    /// extracted greedily.
    static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

    /// All elements in lexicographic order of image sequences.
    const std::vector<Permutation>& elements(std::size_t cap = kDefaultEnumerationCap) const;
    std::uint64_t order(std::size_t cap = kDefaultEnumerationCap) const;
    std::optional<std::uint32_t> index_of(const Permutation& g, std::size_t cap = kDefaultEnumerationCap) const;
    bool contains(const Permutation& g, std::size_t cap = kDefaultEnumerationCap) const;

    /// True once the element list has been computed.
    bool is_enumerated() const;

private:
    struct Cache;

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::shared_ptr<Cache> cache_;

    const Cache& enumerate(std::size_t cap) const;
};

/// Breadth-first closure of `generators` starting from the identity; throws
/// CapExceeded when more than `cap` elements are produced.
PermutationIndex closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap);

/// Greedy generating set for a group given by its complete element list.
std::vector<Permutation> greedy_generators(std::size_t degree, std::span<const Permutation> elements);

} // namespace gq
