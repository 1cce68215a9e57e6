#pragma once

#include <cstdint>
#include <vector>

#include "gq/perm.hpp"

namespace gq {

/// Cayley table of a small enumerated permutation group. Element i is
/// `group.elements()[i]`, so index order is lexicographic.
class GroupTable {
public:
    static constexpr std::size_t kMaxOrder = 4096;

    explicit GroupTable(const PermGroup& group);

    std::size_t size() const noexcept { return elements_.size(); }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * size() + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint64_t order_of(std::uint32_t a) const { return orders_[a]; }
    const Permutation& element(std::uint32_t i) const { return elements_[i]; }
    std::uint32_t index_of(const Permutation& p) const;
    const PermGroup& group() const noexcept { return group_; }

    /// Indices of the subgroup generated by `gens`, sorted.
    std::vector<std::uint32_t> generated(const std::vector<std::uint32_t>& gens) const;
    bool is_subgroup(const std::vector<std::uint32_t>& members) const;
    bool is_abelian() const;

private:
    PermGroup group_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint64_t> orders_;
    std::uint32_t identity_ = 0;
};

/// An automorphism stored as its full action on element indices of a
/// GroupTable, plus the images of the generating set used to find it.
struct GroupAutomorphism {
    std::vector<std::uint32_t> images;

    std::uint32_t operator()(std::uint32_t g) const { return images[g]; }
    /// Apply this, then `rhs`.
    GroupAutomorphism then(const GroupAutomorphism& rhs) const;
    GroupAutomorphism inverse() const;
    std::uint64_t order() const;
    bool is_identity() const;

    friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
    friend auto operator<=>(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// Exhaustive check that `map` is a bijective homomorphism.
bool is_automorphism(const GroupTable& table, const std::vector<std::uint32_t>& map);

/// Small generating set chosen greedily by descending element order.
std::vector<std::uint32_t> table_generators(const GroupTable& table);

/// All automorphisms, found by assigning generator images among elements of
/// matching order and pruning on partial homomorphism consistency. Throws
/// CapExceeded once more than `cap` search nodes have been visited.
std::vector<GroupAutomorphism> group_automorphisms(const GroupTable& table, std::uint64_t cap = 1'000'000);
std::vector<GroupAutomorphism> group_automorphisms(const PermGroup& group, std::uint64_t cap = 1'000'000);

} // namespace gq
