#include "gq/group_aut.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gq {

namespace {
constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
}

GroupTable::GroupTable(const PermGroup& group) : group_(group) {
    elements_ = group.elements(kMaxOrder);
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    inverse_.resize(n);
    orders_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        if (elements_[a].is_identity()) identity_ = a;
        orders_[a] = elements_[a].order();
        for (std::uint32_t b = 0; b < n; ++b) table_[a * n + b] = *group.index_of(elements_[a] * elements_[b]);
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (mul(a, b) == identity_) inverse_[a] = b;
}

std::uint32_t GroupTable::index_of(const Permutation& p) const {
    auto idx = group_.index_of(p);
    if (!idx) throw Error("NotInGroup", "permutation is not an element of the group");
    return *idx;
}

std::vector<std::uint32_t> GroupTable::generated(const std::vector<std::uint32_t>& gens) const {
    std::vector<bool> in(size(), false);
    std::vector<std::uint32_t> out{identity_};
    in[identity_] = true;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (auto g : gens) {
            const auto x = mul(out[head], g);
            if (!in[x]) {
                in[x] = true;
                out.push_back(x);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool GroupTable::is_subgroup(const std::vector<std::uint32_t>& members) const {
    if (members.empty()) return false;
    std::vector<bool> in(size(), false);
    for (auto m : members) in[m] = true;
    if (!in[identity_]) return false;
    for (auto a : members)
        for (auto b : members)
            if (!in[mul(a, inv(b))]) return false;
    return true;
}

bool GroupTable::is_abelian() const {
    for (std::uint32_t a = 0; a < size(); ++a)
        for (std::uint32_t b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupAutomorphism GroupAutomorphism::then(const GroupAutomorphism& rhs) const {
    GroupAutomorphism out{std::vector<std::uint32_t>(images.size())};
    for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = rhs.images[images[i]];
    return out;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
    GroupAutomorphism out{std::vector<std::uint32_t>(images.size())};
    for (std::uint32_t i = 0; i < images.size(); ++i) out.images[images[i]] = i;
    return out;
}

std::uint64_t GroupAutomorphism::order() const {
    std::vector<bool> seen(images.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool GroupAutomorphism::is_identity() const {
    for (std::uint32_t i = 0; i < images.size(); ++i)
        if (images[i] != i) return false;
    return true;
}

bool is_automorphism(const GroupTable& table, const std::vector<std::uint32_t>& map) {
    const auto n = static_cast<std::uint32_t>(table.size());
    if (map.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto v : map) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (map[table.mul(a, b)] != table.mul(map[a], map[b])) return false;
    return true;
}

std::vector<std::uint32_t> table_generators(const GroupTable& table) {
    std::vector<std::uint32_t> by_order(table.size());
    std::iota(by_order.begin(), by_order.end(), 0u);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](auto a, auto b) { return table.order_of(a) > table.order_of(b); });
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> sub = table.generated(gens);
    for (auto x : by_order) {
        if (sub.size() == table.size()) break;
        if (std::binary_search(sub.begin(), sub.end(), x)) continue;
        gens.push_back(x);
        sub = table.generated(gens);
    }
    return gens;
}

namespace {

class AutSearch {
public:
    AutSearch(const GroupTable& t, std::uint64_t cap) : t_(t), cap_(cap), gens_(table_generators(t)) {
        for (auto g : gens_) {
            std::vector<std::uint32_t> c;
            for (std::uint32_t x = 0; x < t.size(); ++x)
                if (t.order_of(x) == t.order_of(g)) c.push_back(x);
            candidates_.push_back(std::move(c));
        }
    }

    std::vector<GroupAutomorphism> run() {
        std::vector<std::uint32_t> images;
        recurse(images);
        return std::move(found_);
    }

private:
    const GroupTable& t_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint32_t> gens_;
    std::vector<std::vector<std::uint32_t>> candidates_;
    std::vector<GroupAutomorphism> found_;

    std::string search_space() const {
        long double product = 1;
        for (const auto& c : candidates_) product *= static_cast<long double>(c.size());
        return "unpruned generator-image space ~" + std::to_string(static_cast<double>(product)) + " over " +
               std::to_string(gens_.size()) + " generators";
    }

    // Extends the assignment gens_[j] -> images[j] to the subgroup they
    // generate; fails on an inconsistency or a collision.
    bool extend(const std::vector<std::uint32_t>& images, std::vector<std::uint32_t>& phi) const {
        const std::size_t n = t_.size();
        phi.assign(n, kUnset);
        std::vector<bool> used(n, false);
        std::vector<std::uint32_t> queue{t_.identity()};
        phi[t_.identity()] = t_.identity();
        used[t_.identity()] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto e = queue[head];
            for (std::size_t j = 0; j < images.size(); ++j) {
                const auto f = t_.mul(e, gens_[j]);
                const auto v = t_.mul(phi[e], images[j]);
                if (phi[f] == kUnset) {
                    if (used[v]) return false;
                    phi[f] = v;
                    used[v] = true;
                    queue.push_back(f);
                } else if (phi[f] != v) {
                    return false;
                }
            }
        }
        return true;
    }

    void recurse(std::vector<std::uint32_t>& images) {
        std::vector<std::uint32_t> phi;
        if (images.size() == gens_.size()) {
            extend(images, phi);
            found_.push_back({std::move(phi)});
            return;
        }
        for (auto c : candidates_[images.size()]) {
            if (++nodes_ > cap_) throw CapExceeded(cap_, "automorphism search nodes; " + search_space());
            images.push_back(c);
            if (extend(images, phi)) recurse(images);
            images.pop_back();
        }
    }
};

} // namespace

std::vector<GroupAutomorphism> group_automorphisms(const GroupTable& table, std::uint64_t cap) {
    auto out = AutSearch(table, cap).run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupAutomorphism> group_automorphisms(const PermGroup& group, std::uint64_t cap) {
    return group_automorphisms(GroupTable(group), cap);
}

} // namespace gq
