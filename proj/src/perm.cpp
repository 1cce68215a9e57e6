#include "gq/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace gq {

Permutation Permutation::identity(std::size_t degree) {
    if (degree > 0xFFFF) throw Error("DomainTooLarge", "degree " + std::to_string(degree));
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const Point> images) {
    const std::size_t n = images.size();
    if (n > 0xFFFF) throw Error("DomainTooLarge", "degree " + std::to_string(n));
    std::vector<bool> seen(n, false);
    std::vector<std::uint16_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point y = images[i];
        if (y >= n || seen[y]) throw Error("NotAPermutation", "image sequence is not a bijection");
        seen[y] = true;
        img[i] = static_cast<std::uint16_t>(y);
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Point a = cyc[i];
            if (a >= degree || used[a]) throw Error("NotAPermutation", "bad cycle notation");
            used[a] = true;
            img[a] = cyc[(i + 1) % cyc.size()];
        }
    }
    return from_images(img);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    std::vector<std::uint16_t> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) img[i] = rhs.images_[images_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint16_t> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<std::uint16_t>(i);
    return Permutation(std::move(img));
}

Permutation Permutation::pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Permutation acc = identity(degree());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
    // x^(g^-1 h g): send g(x) to g(h(x)).
    std::vector<std::uint16_t> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) img[g.images_[i]] = g.images_[images_[i]];
    return Permutation(std::move(img));
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::size_t Permutation::fixed_point_count() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
    return n;
}

std::uint64_t Permutation::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : images_) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

std::pair<std::uint32_t, bool> PermutationIndex::insert(const Permutation& p) {
    const auto h = p.hash();
    auto [lo, hi] = buckets_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
        if (items_[it->second] == p) return {it->second, false};
    const auto idx = static_cast<std::uint32_t>(items_.size());
    items_.push_back(p);
    buckets_.emplace(h, idx);
    return {idx, true};
}

std::optional<std::uint32_t> PermutationIndex::find(const Permutation& p) const {
    auto [lo, hi] = buckets_.equal_range(p.hash());
    for (auto it = lo; it != hi; ++it)
        if (items_[it->second] == p) return it->second;
    return std::nullopt;
}

PermutationIndex closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap) {
    PermutationIndex idx;
    idx.insert(Permutation::identity(degree));
    for (std::size_t head = 0; head < idx.size(); ++head) {
        for (const auto& g : generators) {
            Permutation next = idx.items()[head] * g;
            if (idx.insert(next).second && idx.size() > cap)
                throw CapExceeded(cap, "group closure has more than " + std::to_string(cap) + " elements");
        }
    }
    return idx;
}

std::vector<Permutation> greedy_generators(std::size_t degree, std::span<const Permutation> elements) {
    // Prefer elements of large order: fewer generators, smaller search trees downstream.
    std::vector<std::uint32_t> order_idx(elements.size());
    std::iota(order_idx.begin(), order_idx.end(), 0u);
    std::vector<std::uint64_t> ord(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) ord[i] = elements[i].order();
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return ord[a] > ord[b]; });

    std::vector<Permutation> gens;
    PermutationIndex sub = closure(degree, gens, elements.size());
    for (auto i : order_idx) {
        if (sub.size() == elements.size()) break;
        if (sub.contains(elements[i])) continue;
        gens.push_back(elements[i]);
        sub = closure(degree, gens, elements.size());
    }
    return gens;
}

struct PermGroup::Cache {
    std::mutex mutex;
    bool ready = false;
    PermutationIndex index;  // items sorted lexicographically once ready
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.degree() != degree) throw Error("DomainMismatch", "generator degree differs from group degree");
        if (!g.is_identity()) generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermGroup g(degree, greedy_generators(degree, elements));
    auto& c = *g.cache_;
    for (const auto& e : elements) c.index.insert(e);
    c.ready = true;
    return g;
}

const PermGroup::Cache& PermGroup::enumerate(std::size_t cap) const {
    std::lock_guard lock(cache_->mutex);
    if (cache_->ready) {
        if (cache_->index.size() > cap)
            throw CapExceeded(cap, "group has " + std::to_string(cache_->index.size()) + " elements");
        return *cache_;
    }
    auto idx = closure(degree_, generators_, cap);
    auto items = idx.release();
    std::sort(items.begin(), items.end());
    for (const auto& e : items) cache_->index.insert(e);
    cache_->ready = true;
    return *cache_;
}

const std::vector<Permutation>& PermGroup::elements(std::size_t cap) const { return enumerate(cap).index.items(); }

std::uint64_t PermGroup::order(std::size_t cap) const { return enumerate(cap).index.size(); }

std::optional<std::uint32_t> PermGroup::index_of(const Permutation& g, std::size_t cap) const {
    return enumerate(cap).index.find(g);
}

bool PermGroup::contains(const Permutation& g, std::size_t cap) const { return index_of(g, cap).has_value(); }

bool PermGroup::is_enumerated() const {
    std::lock_guard lock(cache_->mutex);
    return cache_->ready;
}

} // namespace gq
