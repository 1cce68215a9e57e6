#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here shares code with src/.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Lines = std::vector<std::vector<std::uint32_t>>;
using Images = std::vector<std::uint32_t>;

inline std::vector<std::vector<bool>> incidence(std::size_t n, const Lines& lines) {
    std::vector<std::vector<bool>> m(lines.size(), std::vector<bool>(n, false));
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (auto p : lines[l]) m[l][p] = true;
    return m;
}

inline bool collinear(const Lines& lines, std::uint32_t p, std::uint32_t q) {
    if (p == q) return true;
    for (const auto& l : lines)
        if (std::count(l.begin(), l.end(), p) && std::count(l.begin(), l.end(), q)) return true;
    return false;
}

struct Order {
    long s = -1, t = -1;
};

/// Checks uniform line size and point degree, at most one line through two
/// points, and the one-collinear-point axiom for every antiflag.
inline bool is_gq(std::size_t n, const Lines& lines, Order* out = nullptr) {
    if (lines.empty() || n == 0) return false;
    const auto inc = incidence(n, lines);
    const std::size_t k = lines[0].size();
    for (const auto& l : lines)
        if (l.size() != k) return false;
    std::vector<std::size_t> deg(n, 0);
    for (const auto& l : lines)
        for (auto p : l) ++deg[p];
    if (k < 2 || deg[0] < 2) return false;  // orders s,t >= 1
    for (auto d : deg)
        if (d != deg[0]) return false;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            std::size_t common = 0;
            for (std::size_t p = 0; p < n; ++p) common += inc[a][p] && inc[b][p];
            if (common > 1) return false;
        }
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::size_t l = 0; l < lines.size(); ++l) {
            if (inc[l][p]) continue;
            std::size_t witnesses = 0;
            for (auto x : lines[l]) witnesses += collinear(lines, p, x);
            if (witnesses != 1) return false;
        }
    if (out) *out = {static_cast<long>(k) - 1, static_cast<long>(deg[0]) - 1};
    return true;
}

inline Images compose(const Images& a, const Images& b) {
    Images r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
    return r;
}

inline Images inverse(const Images& a) {
    Images r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint32_t>(x);
    return r;
}

inline std::set<Images> closure(const std::vector<Images>& gens) {
    const std::size_t n = gens.empty() ? 0 : gens[0].size();
    Images id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::set<Images> seen{id};
    std::vector<Images> queue{id};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const auto& g : gens) {
            auto x = compose(queue[h], g);
            if (seen.insert(x).second) queue.push_back(std::move(x));
        }
    return seen;
}

inline bool maps_lines_to_lines(const Lines& lines, const Images& g) {
    std::set<std::vector<std::uint32_t>> all;
    for (auto l : lines) {
        std::sort(l.begin(), l.end());
        all.insert(l);
    }
    for (const auto& l : lines) {
        std::vector<std::uint32_t> img;
        for (auto p : l) img.push_back(g[p]);
        std::sort(img.begin(), img.end());
        if (!all.count(img)) return false;
    }
    return true;
}

/// Fixed/moved point and line counts of Benson's setting, by direct search.
struct BensonCounts {
    std::size_t p0 = 0, p1 = 0, l0 = 0, l1 = 0;
};

inline BensonCounts benson_counts(std::size_t n, const Lines& lines, const Images& g) {
    BensonCounts c;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (g[p] == p) ++c.p0;
        else if (collinear(lines, p, g[p])) ++c.p1;
    }
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<std::vector<std::uint32_t>> sorted = lines;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::sort(sorted[i].begin(), sorted[i].end());
        index[sorted[i]] = i;
    }
    for (const auto& l : sorted) {
        std::vector<std::uint32_t> img;
        for (auto p : l) img.push_back(g[p]);
        std::sort(img.begin(), img.end());
        if (img == l) {
            ++c.l0;
            continue;
        }
        std::vector<std::uint32_t> common;
        std::set_intersection(l.begin(), l.end(), img.begin(), img.end(), std::back_inserter(common));
        if (!common.empty()) ++c.l1;
    }
    return c;
}

inline std::size_t centralizer_order(const std::set<Images>& group, const Images& x) {
    std::size_t c = 0;
    for (const auto& g : group) c += compose(g, x) == compose(x, g);
    return c;
}

inline Images random_permutation(std::size_t n, std::mt19937_64& rng) {
    Images p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    auto p = random_permutation(n, rng);
    p.resize(std::min(k, n));
    std::sort(p.begin(), p.end());
    return p;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b ? gcd(b, a % b) : a; }

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace oracle
