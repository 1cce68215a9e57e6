#include "gq/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace gq {

std::vector<Point> orbit(const PermGroup& g, Point x) {
    std::vector<Point> out{x};
    std::vector<bool> seen(g.degree(), false);
    seen[x] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& gen : g.generators()) {
            const Point y = gen[out[head]];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g, std::span<const Point> subset) {
    std::vector<bool> in_subset(g.degree(), false), done(g.degree(), false);
    for (auto x : subset) in_subset[x] = true;
    std::vector<Point> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<Point>> out;
    for (auto x : sorted) {
        if (done[x]) continue;
        auto orb = orbit(g, x);
        for (auto y : orb) {
            if (!in_subset[y]) throw Error("NotInvariant", "subset is not a union of orbits");
            done[y] = true;
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
    std::vector<Point> all(g.degree());
    std::iota(all.begin(), all.end(), Point{0});
    return orbits(g, all);
}

bool is_transitive(const PermGroup& g, std::span<const Point> subset) {
    if (subset.empty()) return false;
    try {
        return orbits(g, subset).size() == 1;
    } catch (const Error& e) {
        if (e.kind() == "NotInvariant") return false;
        throw;
    }
}

bool is_transitive(const PermGroup& g) { return orbit(g, 0).size() == g.degree(); }

bool is_regular(const PermGroup& g, std::span<const Point> subset, std::size_t cap) {
    return is_transitive(g, subset) && g.order(cap) == subset.size();
}

bool is_regular(const PermGroup& g, std::size_t cap) { return is_transitive(g) && g.order(cap) == g.degree(); }

bool is_semiregular(const PermGroup& g, std::span<const Point> subset, std::size_t cap) {
    const auto n = g.order(cap);
    for (auto x : subset)
        if (orbit(g, x).size() != n) return false;
    return true;
}

namespace {

template <class Pred>
PermGroup filter_subgroup(const PermGroup& g, std::size_t cap, Pred pred) {
    std::vector<Permutation> kept;
    for (const auto& e : g.elements(cap))
        if (pred(e)) kept.push_back(e);
    return PermGroup::from_elements(g.degree(), std::move(kept));
}

} // namespace

PermGroup stabilizer(const PermGroup& g, Point x, std::size_t cap) {
    return filter_subgroup(g, cap, [x](const Permutation& e) { return e[x] == x; });
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, std::size_t cap) {
    return filter_subgroup(g, cap, [&x](const Permutation& e) { return e * x == x * e; });
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::size_t cap) {
    h.elements(cap);
    return filter_subgroup(g, cap, [&](const Permutation& e) {
        for (const auto& gen : h.generators())
            if (!h.contains(gen.conjugate_by(e), cap)) return false;
        return true;
    });
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, std::size_t cap) {
    const auto& elems = g.elements(cap);
    std::vector<bool> assigned(elems.size(), false);
    std::vector<ConjugacyClass> out;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < elems.size(); ++i) {
        if (assigned[i]) continue;
        // elems are sorted, so the first unassigned member is the least one.
        queue.assign(1, i);
        assigned[i] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& gen : g.generators()) {
                const auto j = *g.index_of(elems[queue[head]].conjugate_by(gen), cap);
                if (!assigned[j]) {
                    assigned[j] = true;
                    queue.push_back(j);
                }
            }
        }
        out.push_back({elems[i], queue.size()});
    }
    return out;
}

std::optional<std::vector<Point>> find_nontrivial_block(const PermGroup& g) {
    const std::size_t n = g.degree();
    if (!is_transitive(g)) throw Error("NotTransitive", "primitivity requires a transitive group");
    std::vector<Point> parent(n);
    auto find = [&](Point x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Point beta = 1; beta < n; ++beta) {
        std::iota(parent.begin(), parent.end(), Point{0});
        std::vector<std::pair<Point, Point>> queue{{0, beta}};
        parent[beta] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [a, b] = queue[head];
            for (const auto& gen : g.generators()) {
                const Point ra = find(gen[a]), rb = find(gen[b]);
                if (ra != rb) {
                    parent[std::max(ra, rb)] = std::min(ra, rb);
                    queue.emplace_back(gen[a], gen[b]);
                }
            }
        }
        std::vector<Point> block;
        for (Point x = 0; x < n; ++x)
            if (find(x) == find(0)) block.push_back(x);
        if (block.size() < n) return block;
    }
    return std::nullopt;
}

bool is_primitive(const PermGroup& g) { return !find_nontrivial_block(g).has_value(); }

namespace {

bool normalizes(const Permutation& x, const std::vector<Permutation>& gens, const PermutationIndex& set) {
    for (const auto& h : gens)
        if (!set.contains(h.conjugate_by(x))) return false;
    return true;
}

} // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::size_t cap) {
    std::uint64_t order = g.order(cap), target = 1;
    while (order % p == 0) {
        order /= p;
        target *= p;
    }
    std::vector<Permutation> gens;
    PermutationIndex sub = closure(g.degree(), gens, cap);
    while (sub.size() < target) {
        bool extended = false;
        // |P| < p^a forces p | [N(P):P], so some x in N(P)\P has x^p in P.
        for (const auto& x : g.elements(cap)) {
            if (sub.contains(x) || !sub.contains(x.pow(static_cast<std::int64_t>(p)))) continue;
            if (!normalizes(x, gens, sub)) continue;
            gens.push_back(x);
            sub = closure(g.degree(), gens, cap);
            extended = true;
            break;
        }
        if (!extended) throw Error("InternalError", "Sylow extension failed");
    }
    return PermGroup::from_elements(g.degree(), sub.release());
}

std::vector<PermGroup> subgroups_of_order(const PermGroup& h, std::uint64_t n, std::size_t cap) {
    const auto& elems = h.elements(cap);
    const std::size_t total = elems.size();
    if (total % n != 0) return {};

    using Members = std::vector<std::uint32_t>;
    auto generate = [&](const std::vector<Permutation>& gens) -> std::optional<Members> {
        PermutationIndex sub;
        try {
            sub = closure(h.degree(), gens, n);
        } catch (const CapExceeded&) {
            return std::nullopt;
        }
        if (n % sub.size() != 0) return std::nullopt;
        Members m;
        for (const auto& e : sub.items()) m.push_back(*h.index_of(e, cap));
        std::sort(m.begin(), m.end());
        return m;
    };

    std::set<Members> seen;
    std::vector<std::pair<Members, std::vector<Permutation>>> frontier{{Members{*h.index_of(Permutation::identity(h.degree()), cap)}, {}}};
    std::vector<Members> found;
    if (n == 1) found.push_back(frontier.front().first);
    while (!frontier.empty()) {
        decltype(frontier) next;
        for (const auto& [members, gens] : frontier) {
            std::vector<bool> inside(total, false);
            for (auto i : members) inside[i] = true;
            for (std::uint32_t i = 0; i < total; ++i) {
                if (inside[i] || n % elems[i].order() != 0) continue;
                auto ext_gens = gens;
                ext_gens.push_back(elems[i]);
                auto m = generate(ext_gens);
                if (!m || !seen.insert(*m).second) continue;
                if (m->size() == n)
                    found.push_back(*m);
                else
                    next.emplace_back(std::move(*m), std::move(ext_gens));
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());
    std::vector<PermGroup> out;
    for (const auto& m : found) {
        std::vector<Permutation> sub;
        for (auto i : m) sub.push_back(elems[i]);
        out.push_back(PermGroup::from_elements(h.degree(), std::move(sub)));
    }
    return out;
}

PermGroup join(const PermGroup& g, const Permutation& extra) {
    auto gens = g.generators();
    gens.push_back(extra);
    return PermGroup(g.degree(), std::move(gens));
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                               std::size_t cap) {
    if (h.order(cap) != k.order(cap)) return std::nullopt;
    for (const auto& a : g.elements(cap)) {
        bool ok = true;
        for (const auto& gen : h.generators())
            if (!k.contains(gen.conjugate_by(a), cap)) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

} // namespace gq
