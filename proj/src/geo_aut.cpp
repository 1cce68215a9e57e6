#include "gq/geo_aut.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gq/perm_group.hpp"

namespace gq {

namespace {

using Coloring = std::vector<std::uint32_t>;

std::uint32_t color_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Replaces arbitrary keys by their rank among distinct keys.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys) {
    std::vector<std::uint32_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    Coloring out(keys.size());
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++rank;
        out[order[i]] = rank;
    }
    return out;
}

// Individualization/refinement search on the incidence graph. Vertices
// 0..n-1 are points, n..n+m-1 are lines.
class AutomorphismSearcher {
public:
    explicit AutomorphismSearcher(const IncidenceStructure& s) : s_(s), n_(s.point_count()) {
        const std::size_t m = s.line_count();
        adj_.resize(n_ + m);
        for (LineIndex l = 0; l < m; ++l)
            for (auto p : s.line(l)) {
                adj_[p].push_back(static_cast<std::uint32_t>(n_ + l));
                adj_[n_ + l].push_back(p);
            }
    }

    AutomorphismSearch run(std::span<const Point> fixed) {
        std::vector<std::pair<std::uint32_t, std::size_t>> init(adj_.size());
        for (std::size_t v = 0; v < adj_.size(); ++v) init[v] = {v < n_ ? 0u : 1u, adj_[v].size()};
        levels_.push_back(refine(rank_keys(init)));

        for (auto f : fixed) {
            if (f >= n_) throw Error("InvalidInput", "fixed point " + std::to_string(f) + " out of range");
            if (std::find(base_.begin(), base_.end(), f) != base_.end())
                throw Error("InvalidInput", "fixed point listed twice");
            base_.push_back(f);
            levels_.push_back(refine(individualize(levels_.back(), f)));
        }
        while (auto b = choose_branch_point(levels_.back())) {
            base_.push_back(*b);
            levels_.push_back(refine(individualize(levels_.back(), *b)));
        }

        std::vector<Permutation> gens;
        const std::size_t depth = base_.size();
        std::vector<std::uint64_t> lengths(depth - fixed.size(), 1);
        for (std::size_t i = depth; i-- > fixed.size();) {
            const Coloring& level = levels_[i];
            const auto cell = level[base_[i]];
            std::vector<bool> settled(n_, false);
            auto mark_orbit = [&](Point x) {
                std::vector<Point> todo{x};
                settled[x] = true;
                std::size_t count = 0;
                while (!todo.empty()) {
                    const auto y = todo.back();
                    todo.pop_back();
                    ++count;
                    for (const auto& g : gens)
                        if (!settled[g[y]]) {
                            settled[g[y]] = true;
                            todo.push_back(g[y]);
                        }
                }
                return count;
            };
            std::vector<bool> in_orbit(n_, false);
            auto recompute_orbit = [&] {
                std::fill(in_orbit.begin(), in_orbit.end(), false);
                std::vector<Point> todo{base_[i]};
                in_orbit[base_[i]] = true;
                std::uint64_t size = 0;
                while (!todo.empty()) {
                    const auto y = todo.back();
                    todo.pop_back();
                    ++size;
                    for (const auto& g : gens)
                        if (!in_orbit[g[y]]) {
                            in_orbit[g[y]] = true;
                            todo.push_back(g[y]);
                        }
                }
                return size;
            };
            std::uint64_t orbit_size = recompute_orbit();
            for (Point v = 0; v < n_; ++v) {
                if (level[v] != cell || in_orbit[v] || settled[v]) continue;
                if (auto g = branch(i, level, v)) {
                    gens.push_back(std::move(*g));
                    orbit_size = recompute_orbit();
                } else {
                    mark_orbit(v);
                }
            }
            lengths[i - fixed.size()] = orbit_size;
        }

        AutomorphismSearch out{PermGroup(n_, gens), 1, base_, lengths};
        for (auto l : lengths) out.order *= l;
        return out;
    }

private:
    const IncidenceStructure& s_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<Point> base_;
    std::vector<Coloring> levels_;

    Coloring refine(Coloring col) const {
        std::uint32_t k = color_count(col);
        std::vector<std::vector<std::uint32_t>> keys(col.size());
        for (;;) {
            for (std::size_t v = 0; v < col.size(); ++v) {
                auto& key = keys[v];
                key.clear();
                key.push_back(col[v]);
                for (auto u : adj_[v]) key.push_back(col[u]);
                std::sort(key.begin() + 1, key.end());
            }
            Coloring next = rank_keys(keys);
            const auto k2 = color_count(next);
            col = std::move(next);
            if (k2 == k) return col;
            k = k2;
        }
    }

    static Coloring individualize(const Coloring& col, std::uint32_t v) {
        std::vector<std::uint64_t> keys(col.size());
        for (std::size_t u = 0; u < col.size(); ++u) keys[u] = std::uint64_t{col[u]} * 2 + (u == v ? 0 : 1);
        return rank_keys(keys);
    }

    static std::vector<std::uint32_t> cell_sizes(const Coloring& col) {
        std::vector<std::uint32_t> sizes(color_count(col), 0);
        for (auto c : col) ++sizes[c];
        return sizes;
    }

    std::optional<Point> choose_branch_point(const Coloring& col) const {
        std::vector<std::uint32_t> sizes(color_count(col), 0);
        for (Point p = 0; p < n_; ++p) ++sizes[col[p]];
        std::optional<std::uint32_t> best;
        for (std::uint32_t c = 0; c < sizes.size(); ++c)
            if (sizes[c] > 1 && (!best || sizes[c] < sizes[*best])) best = c;
        if (!best) return std::nullopt;
        for (Point p = 0; p < n_; ++p)
            if (col[p] == *best) return p;
        return std::nullopt;
    }

    // Tries to map base_[i] to v, given that `target` is the image of levels_[i].
    std::optional<Permutation> branch(std::size_t i, const Coloring& target, Point v) const {
        Coloring next = refine(individualize(target, v));
        if (cell_sizes(next) != cell_sizes(levels_[i + 1])) return std::nullopt;
        return descend(i + 1, next);
    }

    std::optional<Permutation> descend(std::size_t j, const Coloring& target) const {
        if (j == base_.size()) {
            std::vector<Point> where(color_count(target));
            for (Point p = 0; p < n_; ++p) where[target[p]] = p;
            std::vector<Point> images(n_);
            for (Point p = 0; p < n_; ++p) images[p] = where[levels_[j][p]];
            auto g = Permutation::from_images(images);
            if (!is_automorphism(s_, g)) return std::nullopt;
            return g;
        }
        const auto cell = levels_[j][base_[j]];
        for (Point v = 0; v < n_; ++v)
            if (target[v] == cell)
                if (auto g = branch(j, target, v)) return g;
        return std::nullopt;
    }
};

std::optional<LineIndex> image_line(const IncidenceStructure& s, const Permutation& g, LineIndex l,
                                    std::vector<Point>& scratch) {
    const auto& pts = s.line(l);
    if (auto cand = s.line_through(g[pts[0]], g[pts[1]])) {
        if (s.line(*cand).size() == pts.size()) {
            bool ok = true;
            for (std::size_t i = 2; i < pts.size() && ok; ++i) ok = s.incident(g[pts[i]], *cand);
            if (ok) return cand;
        }
    }
    scratch.clear();
    for (auto p : pts) scratch.push_back(g[p]);
    std::sort(scratch.begin(), scratch.end());
    return s.find_line(scratch);
}

void require_domain(const IncidenceStructure& s, const Permutation& g) {
    if (g.degree() != s.point_count())
        throw Error("DomainMismatch", "permutation of degree " + std::to_string(g.degree()) + " on " +
                                          std::to_string(s.point_count()) + " points");
}

} // namespace

AutomorphismSearch search_automorphisms(const IncidenceStructure& s, std::span<const Point> fixed) {
    if (s.point_count() > kMaxAutomorphismPoints)
        throw Error("TooLarge", std::to_string(s.point_count()) + " points exceeds " +
                                    std::to_string(kMaxAutomorphismPoints));
    return AutomorphismSearcher(s).run(fixed);
}

PermGroup automorphism_group(const IncidenceStructure& s) { return search_automorphisms(s).group; }

bool is_automorphism(const IncidenceStructure& s, const Permutation& g) {
    require_domain(s, g);
    std::vector<Point> scratch;
    for (LineIndex l = 0; l < s.line_count(); ++l)
        if (!image_line(s, g, l, scratch)) return false;
    return true;
}

std::vector<LineIndex> line_images(const IncidenceStructure& s, const Permutation& g) {
    require_domain(s, g);
    std::vector<LineIndex> out(s.line_count());
    std::vector<Point> scratch;
    for (LineIndex l = 0; l < s.line_count(); ++l) {
        auto img = image_line(s, g, l, scratch);
        if (!img) throw Error("NotAutomorphism", "line " + std::to_string(l) + " is not mapped to a line");
        out[l] = *img;
    }
    return out;
}

Permutation line_permutation(const IncidenceStructure& s, const Permutation& g) {
    const auto imgs = line_images(s, g);
    return Permutation::from_images(imgs);
}

PermGroup line_action(const IncidenceStructure& s, const PermGroup& g) {
    std::vector<Permutation> gens;
    for (const auto& x : g.generators()) gens.push_back(line_permutation(s, x));
    return PermGroup(s.line_count(), std::move(gens));
}

FixedPartition fixed_partition(const IncidenceStructure& s, const Permutation& g) {
    const auto limg = line_images(s, g);
    FixedPartition out{g, {}, {}, {}, {}, {}, {}};
    for (Point p = 0; p < s.point_count(); ++p) {
        if (g[p] == p)
            out.p0.push_back(p);
        else if (s.collinear(p, g[p]))
            out.p1.push_back(p);
        else
            out.p2.push_back(p);
    }
    for (LineIndex l = 0; l < s.line_count(); ++l) {
        if (limg[l] == l)
            out.l0.push_back(l);
        else if (s.concurrent(l, limg[l]))
            out.l1.push_back(l);
        else
            out.l2.push_back(l);
    }
    return out;
}

BensonReport benson_check(const IncidenceStructure& s, const GQOrder& order, const Permutation& g) {
    if (!order.thick())
        throw Error("NotThick", "order (" + std::to_string(order.s) + "," + std::to_string(order.t) + ")");
    const auto part = fixed_partition(s, g);
    BensonReport r;
    r.point_side = (1 + std::uint64_t{order.t}) * part.p0.size() + part.p1.size();
    r.line_side = (1 + std::uint64_t{order.s}) * part.l0.size() + part.l1.size();
    r.target = (std::uint64_t{order.s} + 1) * (std::uint64_t{order.t} + 1);
    r.modulus = std::uint64_t{order.s} + order.t;
    r.residue = r.point_side % r.modulus;
    r.sides_equal = r.point_side == r.line_side;
    r.congruence_holds = r.residue == r.target % r.modulus;
    return r;
}

BensonReport benson_check(const IncidenceStructure& s, const Permutation& g) {
    return benson_check(s, validate_gq(s), g);
}

std::string to_string(SubstructureCase c) {
    switch (c) {
    case SubstructureCase::C0: return "C0";
    case SubstructureCase::C1: return "C1";
    case SubstructureCase::C1p: return "C1'";
    case SubstructureCase::C2: return "C2";
    case SubstructureCase::C2p: return "C2'";
    case SubstructureCase::C3: return "C3";
    case SubstructureCase::C3p: return "C3'";
    case SubstructureCase::C4: return "C4";
    }
    return "?";
}

std::string describe(const SubstructureClass& c) {
    auto out = to_string(c.tag);
    switch (c.tag) {
    case SubstructureCase::C3:
    case SubstructureCase::C3p:
    case SubstructureCase::C4:
        out += "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
        break;
    case SubstructureCase::C2: out += "[point " + std::to_string(*c.point) + "]"; break;
    case SubstructureCase::C2p: out += "[line " + std::to_string(*c.line) + "]"; break;
    default: break;
    }
    return out;
}

namespace {

bool pairwise_noncollinear(const IncidenceStructure& s, const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (s.collinear(pts[i], pts[j])) return false;
    return true;
}

bool pairwise_nonconcurrent(const IncidenceStructure& s, const std::vector<LineIndex>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (s.concurrent(ls[i], ls[j])) return false;
    return true;
}

bool is_c2_point(const IncidenceStructure& s, const FixedPartition& part, Point p) {
    for (auto q : part.p0)
        if (!s.collinear(p, q)) return false;
    for (auto l : part.l0)
        if (!s.incident(p, l)) return false;
    return true;
}

bool is_c2p_line(const IncidenceStructure& s, const FixedPartition& part, LineIndex l) {
    for (auto m : part.l0)
        if (m != l && !s.concurrent(l, m)) return false;
    for (auto p : part.p0)
        if (!s.incident(p, l)) return false;
    return true;
}

} // namespace

SubstructureClass classify_fixed_substructure(const IncidenceStructure& s, const FixedPartition& part) {
    using C = SubstructureCase;
    SubstructureClass out;
    if (part.p0.empty() && part.l0.empty()) return out;
    if (part.l0.empty() && pairwise_noncollinear(s, part.p0)) {
        out.tag = C::C1;
        return out;
    }
    if (part.p0.empty() && pairwise_nonconcurrent(s, part.l0)) {
        out.tag = C::C1p;
        return out;
    }
    if (!part.l0.empty())
        for (auto p : part.p0)
            if (is_c2_point(s, part, p)) {
                out.tag = C::C2;
                out.point = p;
                return out;
            }
    if (!part.p0.empty())
        for (auto l : part.l0)
            if (is_c2p_line(s, part, l)) {
                out.tag = C::C2p;
                out.line = l;
                return out;
            }
    if (auto sub = restrict_to(s, part.p0, part.l0)) {
        const auto shape = classify_thin(*sub);
        if (shape.kind != GridShape::Kind::NotThin) {
            out.tag = shape.kind == GridShape::Kind::Grid ? C::C3 : C::C3p;
            out.a = std::min(shape.a, shape.b);
            out.b = std::max(shape.a, shape.b);
            return out;
        }
        try {
            const auto ord = validate_gq(*sub);
            if (std::min(ord.s, ord.t) >= 2) {
                out.tag = C::C4;
                out.a = ord.s;
                out.b = ord.t;
                return out;
            }
        } catch (const Error&) {
            // not a subquadrangle; fall through
        }
    }
    throw Error("NoCaseApplies", "fixed substructure with " + std::to_string(part.p0.size()) + " points and " +
                                     std::to_string(part.l0.size()) + " lines");
}

SubstructureClass classify_fixed_substructure(const IncidenceStructure& s, const Permutation& g) {
    return classify_fixed_substructure(s, fixed_partition(s, g));
}

bool recheck_substructure(const IncidenceStructure& s, const FixedPartition& part, const SubstructureClass& c) {
    using C = SubstructureCase;
    switch (c.tag) {
    case C::C0: return part.p0.empty() && part.l0.empty();
    case C::C1: return part.l0.empty() && !part.p0.empty() && pairwise_noncollinear(s, part.p0);
    case C::C1p: return part.p0.empty() && !part.l0.empty() && pairwise_nonconcurrent(s, part.l0);
    case C::C2:
        return c.point && !part.l0.empty() && std::binary_search(part.p0.begin(), part.p0.end(), *c.point) &&
               is_c2_point(s, part, *c.point);
    case C::C2p:
        return c.line && !part.p0.empty() && std::binary_search(part.l0.begin(), part.l0.end(), *c.line) &&
               is_c2p_line(s, part, *c.line);
    case C::C3:
    case C::C3p: {
        auto sub = restrict_to(s, part.p0, part.l0);
        if (!sub) return false;
        // Direct count: (a+1)(b+1) points, each on two fixed lines.
        const auto shape = classify_thin(*sub);
        const auto want = c.tag == C::C3 ? GridShape::Kind::Grid : GridShape::Kind::DualGrid;
        if (shape.kind != want || std::min(shape.a, shape.b) != c.a || std::max(shape.a, shape.b) != c.b)
            return false;
        return c.tag == C::C3 ? part.p0.size() == (c.a + 1) * (c.b + 1) : part.l0.size() == (c.a + 1) * (c.b + 1);
    }
    case C::C4: {
        auto sub = restrict_to(s, part.p0, part.l0);
        if (!sub || !is_gq(*sub)) return false;
        const auto ord = validate_gq(*sub);
        return ord.s == c.a && ord.t == c.b && std::min(ord.s, ord.t) >= 2;
    }
    }
    return false;
}

} // namespace gq
