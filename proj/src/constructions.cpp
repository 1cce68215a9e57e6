#include "gq/constructions.hpp"

#include <algorithm>
#include <set>

#include "gq/geo_aut.hpp"
#include "gq/perm_group.hpp"

namespace gq {

namespace {

void require_q(std::uint32_t q, std::initializer_list<std::uint32_t> allowed) {
    if (std::find(allowed.begin(), allowed.end(), q) == allowed.end())
        throw Error("UnsupportedField", "q=" + std::to_string(q) + " is not supported here");
}

// All points of the projective line through points a and b.
std::vector<Point> projective_line(const ProjectiveSpace& ps, Point a, Point b) {
    const auto& f = ps.field();
    std::vector<Point> out{a};
    for (Fq lambda = 0; lambda < f.order(); ++lambda)
        out.push_back(ps.index_of(vec_add(f, ps.point(b), vec_scale(f, lambda, ps.point(a)))));
    std::sort(out.begin(), out.end());
    return out;
}

// Lines through pairs of points accepted by `joinable`, each listed once.
template <typename Pred>
std::vector<std::vector<Point>> lines_from_pairs(const ProjectiveSpace& ps, const std::vector<Point>& pts,
                                                 Pred joinable) {
    std::set<std::vector<Point>> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (joinable(pts[i], pts[j])) lines.insert(projective_line(ps, pts[i], pts[j]));
    return {lines.begin(), lines.end()};
}

Fq quadric_value(const FiniteField& f, const Vec& x) {
    Fq v = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
    Fq tail = f.add(f.mul(x[4], x[4]), f.mul(x[5], x[5]));
    if (f.order() == 2) tail = f.add(tail, f.mul(x[4], x[5]));
    return f.add(v, tail);
}

Fq quadric_polar(const FiniteField& f, const Vec& x, const Vec& y) {
    return f.sub(f.sub(quadric_value(f, vec_add(f, x, y)), quadric_value(f, x)), quadric_value(f, y));
}

std::vector<Point> singular_points(const ProjectiveSpace& ps) {
    std::vector<Point> out;
    for (Point i = 0; i < ps.size(); ++i)
        if (quadric_value(ps.field(), ps.point(i)) == 0) out.push_back(i);
    return out;
}

// Global point -> derived index, or -1.
std::vector<std::int64_t> inverse_map(std::size_t n, const std::vector<Point>& kept) {
    std::vector<std::int64_t> idx(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) idx[kept[i]] = static_cast<std::int64_t>(i);
    return idx;
}

Permutation restrict_perm(const Permutation& g, const std::vector<Point>& kept,
                          const std::vector<std::int64_t>& idx) {
    std::vector<Point> images(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const auto j = idx[g[kept[i]]];
        if (j < 0) throw Error("ConstructionFailed", "map does not preserve the derived point set");
        images[i] = static_cast<Point>(j);
    }
    return Permutation::from_images(images);
}

// Checks order q^3, closure, regularity and the automorphism property.
PermGroup verified_elation_group(const DerivedQuadrangle& d, const std::vector<Permutation>& elements,
                                 std::uint32_t q) {
    const std::size_t n = d.structure.point_count();
    const std::uint64_t want = std::uint64_t{q} * q * q;
    std::set<Permutation> distinct(elements.begin(), elements.end());
    if (distinct.size() != want)
        throw Error("ConstructionFailed", std::to_string(distinct.size()) + " distinct elations, expected " +
                                              std::to_string(want));
    std::vector<Permutation> elems(distinct.begin(), distinct.end());
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (!distinct.count(a * b)) throw Error("ConstructionFailed", "elations are not closed");
    for (const auto& g : elems)
        if (!is_automorphism(d.structure, g)) throw Error("ConstructionFailed", "elation is not an automorphism");
    auto group = PermGroup::from_elements(n, std::move(elems));
    if (!is_regular(group)) throw Error("ConstructionFailed", "elation group is not regular");
    return group;
}

} // namespace

Fq symplectic_form(const FiniteField& f, const Vec& x, const Vec& y) {
    const Fq a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    const Fq b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
    return f.add(a, b);
}

IncidenceStructure construct_w(std::uint32_t q) {
    require_q(q, {2, 3, 4});
    const FiniteField f(q);
    const ProjectiveSpace ps(f, 4);
    std::vector<Point> all(ps.size());
    for (Point i = 0; i < all.size(); ++i) all[i] = i;
    auto lines = lines_from_pairs(ps, all, [&](Point a, Point b) {
        return symplectic_form(f, ps.point(a), ps.point(b)) == 0;
    });
    return IncidenceStructure(ps.size(), std::move(lines), "W(" + std::to_string(q) + ")");
}

IncidenceStructure construct_elliptic_q5(std::uint32_t q) {
    require_q(q, {2, 3});
    const FiniteField f(q);
    const ProjectiveSpace ps(f, 6);
    const auto sing = singular_points(ps);
    auto lines = lines_from_pairs(ps, sing, [&](Point a, Point b) {
        return quadric_polar(f, ps.point(a), ps.point(b)) == 0;
    });
    // Renumber the singular points 0..|Q|-1 in ascending order.
    const auto idx = inverse_map(ps.size(), sing);
    for (auto& l : lines)
        for (auto& p : l) p = static_cast<Point>(idx[p]);
    return IncidenceStructure(sing.size(), std::move(lines), "Q-(5," + std::to_string(q) + ")");
}

bool elliptic_quadric_contains_plane(std::uint32_t q) {
    require_q(q, {2, 3});
    const FiniteField f(q);
    const ProjectiveSpace ps(f, 6);
    const auto sing = singular_points(ps);
    for (std::size_t i = 0; i < sing.size(); ++i)
        for (std::size_t j = i + 1; j < sing.size(); ++j) {
            const auto& a = ps.point(sing[i]);
            const auto& b = ps.point(sing[j]);
            if (quadric_polar(f, a, b) != 0) continue;
            const auto line = projective_line(ps, sing[i], sing[j]);
            for (std::size_t k = j + 1; k < sing.size(); ++k) {
                if (std::binary_search(line.begin(), line.end(), sing[k])) continue;
                const auto& c = ps.point(sing[k]);
                if (quadric_polar(f, a, c) == 0 && quadric_polar(f, b, c) == 0) return true;
            }
        }
    return false;
}

IncidenceStructure construct_grid(std::uint32_t s1, std::uint32_t s2) {
    if (s1 < 1 || s2 < 1) throw Error("InvalidInput", "grid parameters must be at least 1");
    std::vector<std::vector<Point>> lines;
    for (std::uint32_t k = 0; k <= s1; ++k) {
        std::vector<Point> l;
        for (std::uint32_t j = 0; j <= s2; ++j) l.push_back(k * (s2 + 1) + j);
        lines.push_back(std::move(l));
    }
    for (std::uint32_t k = 0; k <= s2; ++k) {
        std::vector<Point> l;
        for (std::uint32_t i = 0; i <= s1; ++i) l.push_back(i * (s2 + 1) + k);
        lines.push_back(std::move(l));
    }
    return IncidenceStructure((s1 + 1) * (s2 + 1), std::move(lines),
                              "grid(" + std::to_string(s1) + "," + std::to_string(s2) + ")");
}

IncidenceStructure construct_dual_grid(std::uint32_t t1, std::uint32_t t2) {
    if (t1 < 1 || t2 < 1) throw Error("InvalidInput", "dual grid parameters must be at least 1");
    return construct_grid(t2, t1).dual().with_name("dualgrid(" + std::to_string(t1) + "," + std::to_string(t2) + ")");
}

bool is_regular_point(const IncidenceStructure& s, Point p) {
    const auto ord = validate_gq(s);
    if (ord.s != ord.t)
        throw Error("NotSquareOrder", "order (" + std::to_string(ord.s) + "," + std::to_string(ord.t) + ")");
    for (Point x = 0; x < s.point_count(); ++x) {
        if (s.collinear(p, x)) continue;
        const Point pair[] = {std::min(p, x), std::max(p, x)};
        if (perp(s, pair, true).size() != ord.t + 1) return false;
    }
    return true;
}

DerivedQuadrangle payne_derive_map(const IncidenceStructure& s, Point p) {
    if (!is_regular_point(s, p)) throw Error("NotRegularPoint", "point " + std::to_string(p));
    const auto ord = validate_gq(s);
    DerivedQuadrangle d;
    d.base = p;
    for (Point x = 0; x < s.point_count(); ++x)
        if (!s.collinear(p, x)) d.original.push_back(x);
    const auto idx = inverse_map(s.point_count(), d.original);

    std::set<std::vector<Point>> lines;
    for (LineIndex l = 0; l < s.line_count(); ++l) {
        if (s.incident(p, l)) continue;
        std::vector<Point> kept;
        for (auto x : s.line(l))
            if (idx[x] >= 0) kept.push_back(static_cast<Point>(idx[x]));
        lines.insert(std::move(kept));
    }
    for (auto x : d.original) {
        const Point pair[] = {std::min(p, x), std::max(p, x)};
        std::vector<Point> kept;
        for (auto y : perp(s, pair, true))
            if (y != p) kept.push_back(static_cast<Point>(idx[y]));
        lines.insert(std::move(kept));
    }
    const auto name = s.name().empty() ? std::string("derived") : "payne(" + s.name() + ")";
    d.structure = IncidenceStructure(d.original.size(), {lines.begin(), lines.end()}, name);
    try {
        const auto got = validate_gq(d.structure);
        if (got.s + 1 != ord.s || got.t != ord.t + 1) throw Error("CountMismatch", "unexpected order");
    } catch (const Error& e) {
        throw Error("ValidationFailed", std::string("derived structure: ") + e.what());
    }
    return d;
}

IncidenceStructure payne_derive(const IncidenceStructure& s, Point p) { return payne_derive_map(s, p).structure; }

Permutation symplectic_transvection(std::uint32_t q, Point center, Fq lambda) {
    require_q(q, {2, 3, 4});
    const FiniteField f(q);
    const ProjectiveSpace ps(f, 4);
    const auto& c = ps.point(center);
    std::vector<Point> images(ps.size());
    for (Point i = 0; i < ps.size(); ++i) {
        const auto& x = ps.point(i);
        images[i] = ps.index_of(vec_add(f, x, vec_scale(f, f.mul(lambda, symplectic_form(f, x, c)), c)));
    }
    return Permutation::from_images(images);
}

PermGroup elation_group_from_matrices(std::uint32_t q) {
    const auto w = construct_w(q);
    const auto d = payne_derive_map(w, 0);
    const FiniteField f(q);
    const ProjectiveSpace ps(f, 4);
    const Vec p = ps.point(0);

    // u with B(u,p) = 1, then W' = <p,u>^perp.
    Vec u;
    for (std::size_t i = 0; i < 4 && u.empty(); ++i) {
        Vec e(4, 0);
        e[i] = 1;
        const Fq b = symplectic_form(f, e, p);
        if (b != 0) u = vec_scale(f, f.inv(b), e);
    }
    std::vector<Vec> wprime;
    Vec v(4, 0);
    for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
        std::uint32_t x = code;
        for (auto& a : v) {
            a = x % q;
            x /= q;
        }
        if (symplectic_form(f, v, p) == 0 && symplectic_form(f, v, u) == 0) wprime.push_back(v);
    }

    // T(x) = x + B(x,p) w + (gamma B(x,p) + B(x,w)) p
    const auto idx = inverse_map(ps.size(), d.original);
    std::vector<Permutation> elems;
    for (const auto& wv : wprime)
        for (Fq gamma = 0; gamma < q; ++gamma) {
            std::vector<Point> images(ps.size());
            for (Point i = 0; i < ps.size(); ++i) {
                const auto& x = ps.point(i);
                const Fq bxp = symplectic_form(f, x, p);
                const Fq coeff = f.add(f.mul(gamma, bxp), symplectic_form(f, x, wv));
                images[i] = ps.index_of(vec_add(f, vec_add(f, x, vec_scale(f, bxp, wv)), vec_scale(f, coeff, p)));
            }
            const auto g = Permutation::from_images(images);
            if (!is_automorphism(w, g)) throw Error("ConstructionFailed", "map is not a collineation of W(q)");
            elems.push_back(restrict_perm(g, d.original, idx));
        }
    return verified_elation_group(d, elems, q);
}

PermGroup elation_group_from_stabilizer(std::uint32_t q) {
    const auto w = construct_w(q);
    const auto d = payne_derive_map(w, 0);
    const Point fixed[] = {0};
    const auto stab = search_automorphisms(w, fixed).group;
    const auto idx = inverse_map(w.point_count(), d.original);
    const auto& pencil = w.lines_through(0);
    std::vector<Permutation> elems;
    for (const auto& g : stab.elements()) {
        const auto limg = line_images(w, g);
        if (!std::all_of(pencil.begin(), pencil.end(), [&](LineIndex l) { return limg[l] == l; })) continue;
        if (!g.is_identity() &&
            std::any_of(d.original.begin(), d.original.end(), [&](Point x) { return g[x] == x; }))
            continue;
        elems.push_back(restrict_perm(g, d.original, idx));
    }
    return verified_elation_group(d, elems, q);
}

PermGroup construct_elation_singer(std::uint32_t q) {
    require_q(q, {2, 3, 4});
    try {
        return elation_group_from_matrices(q);
    } catch (const Error& e) {
        if (e.kind() != "ConstructionFailed") throw;
        return elation_group_from_stabilizer(q);
    }
}

IncidenceStructure construct_by_name(const std::string& name) {
    if (name == "w2") return construct_w(2);
    if (name == "w3") return construct_w(3);
    if (name == "w4") return construct_w(4);
    if (name == "q5m2") return construct_elliptic_q5(2);
    if (name == "q5m3") return construct_elliptic_q5(3);
    if (name == "payne-w3") return payne_derive(construct_w(3), 0).with_name("payne(W(3))");
    if (name == "payne-w4") return payne_derive(construct_w(4), 0).with_name("payne(W(4))");
    for (const std::string prefix : {"grid:", "dualgrid:"}) {
        if (name.rfind(prefix, 0) != 0) continue;
        const auto rest = name.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string::npos) break;
        std::uint32_t a = 0, b = 0;
        try {
            std::size_t used_a = 0, used_b = 0;
            a = static_cast<std::uint32_t>(std::stoul(rest.substr(0, comma), &used_a));
            b = static_cast<std::uint32_t>(std::stoul(rest.substr(comma + 1), &used_b));
            if (used_a != comma || used_b != rest.size() - comma - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error("InvalidInput", "bad parameters in '" + name + "'");
        }
        return prefix == "grid:" ? construct_grid(a, b) : construct_dual_grid(a, b);
    }
    throw Error("InvalidInput", "unknown structure name '" + name + "'");
}

} // namespace gq
