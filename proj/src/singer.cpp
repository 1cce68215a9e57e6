#include "gq/singer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "gq/perm_group.hpp"

namespace gq {

namespace {

using ElementSet = std::vector<Permutation>;  // sorted

std::optional<std::uint64_t> prime_of_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1 ? std::optional{p} : std::nullopt;
        }
    return n;
}

class RegularSubgroupSearch {
public:
    RegularSubgroupSearch(std::size_t n, const PermGroup& ambient, std::uint64_t budget, std::size_t cap)
        : n_(n), budget_(budget) {
        for (const auto& g : ambient.elements(cap))
            if (g.fixed_point_count() == 0) candidates_.push_back(g);
    }

    std::set<ElementSet> run() {
        recurse({}, {Permutation::identity(n_)});
        return std::move(found_);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Permutation> candidates_;
    std::set<ElementSet> visited_, found_;

    void recurse(const std::vector<Permutation>& gens, const ElementSet& elems) {
        if (++nodes_ > budget_)
            throw Error("SearchBudgetExceeded", "regular subgroup search exceeded " + std::to_string(budget_) +
                                                    " nodes");
        if (elems.size() == n_) {
            found_.insert(elems);
            return;
        }
        std::vector<bool> reached(n_, false);
        for (const auto& e : elems) reached[e[0]] = true;
        const auto x = static_cast<Point>(std::find(reached.begin(), reached.end(), false) - reached.begin());
        for (const auto& c : candidates_) {
            if (c[0] != x) continue;
            auto next_gens = gens;
            next_gens.push_back(c);
            ElementSet next;
            try {
                next = closure(n_, next_gens, n_).release();
            } catch (const CapExceeded&) {
                continue;
            }
            if (n_ % next.size() != 0) continue;
            if (std::any_of(next.begin(), next.end(),
                            [](const Permutation& g) { return !g.is_identity() && g.fixed_point_count() > 0; }))
                continue;
            std::sort(next.begin(), next.end());
            if (!visited_.insert(next).second) continue;
            recurse(next_gens, next);
        }
    }
};

ElementSet conjugate_set(const ElementSet& s, const Permutation& x) {
    ElementSet out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(e.conjugate_by(x));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<std::vector<std::vector<Permutation>>> conjugate_subgroups(const PermGroup& a, const PermGroup& h,
                                                                         std::size_t cap) {
    ElementSet start = h.elements();
    std::set<ElementSet> seen{start};
    std::vector<ElementSet> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& x : a.generators()) {
            auto c = conjugate_set(queue[head], x);
            if (seen.insert(c).second) {
                if (seen.size() > cap) return std::nullopt;
                queue.push_back(std::move(c));
            }
        }
    return std::vector<ElementSet>(seen.begin(), seen.end());
}

SingerSearchResult find_singer_groups(const IncidenceStructure& s, const PermGroup& a,
                                      const SingerSearchOptions& opts) {
    const std::size_t n = s.point_count();
    if (a.degree() != n) throw Error("DomainMismatch", "group degree differs from point count");
    const auto p = prime_of_power(n);
    const PermGroup ambient = p ? sylow_subgroup(a, *p, opts.enumeration_cap) : a;
    RegularSubgroupSearch search(n, ambient, opts.node_budget, opts.enumeration_cap);
    const auto found = search.run();

    SingerSearchResult out;
    out.nodes = search.nodes();
    out.distinct_found = found.size();
    out.deduplicated = opts.dedupe_conjugates;
    std::set<ElementSet> covered;
    for (const auto& elems : found) {
        if (covered.count(elems)) continue;
        auto group = PermGroup::from_elements(n, elems);
        if (out.deduplicated) {
            if (auto orbit = conjugate_subgroups(a, group, opts.conjugacy_orbit_cap))
                covered.insert(orbit->begin(), orbit->end());
            else
                out.deduplicated = false;
        }
        out.groups.push_back(std::move(group));
    }
    if (!out.deduplicated) {
        out.groups.clear();
        for (const auto& elems : found) out.groups.push_back(PermGroup::from_elements(n, elems));
    }
    return out;
}

SingerContext make_context(const IncidenceStructure& s, const PermGroup& g, Point base) {
    if (g.degree() != s.point_count()) throw Error("DomainMismatch", "group degree differs from point count");
    if (base >= s.point_count()) throw Error("InvalidInput", "base point out of range");
    if (!is_regular(g)) throw Error("NotRegular", "group is not regular on the points");
    SingerContext ctx;
    ctx.structure = s;
    ctx.order = validate_gq(s);
    ctx.group = g;
    ctx.base = base;
    ctx.table = std::make_shared<const GroupTable>(g);
    const auto& elems = g.elements();
    const std::size_t n = elems.size();
    ctx.point_of.resize(n);
    ctx.elem_of.resize(n);
    ctx.in_delta.assign(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        ctx.point_of[i] = elems[i][base];
        ctx.elem_of[ctx.point_of[i]] = i;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (i != ctx.identity() && s.collinear(base, ctx.point_of[i])) {
            ctx.delta.push_back(i);
            ctx.in_delta[i] = true;
        }
    const std::uint64_t want = std::uint64_t{ctx.order.s} * (ctx.order.t + 1);
    if (ctx.delta.size() != want)
        throw Error("VerificationFailed", "|Delta| = " + std::to_string(ctx.delta.size()) + ", expected s(t+1) = " +
                                              std::to_string(want));
    for (auto d : ctx.delta)
        if (!ctx.in_delta[ctx.inv(d)]) throw Error("VerificationFailed", "Delta is not closed under inversion");
    return ctx;
}

bool preserves_delta(const SingerContext& ctx, const GroupAutomorphism& theta) {
    return std::all_of(ctx.delta.begin(), ctx.delta.end(), [&](auto d) { return ctx.in_delta[theta(d)]; });
}

namespace {

Permutation induced_point_map(const SingerContext& ctx, const GroupAutomorphism& theta) {
    std::vector<Point> images(ctx.size());
    for (std::uint32_t i = 0; i < ctx.size(); ++i) images[ctx.point_of[i]] = ctx.point_of[theta(i)];
    return Permutation::from_images(images);
}

void sort_records(std::vector<MultiplierRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return a.theta < b.theta; });
}

void require_closed(const std::vector<MultiplierRecord>& recs) {
    std::set<GroupAutomorphism> all;
    for (const auto& r : recs) all.insert(r.theta);
    for (const auto& a : recs) {
        if (!all.count(a.theta.inverse())) throw Error("VerificationFailed", "multipliers not closed under inverse");
        for (const auto& b : recs)
            if (!all.count(a.theta.then(b.theta)))
                throw Error("VerificationFailed", "multipliers not closed under composition");
    }
}

} // namespace

MultiplierRecord make_record(const SingerContext& ctx, const GroupAutomorphism& theta) {
    MultiplierRecord r;
    r.theta = theta;
    r.point_map = induced_point_map(ctx, theta);
    r.order = theta.order();
    std::set<std::uint32_t> xs;
    for (std::uint32_t g = 0; g < ctx.size(); ++g) {
        if (theta(g) == g) r.h.push_back(g);
        xs.insert(ctx.mul(theta(g), ctx.inv(g)));
    }
    r.x.assign(xs.begin(), xs.end());
    r.x_cap_delta = static_cast<std::size_t>(
        std::count_if(r.x.begin(), r.x.end(), [&](auto x) { return ctx.in_delta[x]; }));
    const auto limg = line_images(ctx.structure, r.point_map);
    for (auto l : ctx.structure.lines_through(ctx.base)) r.c += limg[l] == l;
    return r;
}

std::vector<MultiplierRecord> multipliers_group_side(const SingerContext& ctx, std::uint64_t cap) {
    std::vector<MultiplierRecord> out;
    for (const auto& theta : group_automorphisms(*ctx.table, cap)) {
        if (!preserves_delta(ctx, theta)) continue;
        if (!is_automorphism(ctx.structure, induced_point_map(ctx, theta))) continue;
        out.push_back(make_record(ctx, theta));
    }
    sort_records(out);
    require_closed(out);
    return out;
}

std::vector<MultiplierRecord> multipliers_geometry_side(const SingerContext& ctx, const PermGroup& a,
                                                        std::size_t cap) {
    if (a.degree() != ctx.structure.point_count())
        throw Error("DomainMismatch", "group degree differs from point count");
    const auto& gelems = ctx.group.elements();
    std::vector<MultiplierRecord> out;
    for (const auto& m : a.elements(cap)) {
        if (m[ctx.base] != ctx.base) continue;
        const auto minv = m.inverse();
        bool normalizes = true;
        for (const auto& g : ctx.group.generators())
            if (!ctx.group.contains(minv * g * m)) {
                normalizes = false;
                break;
            }
        if (!normalizes) continue;
        GroupAutomorphism theta{std::vector<std::uint32_t>(ctx.size())};
        for (std::uint32_t i = 0; i < ctx.size(); ++i) theta.images[i] = *ctx.group.index_of(minv * gelems[i] * m);
        auto rec = make_record(ctx, theta);
        if (rec.point_map != m) throw Error("VerificationFailed", "induced point map differs from the collineation");
        out.push_back(std::move(rec));
    }
    sort_records(out);
    require_closed(out);
    return out;
}

MultiplierComputation compute_multipliers(const SingerContext& ctx, const PermGroup& a, std::uint64_t cap) {
    try {
        return {multipliers_group_side(ctx, cap), "group-side", ""};
    } catch (const CapExceeded& e) {
        return {multipliers_geometry_side(ctx, a), "geometry-side", e.what()};
    }
}

Prop31Report check_prop31(const SingerContext& ctx, const MultiplierRecord& rec) {
    Prop31Report r;
    const auto& theta = rec.theta;
    const auto part = fixed_partition(ctx.structure, rec.point_map);
    std::vector<Point> h_points, p1_expected;
    std::set<std::uint32_t> xs;
    std::size_t h = 0;
    for (std::uint32_t g = 0; g < ctx.size(); ++g) {
        const auto x = ctx.mul(theta(g), ctx.inv(g));
        xs.insert(x);
        if (theta(g) == g) {
            ++h;
            h_points.push_back(ctx.point_of[g]);
        }
        if (ctx.in_delta[x]) p1_expected.push_back(ctx.point_of[g]);
    }
    std::sort(h_points.begin(), h_points.end());
    std::sort(p1_expected.begin(), p1_expected.end());
    r.h = h;
    r.p0 = part.p0.size();
    r.p1 = part.p1.size();
    r.x_cap_delta = static_cast<std::size_t>(std::count_if(xs.begin(), xs.end(), [&](auto x) { return ctx.in_delta[x]; }));

    r.fixed_points_match = part.p0 == h_points;
    r.p1_matches = part.p1 == p1_expected;
    r.product_formula = r.p1 == r.h * r.x_cap_delta;

    std::vector<bool> fixed_line(ctx.structure.line_count(), false);
    for (auto l : part.l0) fixed_line[l] = true;
    r.c_constant = true;
    std::optional<std::uint32_t> c;
    for (auto p : part.p0) {
        std::uint32_t count = 0;
        for (auto l : ctx.structure.lines_through(p)) count += fixed_line[l];
        if (!c) c = count;
        if (*c != count) r.c_constant = false;
    }
    r.c = c.value_or(0);

    if (!r.fixed_points_match)
        r.first_failure = "P0 = C_G(theta)";
    else if (!r.p1_matches)
        r.first_failure = "P1 = {g : g^theta g^-1 in Delta}";
    else if (!r.product_formula)
        r.first_failure = "|P1| = |C_G(theta)| |X cap Delta|";
    else if (!r.c_constant)
        r.first_failure = "constant number of fixed lines per fixed point";
    return r;
}

Prop32Report check_prop32(const SingerContext& ctx, const MultiplierRecord& rec) {
    Prop32Report r;
    if (rec.order != 2 && rec.order != 3) {
        r.first_failure = "NotApplicable";
        return r;
    }
    r.applicable = true;
    const auto& s = ctx.structure;
    const auto part = fixed_partition(s, rec.point_map);
    r.l0 = part.l0.size();
    r.l1 = part.l1.size();
    const auto& gelems = ctx.group.elements();
    r.semiregular = true;
    for (auto h : rec.h) {
        if (h == ctx.identity()) continue;
        const auto limg = line_images(s, gelems[h]);
        for (auto l : part.l1)
            if (limg[l] == l) r.semiregular = false;
    }
    const std::uint64_t H = rec.h.size();
    r.l1_formula = r.l1 == (std::uint64_t{ctx.order.t} + 1 - rec.c) * H;
    r.l0_formula = (std::uint64_t{ctx.order.s} + 1) * r.l0 == H * (rec.c + rec.x_cap_delta);
    if (!r.semiregular)
        r.first_failure = "C_G(theta) semiregular on L1";
    else if (!r.l1_formula)
        r.first_failure = "|L1| = (t+1-c)|H|";
    else if (!r.l0_formula)
        r.first_failure = "|L0| = |H|(c+|X cap Delta|)/(1+s)";
    return r;
}

namespace {

using Indices = std::vector<std::uint32_t>;

Indices sorted_unique(Indices v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Indices left_mul(const SingerContext& ctx, std::uint32_t g, const Indices& xs) {
    Indices out;
    for (auto x : xs) out.push_back(ctx.mul(g, x));
    return sorted_unique(out);
}

Indices right_mul(const SingerContext& ctx, const Indices& xs, std::uint32_t g) {
    Indices out;
    for (auto x : xs) out.push_back(ctx.mul(x, g));
    return sorted_unique(out);
}

Indices set_union(const Indices& a, const Indices& b) {
    Indices out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sorted_unique(out);
}

// Elements of H whose point lies on line l.
Indices on_line(const SingerContext& ctx, const Indices& h, LineIndex l) {
    Indices out;
    for (auto x : h)
        if (ctx.structure.incident(ctx.point_of[x], l)) out.push_back(x);
    return out;
}

std::vector<LineIndex> fixed_lines_through_base(const SingerContext& ctx, const FixedPartition& part) {
    std::vector<LineIndex> out;
    for (auto l : part.l0)
        if (ctx.structure.incident(ctx.base, l)) out.push_back(l);
    return out;
}

bool case_a(const SingerContext& ctx, const Indices& h, std::string& ev) {
    std::vector<Point> pts;
    for (auto x : h) pts.push_back(ctx.point_of[x]);
    const auto rep = is_partial_ovoid(ctx.structure, ctx.order, pts);
    if (!rep.pairwise_noncollinear || !rep.within_bound) return false;
    ev = "partial ovoid of size " + std::to_string(rep.size) + " <= 1+st = " + std::to_string(rep.bound);
    return true;
}

bool case_b(const SingerContext& ctx, const Indices& h, std::string& ev) {
    if (h.size() < 2) return false;
    const auto l = ctx.structure.line_through(ctx.point_of[h[0]], ctx.point_of[h[1]]);
    if (!l || on_line(ctx, h, *l).size() != h.size()) return false;
    if ((std::uint64_t{ctx.order.s} + 1) % h.size() != 0) return false;
    ev = "H on line " + std::to_string(*l) + ", |H| = " + std::to_string(h.size()) + " divides 1+s";
    return true;
}

bool case_c(const SingerContext& ctx, const Indices& h, const SubstructureClass& geo, const FixedPartition& part,
            std::string& ev) {
    if (geo.tag != SubstructureCase::C3) return false;
    const auto lines = fixed_lines_through_base(ctx, part);
    if (lines.size() != 2) return false;
    const auto y1 = on_line(ctx, h, lines[0]);
    const auto y2 = on_line(ctx, h, lines[1]);
    const auto& t = *ctx.table;
    if (!t.is_subgroup(y1) || !t.is_subgroup(y2)) return false;
    Indices prod;
    for (auto a : y1)
        for (auto b : y2) prod.push_back(ctx.mul(a, b));
    if (sorted_unique(prod) != h || y1.size() * y2.size() != h.size()) return false;
    const auto lo = std::min(y1.size(), y2.size()), hi = std::max(y1.size(), y2.size());
    if (lo != geo.a + 1 || hi != geo.b + 1) return false;
    const std::uint64_t s1 = ctx.order.s + 1;
    if (s1 % y1.size() != 0 || s1 % y2.size() != 0) return false;
    ev = "H = Y1Y2 with |Y1| = " + std::to_string(y1.size()) + ", |Y2| = " + std::to_string(y2.size());
    return true;
}

bool case_c_prime(const SingerContext& ctx, const Indices& h, const SubstructureClass& geo,
                  const FixedPartition& part, std::string& ev) {
    if (geo.tag != SubstructureCase::C3 || geo.a != geo.b || geo.a % 2 == 0) return false;
    if (geo.a > std::min(ctx.order.s, ctx.order.t)) return false;
    const auto lines = fixed_lines_through_base(ctx, part);
    if (lines.size() != 2) return false;
    const auto& gelems = ctx.group.elements();
    for (int flip = 0; flip < 2; ++flip) {
        const auto l1 = lines[flip], l2 = lines[1 - flip];
        const auto y1 = on_line(ctx, h, l1);
        const auto y2 = on_line(ctx, h, l2);
        Indices x1;
        for (auto x : h)
            if (line_images(ctx.structure, gelems[x])[l1] == l1) x1.push_back(x);
        if (x1.size() * 2 != geo.a + 1 || !ctx.table->is_subgroup(x1)) continue;
        for (auto g1 : y1) {
            if (std::binary_search(x1.begin(), x1.end(), g1)) continue;
            if (set_union(x1, left_mul(ctx, g1, x1)) != y1) continue;
            const auto g1inv = ctx.inv(g1);
            if (set_union(right_mul(ctx, left_mul(ctx, g1, x1), g1inv), right_mul(ctx, x1, g1inv)) != y2) continue;
            auto gens = x1;
            gens.push_back(g1);
            if (ctx.table->generated(gens) != h) continue;
            ev = "X1 of order " + std::to_string(x1.size()) + ", g1 = element " + std::to_string(g1);
            return true;
        }
    }
    return false;
}

bool case_d(const SingerContext& ctx, const Indices& h, const SubstructureClass& geo, std::string& ev) {
    if (geo.tag != SubstructureCase::C3p || geo.a != geo.b) return false;
    if (geo.a < 2 || geo.a > std::min(ctx.order.s, ctx.order.t)) return false;
    Indices side;
    for (auto x : h)
        if (x == ctx.identity() || !ctx.structure.collinear(ctx.base, ctx.point_of[x])) side.push_back(x);
    if (side.size() * 2 != h.size() || !ctx.table->is_subgroup(side)) return false;
    for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i + 1; j < side.size(); ++j)
            if (ctx.structure.collinear(ctx.point_of[side[i]], ctx.point_of[side[j]])) return false;
    ev = "index-2 subgroup of " + std::to_string(side.size()) + " pairwise noncollinear points";
    return true;
}

bool case_e(const SubstructureClass& geo, std::string& ev) {
    if (geo.tag != SubstructureCase::C4) return false;
    ev = "subquadrangle of order (" + std::to_string(geo.a) + "," + std::to_string(geo.b) + ")";
    return true;
}

} // namespace

Theorem33Result classify_theorem33(const SingerContext& ctx, const MultiplierRecord& rec) {
    Theorem33Result out;
    Indices h;
    for (std::uint32_t g = 0; g < ctx.size(); ++g)
        if (rec.theta(g) == g) h.push_back(g);
    if (h.size() == 1) {
        out.tag = "Trivial";
        out.verified = {"Trivial"};
        out.evidence = "H = 1";
        return out;
    }
    const auto part = fixed_partition(ctx.structure, rec.point_map);
    const auto geo = classify_fixed_substructure(ctx.structure, part);
    out.geometry = geo;
    std::string ev;
    auto consider = [&](const char* tag, bool ok) {
        if (!ok) return;
        out.verified.push_back(tag);
        if (!out.evidence.empty()) out.evidence += "; ";
        out.evidence += ev;
    };
    consider("a", case_a(ctx, h, ev));
    consider("b", case_b(ctx, h, ev));
    consider("c", case_c(ctx, h, geo, part, ev));
    consider("c'", case_c_prime(ctx, h, geo, part, ev));
    consider("d", case_d(ctx, h, geo, ev));
    consider("e", case_e(geo, ev));
    if (out.verified.size() != 1) {
        std::string list;
        for (const auto& v : out.verified) list += " " + v;
        throw Error("NoCaseVerifies", "|H| = " + std::to_string(h.size()) + ", fixed substructure " +
                                          describe(geo) + ", verified cases:" + (list.empty() ? " none" : list));
    }
    out.tag = out.verified.front();
    return out;
}

bool centralizer_below_three_quarters(std::uint64_t h, std::uint64_t g) {
    using boost::multiprecision::cpp_int;
    return boost::multiprecision::pow(cpp_int(h), 4) < boost::multiprecision::pow(cpp_int(g), 3);
}

Cor34Report check_cor34(const SingerContext& ctx, const MultiplierRecord& rec) {
    Cor34Report r;
    r.h = rec.h.size();
    r.g = ctx.size();
    r.hypothesis_met = std::min(ctx.order.s, ctx.order.t) >= 4;
    if (!r.hypothesis_met) {
        r.status = "HypothesisNotMet";
        return r;
    }
    r.holds = centralizer_below_three_quarters(r.h, r.g);
    r.status = r.holds ? "Holds" : "Violated";
    return r;
}

} // namespace gq
