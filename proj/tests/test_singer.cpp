#include <doctest.h>

#include <algorithm>

#include "gq/constructions.hpp"
#include "gq/geo_aut.hpp"
#include "gq/perm_group.hpp"
#include "gq/singer.hpp"

using namespace gq;

namespace {

struct Q52 {
    IncidenceStructure s = construct_elliptic_q5(2);
    PermGroup a = automorphism_group(s);
    SingerSearchResult singer = find_singer_groups(s, a);
};

const Q52& q52() {
    static const Q52 data;
    return data;
}

struct Payne4 {
    IncidenceStructure s = payne_derive(construct_w(4), 0);
    PermGroup a = automorphism_group(s);
    PermGroup g = construct_elation_singer(4);
};

const Payne4& payne4() {
    static const Payne4 data;
    return data;
}

GroupAutomorphism identity_aut(const SingerContext& ctx) {
    GroupAutomorphism id;
    id.images.resize(ctx.size());
    for (std::uint32_t i = 0; i < id.images.size(); ++i) id.images[i] = i;
    return id;
}

} // namespace

TEST_CASE("Sylow-3 subgroup of Aut(Q-(5,2))") {
    CHECK(q52().a.order() == 51840);
    CHECK(sylow_subgroup(q52().a, 3).order() == 81);
}

TEST_CASE("Singer groups of Q-(5,2)") {
    const auto& r = q52().singer;
    REQUIRE_FALSE(r.groups.empty());
    for (const auto& g : r.groups) {
        CHECK(g.order() == 27);
        CHECK(is_regular(g));
        for (const auto& x : g.generators()) CHECK(is_automorphism(q52().s, x));
    }
    // classes are pairwise non-conjugate
    for (std::size_t i = 0; i < r.groups.size(); ++i)
        for (std::size_t j = i + 1; j < r.groups.size(); ++j)
            CHECK_FALSE(conjugating_element(q52().a, r.groups[i], r.groups[j]).has_value());
}

TEST_CASE("Singer search on the 3x3 grid") {
    auto grid = construct_grid(2, 2);
    auto a = automorphism_group(grid);
    auto r = find_singer_groups(grid, a);
    REQUIRE_FALSE(r.groups.empty());
    for (const auto& g : r.groups) {
        CHECK(g.order() == 9);
        CHECK(is_regular(g));
    }
}

TEST_CASE("Delta sizes") {
    auto ctx = make_context(q52().s, q52().singer.groups.front(), 0);
    CHECK(ctx.delta.size() == 10);
    CHECK(std::find(ctx.delta.begin(), ctx.delta.end(), ctx.identity()) == ctx.delta.end());
    for (auto d : ctx.delta) CHECK(ctx.in_delta[ctx.inv(d)]);

    auto pctx = make_context(payne4().s, payne4().g, 0);
    CHECK(pctx.delta.size() == 18);
}

TEST_CASE("make_context rejects non-regular groups") {
    auto s = q52().s;
    CHECK_THROWS_AS(make_context(s, stabilizer(q52().a, 0), 0), Error);
}

TEST_CASE("changing the base point conjugates Delta") {
    const auto& g = q52().singer.groups.front();
    auto c0 = make_context(q52().s, g, 0);
    for (Point b : {Point{4}, Point{19}}) {
        auto cb = make_context(q52().s, g, b);
        // The element h moving 0 to b carries the collinearity pattern.
        std::uint32_t h = c0.elem_of[b];
        std::vector<std::uint32_t> conj;
        for (auto d : c0.delta) conj.push_back(c0.mul(c0.mul(c0.inv(h), d), h));
        std::sort(conj.begin(), conj.end());
        CHECK(conj == cb.delta);
        CHECK(multipliers_group_side(c0).size() == multipliers_group_side(cb).size());
    }
}

TEST_CASE("identity multiplier") {
    auto ctx = make_context(q52().s, q52().singer.groups.front(), 0);
    auto rec = make_record(ctx, identity_aut(ctx));
    CHECK(rec.h.size() == 27);
    CHECK(rec.x.size() == 1);
    CHECK(rec.c == 5);
    auto p31 = check_prop31(ctx, rec);
    CHECK(p31.passed());
    CHECK(p31.p1 == 0);
    CHECK_FALSE(check_prop32(ctx, rec).applicable);
    auto t33 = classify_theorem33(ctx, rec);
    CHECK(t33.tag == "e");
    REQUIRE(t33.geometry.has_value());
    CHECK(t33.geometry->a == 2);
    CHECK(t33.geometry->b == 4);
}

TEST_CASE("Delta filter rejects non-preserving automorphisms") {
    auto ctx = make_context(q52().s, q52().singer.groups.front(), 0);
    auto auts = group_automorphisms(*ctx.table);
    std::size_t rejected = 0;
    for (const auto& t : auts)
        if (!preserves_delta(ctx, t)) ++rejected;
    CHECK(rejected > 0);
    CHECK(auts.size() - rejected >= multipliers_group_side(ctx).size());
}

TEST_CASE("multipliers of Q-(5,2): both strategies and every proposition") {
    for (const auto& g : q52().singer.groups) {
        auto ctx = make_context(q52().s, g, 0);
        auto group_side = multipliers_group_side(ctx);
        auto geo_side = multipliers_geometry_side(ctx, q52().a);
        REQUIRE(group_side.size() == geo_side.size());
        for (std::size_t i = 0; i < group_side.size(); ++i) CHECK(group_side[i].theta == geo_side[i].theta);
        for (const auto& rec : group_side) {
            CHECK(is_automorphism(q52().s, rec.point_map));
            CHECK(rec.point_map[0] == 0);
            CHECK(check_prop31(ctx, rec).passed());
            auto p32 = check_prop32(ctx, rec);
            if (p32.applicable) CHECK(p32.passed());
            auto t33 = classify_theorem33(ctx, rec);
            CHECK(t33.verified.size() == 1);
            CHECK(check_cor34(ctx, rec).status == "HypothesisNotMet");
        }
    }
}

TEST_CASE("multipliers of the Payne elation group") {
    auto ctx = make_context(payne4().s, payne4().g, 0);
    auto mc = compute_multipliers(ctx, payne4().a);
    REQUIRE_FALSE(mc.records.empty());
    auto stab = stabilizer(payne4().a, 0);
    CHECK(stab.order() % mc.records.size() == 0);

    // closure under composition
    std::vector<GroupAutomorphism> thetas;
    for (const auto& r : mc.records) thetas.push_back(r.theta);
    std::sort(thetas.begin(), thetas.end());
    for (const auto& x : mc.records)
        for (const auto& y : mc.records) CHECK(std::binary_search(thetas.begin(), thetas.end(), x.theta.then(y.theta)));

    std::size_t order2 = 0;
    for (const auto& rec : mc.records) {
        CHECK(check_prop31(ctx, rec).passed());
        auto p32 = check_prop32(ctx, rec);
        if (rec.order == 2) {
            ++order2;
            CHECK(p32.passed());
        }
        CHECK(classify_theorem33(ctx, rec).verified.size() == 1);
        CHECK(check_cor34(ctx, rec).status == "HypothesisNotMet");
    }
    CHECK(order2 > 0);
}

TEST_CASE("exact three-quarters comparison") {
    // (1+s)(1+st') with (s,t,t') = (4,16,3): |H| = 65, |G| = 325
    CHECK(centralizer_below_three_quarters(65, 325));
    CHECK_FALSE(centralizer_below_three_quarters(325, 325));
    CHECK(centralizer_below_three_quarters(1, 2));
    CHECK_FALSE(centralizer_below_three_quarters(8, 16));  // 8^4 = 16^3
}
