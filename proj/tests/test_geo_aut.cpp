#include <doctest.h>

#include "gq/constructions.hpp"
#include "gq/geo_aut.hpp"
#include "gq/perm_group.hpp"
#include "oracles.hpp"

using namespace gq;

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(construct_grid(1, 1)).order() == 8);
    CHECK(automorphism_group(construct_grid(2, 2)).order() == 72);
    CHECK(automorphism_group(construct_w(2)).order() == 720);
    auto search = search_automorphisms(construct_elliptic_q5(2));
    CHECK(search.order == 51840);
    CHECK(search.group.order() == 51840);
}

TEST_CASE("W(2) automorphisms agree with the naive line-set oracle") {
    auto w2 = construct_w(2);
    auto a = automorphism_group(w2);
    for (const auto& g : a.elements()) REQUIRE(oracle::maps_lines_to_lines(w2.lines(), g.image_vector()));
    CHECK(is_automorphism(w2, Permutation::identity(15)));
    CHECK_FALSE(is_automorphism(w2, Permutation::from_cycles(15, {{0, 1}})));
    CHECK_THROWS_AS(is_automorphism(w2, Permutation::identity(14)), Error);
}

TEST_CASE("pointwise stabilizer search") {
    auto w2 = construct_w(2);
    std::vector<Point> fixed{0};
    auto stab = search_automorphisms(w2, fixed);
    CHECK(stab.order == 48);
    for (const auto& g : stab.group.generators()) CHECK(g[0] == 0);
}

TEST_CASE("line action is faithful for a GQ") {
    auto w2 = construct_w(2);
    auto a = automorphism_group(w2);
    auto la = line_action(w2, a);
    CHECK(la.degree() == 15);
    CHECK(la.order() == 720);
}

TEST_CASE("fixed partitions") {
    auto w2 = construct_w(2);
    auto id = fixed_partition(w2, Permutation::identity(15));
    CHECK(id.p0.size() == 15);
    CHECK(id.p1.empty());
    CHECK(id.p2.empty());

    auto tv = symplectic_transvection(2, 0, 1);
    REQUIRE(is_automorphism(w2, tv));
    auto part = fixed_partition(w2, tv);
    CHECK(part.p0.size() == 7);
    auto cls = classify_fixed_substructure(w2, part);
    CHECK(cls.tag == SubstructureCase::C2);
    REQUIRE(cls.point.has_value());
    CHECK(*cls.point == 0);
    CHECK(part.l0.size() == 3);
    CHECK(recheck_substructure(w2, part, cls));

    // rotating both parallel classes of the 3x3 grid fixes nothing
    auto grid = construct_grid(2, 2);
    std::vector<Point> img(9);
    for (Point i = 0; i < 3; ++i)
        for (Point j = 0; j < 3; ++j) img[i * 3 + j] = ((i + 1) % 3) * 3 + (j + 1) % 3;
    auto rot = Permutation::from_images(img);
    auto rp = fixed_partition(grid, rot);
    CHECK(rp.p0.empty());
    CHECK(rp.l0.empty());
    CHECK(classify_fixed_substructure(grid, rp).tag == SubstructureCase::C0);
}

TEST_CASE("identity is case (4)") {
    auto w2 = construct_w(2);
    auto c = classify_fixed_substructure(w2, Permutation::identity(15));
    CHECK(c.tag == SubstructureCase::C4);
    CHECK(c.a == 2);
    CHECK(c.b == 2);
}

TEST_CASE("Benson on W(2) matches the naive recount") {
    auto w2 = construct_w(2);
    auto id = benson_check(w2, Permutation::identity(15));
    CHECK(id.point_side == 45);
    CHECK(id.residue == 1);
    CHECK(id.holds());

    auto a = automorphism_group(w2);
    std::size_t checked = 0;
    for (const auto& g : a.elements()) {
        auto r = benson_check(w2, GQOrder{2, 2}, g);
        auto n = oracle::benson_counts(15, w2.lines(), g.image_vector());
        REQUIRE(r.point_side == 3 * n.p0 + n.p1);
        REQUIRE(r.line_side == 3 * n.l0 + n.l1);
        REQUIRE(r.holds());
        ++checked;
    }
    CHECK(checked == 720);
    CHECK_THROWS_AS(benson_check(construct_grid(2, 2), Permutation::identity(9)), Error);
}

TEST_CASE("every automorphism of W(2) classifies and rechecks") {
    auto w2 = construct_w(2);
    auto a = automorphism_group(w2);
    for (const auto& g : a.elements()) {
        auto part = fixed_partition(w2, g);
        auto c = classify_fixed_substructure(w2, part);
        REQUIRE(recheck_substructure(w2, part, c));
    }
}
