#include <doctest.h>

#include "gq/constructions.hpp"
#include "gq/field.hpp"
#include "gq/geo_aut.hpp"
#include "gq/perm_group.hpp"
#include "oracles.hpp"

using namespace gq;

TEST_CASE("finite fields satisfy the axioms") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        FiniteField f(q);
        CHECK(f.verify_axioms());
        for (Fq a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(FiniteField(6), Error);
    CHECK_THROWS_AS(FiniteField(4).inv(0), Error);
}

TEST_CASE("projective space sizes") {
    FiniteField f(3);
    ProjectiveSpace pg(f, 4);
    CHECK(pg.size() == 40);
    for (std::uint32_t i = 0; i < pg.size(); ++i) CHECK(pg.index_of(pg.point(i)) == i);
    CHECK(pg.index_of(vec_scale(f, 2, pg.point(7))) == 7);
}

TEST_CASE("construction census") {
    struct Row {
        IncidenceStructure s;
        std::uint32_t s_, t_;
        std::size_t points, lines;
    };
    std::vector<Row> rows{{construct_w(2), 2, 2, 15, 15},
                          {construct_w(3), 3, 3, 40, 40},
                          {construct_w(4), 4, 4, 85, 85},
                          {construct_elliptic_q5(2), 2, 4, 27, 45},
                          {construct_elliptic_q5(3), 3, 9, 112, 280}};
    for (const auto& r : rows) {
        CAPTURE(r.s.name());
        CHECK(validate_gq(r.s) == GQOrder{r.s_, r.t_});
        CHECK(r.s.point_count() == r.points);
        CHECK(r.s.line_count() == r.lines);
        CHECK(r.points == (r.s_ + 1) * (r.s_ * r.t_ + 1));
        CHECK(r.lines == (r.t_ + 1) * (r.s_ * r.t_ + 1));
    }
}

TEST_CASE("W(2) passes the independent axiom oracle") {
    auto w2 = construct_w(2);
    oracle::Order o;
    CHECK(oracle::is_gq(15, w2.lines(), &o));
    CHECK(o.s == 2);
    CHECK(o.t == 2);
}

TEST_CASE("elliptic quadric has no plane") {
    CHECK_FALSE(elliptic_quadric_contains_plane(2));
}

TEST_CASE("regular points") {
    auto w4 = construct_w(4);
    for (Point p = 0; p < w4.point_count(); p += 7) CHECK(is_regular_point(w4, p));
    auto w2 = construct_w(2);
    for (Point p = 0; p < 15; ++p) CHECK(is_regular_point(w2, p));
    // All points of W(q) are regular, for odd q as well.
    auto w3 = construct_w(3);
    for (Point p = 0; p < 40; p += 9) CHECK(is_regular_point(w3, p));
    CHECK_THROWS_AS(is_regular_point(construct_elliptic_q5(2), 0), Error);
}

TEST_CASE("Payne derivation") {
    auto d4 = payne_derive(construct_w(4), 0);
    CHECK(validate_gq(d4) == GQOrder{3, 5});
    CHECK(d4.point_count() == 64);
    CHECK(d4.line_count() == 96);

    auto d2 = payne_derive(construct_w(2), 0);
    CHECK(d2.point_count() == 8);
    CHECK(validate_gq(d2) == GQOrder{1, 3});
    CHECK(classify_thin(d2).kind == GridShape::Kind::DualGrid);

    auto d3 = payne_derive(construct_w(3), 0);
    CHECK(validate_gq(d3) == GQOrder{2, 4});
    CHECK(d3.point_count() == 27);
}

TEST_CASE("elation Singer groups") {
    auto g4 = construct_elation_singer(4);
    CHECK(g4.order() == 64);
    CHECK(is_regular(g4));
    for (const auto& e : g4.elements()) {
        auto o = e.order();
        CHECK((o & (o - 1)) == 0);  // a 2-group, hence solvable
    }
    auto d4 = payne_derive(construct_w(4), 0);
    for (const auto& g : g4.generators()) CHECK(is_automorphism(d4, g));

    auto g2 = construct_elation_singer(2);
    CHECK(g2.order() == 8);
    CHECK(is_regular(g2));
}

TEST_CASE("elation routes agree") {
    auto a = elation_group_from_matrices(4);
    auto b = elation_group_from_stabilizer(4);
    CHECK(a.elements() == b.elements());
}

TEST_CASE("symplectic transvections fix the perp of their center") {
    auto w3 = construct_w(3);
    auto tv = symplectic_transvection(3, 5, 1);
    CHECK(is_automorphism(w3, tv));
    CHECK(tv.order() == 3);
    std::vector<Point> c{5};
    for (auto p : perp(w3, c)) CHECK(tv[p] == p);
    CHECK(tv.fixed_point_count() == 13);
}

TEST_CASE("grids") {
    CHECK(validate_gq(construct_grid(1, 1)) == GQOrder{1, 1});
    CHECK(validate_gq(construct_grid(2, 2)) == GQOrder{2, 1});
    CHECK(validate_gq(construct_dual_grid(3, 3)) == GQOrder{1, 3});
    CHECK(construct_grid(2, 4).point_count() == 15);
}

TEST_CASE("construct_by_name") {
    CHECK(construct_by_name("w2") == construct_w(2));
    CHECK(construct_by_name("grid:2,3") == construct_grid(2, 3));
    CHECK(construct_by_name("payne-w4").point_count() == 64);
    CHECK_THROWS_AS(construct_by_name("w5"), Error);
    CHECK_THROWS_AS(construct_by_name("nonsense"), Error);
}
