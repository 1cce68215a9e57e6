#include <doctest.h>

#include <random>

#include "gq/group_aut.hpp"
#include "gq/perm.hpp"
#include "gq/perm_group.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

PermGroup cyclic(std::size_t n) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
    return PermGroup(n, {cyc(n, {c})});
}

PermGroup dihedral(std::size_t n) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
    std::vector<std::vector<Point>> refl;
    for (std::size_t i = 1; i < n - i; ++i) refl.push_back({static_cast<Point>(i), static_cast<Point>(n - i)});
    return PermGroup(n, {cyc(n, {c}), cyc(n, refl)});
}

PermGroup symmetric(std::size_t n) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
    return PermGroup(n, {cyc(n, {c}), cyc(n, {{0, 1}})});
}

} // namespace

TEST_CASE("products act on the right") {
    auto a = cyc(3, {{0, 1}});
    auto b = cyc(3, {{1, 2}});
    auto ab = a * b;
    // 0 -> 1 under a, then 1 -> 2 under b
    CHECK(ab[0] == 2);
    CHECK(ab.order() == 3);
    CHECK((a * a).is_identity());
    CHECK(ab.inverse() * ab == Permutation::identity(3));
    CHECK(ab.pow(-1) == ab.inverse());
    CHECK(ab.pow(3).is_identity());
}

TEST_CASE("composition agrees with the naive oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto x = oracle::random_permutation(12, rng);
        auto y = oracle::random_permutation(12, rng);
        auto px = Permutation::from_images(x);
        auto py = Permutation::from_images(y);
        CHECK((px * py).image_vector() == oracle::compose(x, y));
        CHECK(px.inverse().image_vector() == oracle::inverse(x));
        CHECK(px.conjugate_by(py) == py.inverse() * px * py);
    }
}

TEST_CASE("from_images rejects non-bijections") {
    std::vector<Point> bad{0, 0, 1};
    CHECK_THROWS_AS(Permutation::from_images(bad), Error);
}

TEST_CASE("group orders") {
    CHECK(cyclic(7).order() == 7);
    CHECK(dihedral(5).order() == 10);
    CHECK(symmetric(5).order() == 120);
    CHECK(PermGroup::trivial(4).order() == 1);
}

TEST_CASE("closure size matches a set-based BFS") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        std::vector<oracle::Images> gens{oracle::random_permutation(7, rng), oracle::random_permutation(7, rng)};
        std::vector<Permutation> pg;
        for (auto& g : gens) pg.push_back(Permutation::from_images(g));
        PermGroup g(7, pg);
        CHECK(g.order() == oracle::closure(gens).size());
    }
}

TEST_CASE("closure respects its cap") {
    CHECK_THROWS_AS(symmetric(7).order(100), CapExceeded);
}

TEST_CASE("orbits, stabilizers, transitivity") {
    auto d5 = dihedral(5);
    CHECK(orbit(d5, 0).size() == 5);
    CHECK(is_transitive(d5));
    CHECK(stabilizer(d5, 0).order() == 2);
    CHECK_FALSE(is_regular(d5));
    CHECK(is_regular(cyclic(5)));

    PermGroup two_orbits(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
    auto os = orbits(two_orbits);
    REQUIRE(os.size() == 2);
    CHECK(os[0] == std::vector<Point>{0, 1});
    CHECK(os[1] == std::vector<Point>{2, 3});
    std::vector<Point> half{0, 2};
    CHECK_THROWS_AS(orbits(two_orbits, half), Error);
}

TEST_CASE("primitivity") {
    // Alt(4) on 4 points is primitive, C4 and D10 behave as expected.
    PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
    CHECK(a4.order() == 12);
    CHECK(is_primitive(a4));
    CHECK_FALSE(is_primitive(cyclic(4)));
    CHECK(find_nontrivial_block(cyclic(4)).has_value());
    CHECK(is_primitive(dihedral(5)));
    CHECK_FALSE(is_primitive(dihedral(6)));
    PermGroup intransitive(4, {cyc(4, {{0, 1}})});
    CHECK_THROWS_AS(is_primitive(intransitive), Error);
}

TEST_CASE("centralizers against commuting counts") {
    auto s5 = symmetric(5);
    std::set<oracle::Images> all;
    for (const auto& e : s5.elements()) all.insert(e.image_vector());
    for (const auto& cls : conjugacy_classes(s5)) {
        auto c = centralizer(s5, cls.representative);
        CHECK(c.order() == oracle::centralizer_order(all, cls.representative.image_vector()));
        CHECK(c.order() * cls.size == 120);
    }
}

TEST_CASE("conjugacy classes of S5") {
    auto classes = conjugacy_classes(symmetric(5));
    CHECK(classes.size() == 7);
    std::uint64_t total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == 120);
}

TEST_CASE("normalizer and conjugating element") {
    auto s4 = symmetric(4);
    PermGroup v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
    CHECK(normalizer(s4, v4).order() == 24);
    PermGroup c2a(4, {cyc(4, {{0, 1}})});
    PermGroup c2b(4, {cyc(4, {{2, 3}})});
    auto a = conjugating_element(s4, c2a, c2b);
    REQUIRE(a.has_value());
    CHECK(cyc(4, {{0, 1}}).conjugate_by(*a) == cyc(4, {{2, 3}}));
    PermGroup dbl(4, {cyc(4, {{0, 1}, {2, 3}})});
    CHECK_FALSE(conjugating_element(s4, c2a, dbl).has_value());
}

TEST_CASE("Sylow subgroups") {
    auto s4 = symmetric(4);
    CHECK(sylow_subgroup(s4, 2).order() == 8);
    CHECK(sylow_subgroup(s4, 3).order() == 3);
    CHECK(sylow_subgroup(symmetric(5), 5).order() == 5);
    CHECK(sylow_subgroup(symmetric(6), 2).order() == 16);
}

TEST_CASE("subgroups of a given order") {
    auto s3 = symmetric(3);
    CHECK(subgroups_of_order(s3, 2).size() == 3);
    CHECK(subgroups_of_order(s3, 3).size() == 1);
    PermGroup v4(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
    CHECK(subgroups_of_order(v4, 2).size() == 3);
}

TEST_CASE("group automorphisms") {
    CHECK(group_automorphisms(cyclic(3)).size() == 2);
    PermGroup v4(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
    CHECK(group_automorphisms(v4).size() == 6);
    CHECK(group_automorphisms(cyclic(8)).size() == 4);
    CHECK(group_automorphisms(symmetric(4)).size() == 24);
    CHECK(group_automorphisms(dihedral(5)).size() == 20);
}

TEST_CASE("Aut(C3^3) has order |GL(3,3)|") {
    PermGroup c33(9, {cyc(9, {{0, 1, 2}}), cyc(9, {{3, 4, 5}}), cyc(9, {{6, 7, 8}})});
    GroupTable t(c33);
    CHECK(t.is_abelian());
    auto auts = group_automorphisms(t);
    CHECK(auts.size() == 11232);
    for (std::size_t i = 0; i < auts.size(); i += 997) CHECK(is_automorphism(t, auts[i].images));
}

TEST_CASE("group table basics") {
    GroupTable t(symmetric(3));
    CHECK(t.size() == 6);
    CHECK_FALSE(t.is_abelian());
    for (std::uint32_t a = 0; a < t.size(); ++a) {
        CHECK(t.mul(a, t.inv(a)) == t.identity());
        CHECK(t.element(a).order() == t.order_of(a));
    }
    std::vector<std::uint32_t> not_hom(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) not_hom[i] = i;
    std::swap(not_hom[1], not_hom[2]);
    // swapping two arbitrary elements is rarely a homomorphism; the check must agree with brute force
    bool brute = true;
    for (std::uint32_t a = 0; a < t.size(); ++a)
        for (std::uint32_t b = 0; b < t.size(); ++b)
            brute = brute && not_hom[t.mul(a, b)] == t.mul(not_hom[a], not_hom[b]);
    CHECK(is_automorphism(t, not_hom) == brute);
}
