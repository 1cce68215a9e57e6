#include <doctest.h>

#include <random>

#include "gq/constructions.hpp"
#include "gq/geo_aut.hpp"
#include "gq/incidence.hpp"
#include "gq/perm_group.hpp"
#include "gq/singer.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

std::vector<IncidenceStructure> corpus() {
    return {construct_w(2), construct_w(3), construct_elliptic_q5(2), construct_grid(3, 3),
            construct_dual_grid(2, 2), payne_derive(construct_w(2), 0)};
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    return Permutation::from_images(oracle::random_permutation(n, rng));
}

// Small random permutation group: a few random generators, some of them
// deliberately sparse so that intransitive and imprimitive groups show up.
PermGroup random_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(3, 7), count(1, 3), coin(0, 1);
    const std::size_t n = deg(rng);
    std::vector<Permutation> gens;
    for (int i = count(rng); i > 0; --i) {
        if (coin(rng)) {
            auto sub = oracle::random_subset(n, 2 + rng() % (n - 1), rng);
            std::vector<Point> cycle(sub.begin(), sub.end());
            gens.push_back(Permutation::from_cycles(n, {cycle}));
        } else {
            gens.push_back(random_perm(n, rng));
        }
    }
    return PermGroup(n, gens);
}

// Random mutation of a structure: drop a line, or move a point between lines.
// Retries until the result is a well-formed structure (no repeated lines).
IncidenceStructure mutate(const IncidenceStructure& s, std::mt19937_64& rng) {
    for (;;) {
        auto lines = s.lines();
        if (rng() % 2 && lines.size() > 1) {
            lines.erase(lines.begin() + rng() % lines.size());
        } else {
            auto& l = lines[rng() % lines.size()];
            Point fresh = static_cast<Point>(rng() % s.point_count());
            if (std::find(l.begin(), l.end(), fresh) == l.end()) l[rng() % l.size()] = fresh;
        }
        try {
            return IncidenceStructure(s.point_count(), lines);
        } catch (const Error&) {
        }
    }
}

bool subset_of(const PointSet& a, const PointSet& b) { return a.is_subset_of(b); }

} // namespace

TEST_CASE("property: GQ axioms agree with the naive checker") {
    std::mt19937_64 rng(20240601);
    for (const auto& s : corpus()) {
        CAPTURE(s.name());
        for (int i = 0; i < 4; ++i) {
            auto r = s.relabeled(random_perm(s.point_count(), rng));
            oracle::Order o;
            REQUIRE(oracle::is_gq(r.point_count(), r.lines(), &o));
            auto ord = validate_gq(r);
            CHECK(ord.s == o.s);
            CHECK(ord.t == o.t);
            CHECK(r.point_count() == (ord.s + 1) * (ord.s * ord.t + 1));
        }
        for (int i = 0; i < 6; ++i) {
            auto m = mutate(s, rng);
            CHECK(is_gq(m) == oracle::is_gq(m.point_count(), m.lines()));
        }
    }
}

TEST_CASE("property: orbit-stabilizer") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_group(rng);
        const auto order = g.order();
        for (Point x = 0; x < g.degree(); ++x) {
            auto orb = orbit(g, x);
            auto stab = stabilizer(g, x);
            REQUIRE(orb.size() * stab.order() == order);
            for (const auto& h : stab.generators()) REQUIRE(h[x] == x);
        }
    }
    auto w2 = automorphism_group(construct_w(2));
    for (Point x = 0; x < 15; x += 4) CHECK(orbit(w2, x).size() * stabilizer(w2, x).order() == 720);
}

TEST_CASE("property: class equation") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_group(rng);
        const auto order = g.order();
        std::uint64_t total = 0;
        for (const auto& c : conjugacy_classes(g)) {
            REQUIRE(order % c.size == 0);
            REQUIRE(centralizer(g, c.representative).order() * c.size == order);
            total += c.size;
        }
        REQUIRE(total == order);
    }
    std::uint64_t total = 0;
    auto w2 = automorphism_group(construct_w(2));
    for (const auto& c : conjugacy_classes(w2)) total += c.size;
    CHECK(total == 720);
}

TEST_CASE("property: perp is antitone and span is a closure") {
    std::mt19937_64 rng(7);
    for (const auto& s : corpus()) {
        CAPTURE(s.name());
        const auto n = s.point_count();
        for (int i = 0; i < 25; ++i) {
            auto small = oracle::random_subset(n, 1 + rng() % 3, rng);
            auto extra = oracle::random_subset(n, 1 + rng() % 3, rng);
            std::vector<Point> big = small;
            big.insert(big.end(), extra.begin(), extra.end());
            std::sort(big.begin(), big.end());
            big.erase(std::unique(big.begin(), big.end()), big.end());

            auto a = make_point_set(n, small);
            auto b = make_point_set(n, big);
            auto pa = perp(s, a), pb = perp(s, b);
            REQUIRE(subset_of(pb, pa));
            auto sa = span(s, a);
            REQUIRE(subset_of(a, sa));
            REQUIRE(span(s, sa) == sa);
            REQUIRE(perp(s, pa) == sa);
            REQUIRE(perp(s, sa) == pa);
            if (pb.any()) REQUIRE(subset_of(sa, span(s, b)));

            // the naive definition of perp
            for (Point p = 0; p < n; ++p) {
                bool all = true;
                for (auto x : small) all = all && oracle::collinear(s.lines(), p, x);
                REQUIRE(pa.test(p) == all);
            }
        }
    }
}

TEST_CASE("property: relabeling preserves the automorphism group order") {
    std::mt19937_64 rng(31337);
    for (const auto& s : {construct_w(2), construct_elliptic_q5(2), construct_grid(2, 3), construct_w(3)}) {
        CAPTURE(s.name());
        const auto base = search_automorphisms(s).order;
        for (int i = 0; i < 3; ++i) {
            auto r = s.relabeled(random_perm(s.point_count(), rng));
            CHECK(search_automorphisms(r).order == base);
            CHECK(search_automorphisms(r.dual()).order == base);
        }
    }
}

TEST_CASE("property: automorphism generators preserve lines") {
    for (const auto& s : corpus()) {
        CAPTURE(s.name());
        auto a = automorphism_group(s);
        for (const auto& g : a.generators()) CHECK(oracle::maps_lines_to_lines(s.lines(), g.image_vector()));
    }
}

TEST_CASE("property: enumerations are deterministic") {
    auto s = construct_elliptic_q5(2);
    auto a1 = search_automorphisms(s);
    auto a2 = search_automorphisms(s);
    CHECK(a1.group.generators() == a2.group.generators());
    CHECK(a1.base == a2.base);
    CHECK(a1.orbit_lengths == a2.orbit_lengths);

    auto c1 = conjugacy_classes(a1.group);
    auto c2 = conjugacy_classes(a2.group);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].representative == c2[i].representative);
        CHECK(c1[i].size == c2[i].size);
    }

    auto s1 = find_singer_groups(s, a1.group);
    auto s2 = find_singer_groups(s, a2.group);
    REQUIRE(s1.groups.size() == s2.groups.size());
    for (std::size_t i = 0; i < s1.groups.size(); ++i) CHECK(s1.groups[i].elements() == s2.groups[i].elements());
    CHECK(s1.nodes == s2.nodes);

    auto ctx = make_context(s, s1.groups.front(), 0);
    auto m1 = multipliers_group_side(ctx);
    auto m2 = multipliers_group_side(ctx);
    REQUIRE(m1.size() == m2.size());
    for (std::size_t i = 0; i < m1.size(); ++i) CHECK(m1[i].theta == m2[i].theta);

    CHECK(construct_w(3) == construct_w(3));
    CHECK(construct_elation_singer(4).generators() == construct_elation_singer(4).generators());
}
