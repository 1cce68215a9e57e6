#include <doctest.h>

#include <random>

#include "gq/arithmetic.hpp"
#include "gq/error.hpp"
#include "oracles.hpp"

using namespace gq;

TEST_CASE("feasibility of known orders") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 9}, {3, 5}, {4, 4}, {4, 16}, {5, 25}}) {
        CAPTURE(s);
        CAPTURE(t);
        CHECK(feasible_parameters(s, t).feasible());
    }
    auto r = feasible_parameters(3, 5);
    CHECK(r.points == 64);
    CHECK(r.lines == 96);
    CHECK_FALSE(feasible_parameters(2, 5).feasible());   // Higman
    CHECK_FALSE(feasible_parameters(2, 3).feasible());   // 5 does not divide 6*3*4
    CHECK_THROWS_AS(feasible_parameters(0, 3), Error);
}

TEST_CASE("feasibility agrees with direct divisibility") {
    for (std::uint64_t s = 1; s <= 40; ++s)
        for (std::uint64_t t = 1; t <= 40; ++t) {
            bool naive = s <= t * t && t <= s * s && (s * t * (s + 1) * (t + 1)) % (s + t) == 0;
            REQUIRE(feasible_parameters(s, t).feasible() == naive);
        }
}

TEST_CASE("feasibility is symmetric under duality") {
    for (std::uint64_t s = 1; s <= 30; ++s)
        for (std::uint64_t t = 1; t <= 30; ++t) {
            auto a = feasible_parameters(s, t), b = feasible_parameters(t, s);
            REQUIRE(a.feasible() == b.feasible());
            REQUIRE(a.points == b.lines);
            REQUIRE(a.higman_s == b.higman_t);
        }
}

TEST_CASE("subquadrangle constraints") {
    CHECK(subgq_constraints(4, 16, 4, 4).holds());
    CHECK(subgq_constraints(3, 9, 3, 1).holds());
    CHECK_FALSE(subgq_constraints(4, 16, 2, 4).holds());
    CHECK_THROWS_AS(subgq_constraints(2, 2, 3, 1), Error);
}

TEST_CASE("hs_filter") {
    CHECK(hs_filter(3, 5).passes());
    for (std::uint64_t s = 2; s <= 100; ++s) CHECK_FALSE(hs_filter(s, s + 1).passes());
    CHECK_FALSE(hs_filter(2, 2).passes());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> d(2, 200);
    for (int i = 0; i < 500; ++i) {
        auto s = d(rng), t = d(rng);
        bool naive = (1 + s * t) % (s + t) == 0 && s + 2 <= t && t <= s * s - s && oracle::gcd(s, t) == 1;
        REQUIRE(hs_filter(s, t).passes() == naive);
    }
}

TEST_CASE("hs_final_sweep finds no thick solutions") {
    auto r = hs_final_sweep(1000);
    CHECK(r.clean());
    REQUIRE(r.solutions.size() == 2);
    CHECK(r.solutions[0].empty());
    CHECK(r.solutions[1].empty());
    CHECK(r.gap_witness);
    CHECK(r.thin_boundary);
    CHECK(r.pairs_checked == 999ull * 999ull);
}

TEST_CASE("ceil_cbrt") {
    CHECK(ceil_cbrt(0) == 0);
    CHECK(ceil_cbrt(1) == 1);
    CHECK(ceil_cbrt(8) == 2);
    CHECK(ceil_cbrt(9) == 3);
    for (std::uint64_t n = 1; n < 5000; ++n) {
        auto a = ceil_cbrt(n);
        REQUIRE(a * a * a >= n);
        REQUIRE((a - 1) * (a - 1) * (a - 1) < n);
    }
}

TEST_CASE("inequality sweep on a small range") {
    auto r = cor34_inequality_sweep(4, 64);
    CHECK(r.pairs > 0);
    std::uint64_t naive_pairs = 0;
    for (std::uint64_t s = 4; s <= 64; ++s)
        for (std::uint64_t t = 4; t <= 64; ++t) naive_pairs += s <= t * t && t <= s * s;
    CHECK(r.pairs == naive_pairs);
    for (const auto& i : r.inequalities) {
        CAPTURE(i.id);
        CHECK(i.checked > 0);
        if (i.id == "d") CHECK_FALSE(i.first_violation.empty());
    }
    CHECK_THROWS_AS(cor34_inequality_sweep(3, 10), Error);
}

TEST_CASE("subquadrangle case bound at (4,16,3)") {
    // |H| = (1+s)(1+st') and |G| = (1+s)(1+st)
    BigInt h = 5 * 13, g = 5 * 65;
    CHECK(h * h * h * h < g * g * g);
}
