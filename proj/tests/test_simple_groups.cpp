#include <doctest.h>

#include <set>

#include "gq/perm_group.hpp"
#include "gq/simple_groups.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

std::set<oracle::Images> element_set(const PermGroup& g) {
    std::set<oracle::Images> all;
    for (const auto& e : g.elements()) all.insert(e.image_vector());
    return all;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

TEST_CASE("family names round trip") {
    for (auto f : {Family::Alt, Family::PSL, Family::PSU, Family::PSp, Family::OmegaOdd, Family::POmega, Family::Sz,
                   Family::G2, Family::TwoF4, Family::E8, Family::M11})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("Monster"), Error);
}

TEST_CASE("orders of simple groups") {
    CHECK(order_of_simple(SimpleGroupSpec::alt(5)) == 60);
    CHECK(order_of_simple(SimpleGroupSpec::alt(9)) == factorial(9) / 2);
    CHECK(order_of_simple(SimpleGroupSpec::psl(2, 7)) == 168);
    CHECK(order_of_simple(SimpleGroupSpec::psl(3, 4)) == 20160);
    CHECK(order_of_simple(SimpleGroupSpec::psl(4, 2)) == 20160);
    CHECK(order_of_simple({Family::PSp, 2, 3, 0}) == 25920);
    CHECK(order_of_simple({Family::PSU, 3, 3, 0}) == 6048);
    CHECK(order_of_simple({Family::Sz, 0, 8, 0}) == 29120);
    CHECK(order_of_simple({Family::G2, 0, 3, 0}) == 4245696);
    CHECK(order_of_simple(SimpleGroupSpec::m11()) == 7920);
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(SimpleGroupSpec::alt(4).validate(), Error);
    CHECK_THROWS_AS(SimpleGroupSpec::psl(2, 2).validate(), Error);
    CHECK_THROWS_AS(SimpleGroupSpec::psl(3, 6).validate(), Error);
    CHECK(SimpleGroupSpec::psl(3, 2).valid());
    CHECK_FALSE(prime_power(12).has_value());
    REQUIRE(prime_power(81).has_value());
    CHECK(prime_power(81)->p == 3);
    CHECK(prime_power(81)->f == 4);
}

TEST_CASE("exact exponent comparisons") {
    CHECK(exceeds(5, 16, Exponent::half()) == true);
    CHECK_FALSE(exceeds(4, 16, Exponent::half()));
    CHECK(reaches(4, 16, Exponent::half()));
    CHECK(Exponent::one_minus_quarter(1).num == 3);
    CHECK(Exponent::one_minus_quarter(1).den == 4);
    CHECK(Exponent::three_quarters().str() == "3/4");
}

TEST_CASE("brute-force maxima in small groups") {
    auto a5 = alternating_group(5);
    CHECK(a5.order() == 60);
    auto m = brute_max_centralizer(a5);
    CHECK(m.max == 5);
    CHECK(m.classes == 5);
    // centralizer of a 3-cycle in Alt(5)
    CHECK(centralizer_order(a5, Permutation::from_cycles(5, {{0, 1, 2}})) == 3);

    auto all = element_set(a5);
    std::uint64_t naive = 0;
    for (const auto& x : all) {
        auto c = oracle::centralizer_order(all, x);
        if (c != all.size()) naive = std::max<std::uint64_t>(naive, c);
    }
    CHECK(naive == m.max);
}

TEST_CASE("representations have the right order") {
    CHECK(psl_group(3, 2).order() == 168);
    CHECK(psl_group(2, 5).order() == 60);
    CHECK(psl_group(3, 3).order() == 5616);
    CHECK(psp43_group().order() == 25920);
    auto m11 = m11_group();
    CHECK(m11.order() == 7920);
    CHECK(is_k_transitive(m11, 4));
    CHECK_FALSE(is_k_transitive(m11, 5));
}

TEST_CASE("formula against brute force") {
    for (auto spec : {SimpleGroupSpec::alt(5), SimpleGroupSpec::alt(6), SimpleGroupSpec::alt(7),
                      SimpleGroupSpec::alt(8), SimpleGroupSpec::psl(3, 2), SimpleGroupSpec::psl(3, 3),
                      SimpleGroupSpec::psl(2, 4), SimpleGroupSpec::psl(2, 8), SimpleGroupSpec::psl(4, 2)}) {
        CAPTURE(spec.name());
        auto r = compare_formula_brute(spec);
        CHECK(r.status == "Match");
        CHECK(r.order_matches);
    }
    CHECK(centralizer_formula(SimpleGroupSpec::psl(3, 2)).value == 8);
    CHECK(centralizer_formula(SimpleGroupSpec::alt(5)).value == 3);
    CHECK(centralizer_formula(SimpleGroupSpec::alt(8)).value == 180);
}

TEST_CASE("PSL(2,q) for odd q has no integral formula value") {
    CHECK_THROWS_AS(centralizer_formula(SimpleGroupSpec::psl(2, 5)), Error);
    auto r = compare_formula_brute(SimpleGroupSpec::psl(2, 5));
    CHECK(r.status == "NonIntegerFormulaValue");
    CHECK(r.brute_witness == 5);
}

TEST_CASE("PSp(4,3) transvection centralizer") {
    auto r = compare_formula_brute({Family::PSp, 2, 3, 0});
    REQUIRE(r.formula.has_value());
    CHECK(*r.formula == 324);
    // brute force on 40 points gives the true centralizer order
    CHECK(r.brute_witness == 648);
    CHECK(r.status == "FormulaMismatch");
}

TEST_CASE("M11 centralizers") {
    auto m = brute_max_centralizer(m11_group());
    CHECK(m.max == 48);
    CHECK(m.classes == 10);
    CHECK(exceeds(48, 7920, Exponent::quarter()));
    CHECK_FALSE(exceeds(48, 7920, Exponent::half()));
    CHECK_THROWS_AS(centralizer_formula(SimpleGroupSpec::m11()), Error);
}

TEST_CASE("threshold classes") {
    // 3 > 60^{1/4} but 3^2 < 60
    CHECK(threshold_class(SimpleGroupSpec::alt(5), Exponent::quarter()) == Decision::Exceeds);
    CHECK(threshold_class(SimpleGroupSpec::alt(5), Exponent::half()) == Decision::DoesNotExceed);
    CHECK(threshold_class(SimpleGroupSpec::alt(20), Exponent::three_quarters()) == Decision::Exceeds);
    CHECK(threshold_class(SimpleGroupSpec::alt(10), Exponent::three_quarters()) == Decision::DoesNotExceed);
    CentralizerEstimate lower{"x", 100, false};
    CHECK(threshold_class(lower, 10000, Exponent::half()) == Decision::Inconclusive);
    CHECK(threshold_class(lower, 100, Exponent::half()) == Decision::Exceeds);
}

TEST_CASE("filter survivor boundaries") {
    std::vector<SimpleGroupSpec> alts;
    for (std::uint32_t n = 5; n <= 20; ++n) alts.push_back(SimpleGroupSpec::alt(n));
    auto sd = table1_filter(Table1Mode::SD, alts);
    std::uint32_t max_sd = 0;
    for (const auto& s : sd.survivors) max_sd = std::max(max_sd, s.n);
    CHECK(max_sd == 15);
    CHECK(sd.survivors.size() == 11);

    auto cd = table1_filter(Table1Mode::CD_r2, alts);
    std::uint32_t max_cd = 0;
    for (const auto& s : cd.survivors) max_cd = std::max(max_cd, s.n);
    CHECK(max_cd == 7);

    std::vector<SimpleGroupSpec> psl;
    for (std::uint32_t n = 2; n <= 10; ++n)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
            psl.push_back(SimpleGroupSpec::psl(n, q));
    auto ps = table1_filter(Table1Mode::SD, psl);
    for (const auto& s : ps.survivors) {
        CHECK(s.n >= 2);
        CHECK(s.n <= 7);
    }
    bool invalid_seen = false;
    for (const auto& e : ps.entries) invalid_seen = invalid_seen || e.status == "invalid";
    CHECK(invalid_seen);

    auto m11 = table1_filter(Table1Mode::CD_r2, {SimpleGroupSpec::m11()});
    CHECK(m11.survivors.size() == 1);
    CHECK_THROWS_AS(parse_table1_mode("CD_r9"), Error);
}
