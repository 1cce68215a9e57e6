#include "gq/simple_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gq/constructions.hpp"
#include "gq/field.hpp"
#include "gq/perm_group.hpp"

namespace gq {

namespace {

BigInt bpow(std::uint64_t b, std::uint64_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// prod_{i in range} (q^{step*i} - sign(i))
template <class F>
BigInt product(std::uint64_t lo, std::uint64_t hi, F term) {
    BigInt r = 1;
    for (std::uint64_t i = lo; i <= hi; ++i) r *= term(i);
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
    if (num % den != 0)
        throw Error("NonIntegerFormulaValue", what + " = " + num.str() + "/" + den.str() + " is not an integer");
    return num / den;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) { return (num + den - 1) / den; }

bool is_odd_power_of_two(std::uint64_t q) {
    auto pp = prime_power(q);
    return pp && pp->p == 2 && pp->f % 2 == 1 && pp->f >= 3;
}

BigInt suzuki_order(std::uint64_t q) { return bpow(q, 2) * (bpow(q, 2) + 1) * (BigInt(q) - 1); }

BigInt psl2_order(std::uint64_t q) { return BigInt(q) * (bpow(q, 2) - 1) / std::gcd<std::uint64_t>(2, q - 1); }

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::Alt: return "Alt";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::OmegaOdd: return "Omega_odd";
    case Family::POmega: return "POmega_eps";
    case Family::Sz: return "Sz";
    case Family::G2: return "G2";
    case Family::TwoF4: return "TwoF4";
    case Family::E8: return "E8";
    case Family::M11: return "M11";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names = {
        {"Alt", Family::Alt},       {"PSL", Family::PSL},         {"PSU", Family::PSU},
        {"PSp", Family::PSp},       {"Omega_odd", Family::OmegaOdd}, {"POmega_eps", Family::POmega},
        {"Sz", Family::Sz},         {"G2", Family::G2},           {"TwoF4", Family::TwoF4},
        {"E8", Family::E8},         {"M11", Family::M11},
    };
    auto it = names.find(name);
    if (it == names.end()) throw Error("UnsupportedFamily", "unknown family '" + name + "'");
    return it->second;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    PrimePower r{p, 0};
    while (q % p == 0) {
        q /= p;
        ++r.f;
    }
    if (q != 1) return std::nullopt;
    return r;
}

std::string SimpleGroupSpec::name() const {
    const auto qs = std::to_string(q);
    switch (family) {
    case Family::Alt: return "Alt(" + std::to_string(n) + ")";
    case Family::PSL: return "PSL(" + std::to_string(n) + "," + qs + ")";
    case Family::PSU: return "PSU(" + std::to_string(n) + "," + qs + ")";
    case Family::PSp: return "PSp(" + std::to_string(2 * n) + "," + qs + ")";
    case Family::OmegaOdd: return "Omega(" + std::to_string(2 * n + 1) + "," + qs + ")";
    case Family::POmega:
        return std::string("POmega") + (eps > 0 ? "+" : "-") + "(" + std::to_string(2 * n) + "," + qs + ")";
    case Family::Sz: return "Sz(" + qs + ")";
    case Family::G2: return "G2(" + qs + ")";
    case Family::TwoF4: return "2F4(" + qs + ")";
    case Family::E8: return "E8(" + qs + ")";
    case Family::M11: return "M11";
    }
    return "?";
}

void SimpleGroupSpec::validate() const {
    auto fail = [&](const std::string& why) { throw Error("InvalidSpec", name() + ": " + why); };
    auto need_pp = [&] {
        if (!prime_power(q)) fail("q must be a prime power");
    };
    switch (family) {
    case Family::Alt:
        if (n < 5) fail("n >= 5 required");
        return;
    case Family::PSL:
        need_pp();
        if (n < 2) fail("n >= 2 required");
        if (n == 2 && q <= 3) fail("PSL(2,2) and PSL(2,3) are not simple");
        return;
    case Family::PSU:
        need_pp();
        if (n < 3) fail("n >= 3 required");
        if (n == 3 && q == 2) fail("PSU(3,2) is not simple");
        return;
    case Family::PSp:
        need_pp();
        if (n < 2) fail("n >= 2 required");
        if (n == 2 && q == 2) fail("PSp(4,2) is not simple");
        return;
    case Family::OmegaOdd:
        need_pp();
        if (q % 2 == 0) fail("q must be odd");
        if (n < 3) fail("n >= 3 required");
        return;
    case Family::POmega:
        need_pp();
        if (n < 4) fail("n >= 4 required");
        if (eps != 1 && eps != -1) fail("eps must be +1 or -1");
        return;
    case Family::Sz:
    case Family::TwoF4:
        if (!is_odd_power_of_two(q)) fail("q = 2^(2m+1) with m >= 1 required");
        return;
    case Family::G2:
        need_pp();
        if (q < 3) fail("G2(2) is not simple");
        return;
    case Family::E8: need_pp(); return;
    case Family::M11: return;
    }
}

bool SimpleGroupSpec::valid() const {
    try {
        validate();
        return true;
    } catch (const Error&) {
        return false;
    }
}

BigInt order_of_simple(const SimpleGroupSpec& spec) {
    spec.validate();
    const std::uint64_t n = spec.n, q = spec.q;
    switch (spec.family) {
    case Family::Alt: return factorial(n) / 2;
    case Family::PSL: {
        const BigInt num = bpow(q, n * (n - 1) / 2) * product(2, n, [&](auto i) { return bpow(q, i) - 1; });
        return exact_div(num, std::gcd<std::uint64_t>(n, q - 1), "|PSL|");
    }
    case Family::PSU: {
        const BigInt num = bpow(q, n * (n - 1) / 2) *
                           product(2, n, [&](auto i) { return i % 2 ? bpow(q, i) + 1 : bpow(q, i) - 1; });
        return exact_div(num, std::gcd<std::uint64_t>(n, q + 1), "|PSU|");
    }
    case Family::PSp: {
        const BigInt num = bpow(q, n * n) * product(1, n, [&](auto i) { return bpow(q, 2 * i) - 1; });
        return exact_div(num, std::gcd<std::uint64_t>(2, q - 1), "|PSp|");
    }
    case Family::OmegaOdd:
        return exact_div(bpow(q, n * n) * product(1, n, [&](auto i) { return bpow(q, 2 * i) - 1; }), 2, "|Omega|");
    case Family::POmega: {
        const BigInt qn_eps = bpow(q, n) - spec.eps;
        const BigInt num = bpow(q, n * (n - 1)) * qn_eps * product(1, n - 1, [&](auto i) { return bpow(q, 2 * i) - 1; });
        const BigInt d = q % 2 ? BigInt(boost::multiprecision::gcd(BigInt(4), qn_eps)) : BigInt(1);
        return exact_div(num, d, "|POmega|");
    }
    case Family::Sz: return suzuki_order(q);
    case Family::G2: return bpow(q, 6) * (bpow(q, 6) - 1) * (bpow(q, 2) - 1);
    case Family::TwoF4:
        return bpow(q, 12) * (bpow(q, 6) + 1) * (bpow(q, 4) - 1) * (bpow(q, 3) + 1) * (BigInt(q) - 1);
    case Family::E8: {
        BigInt r = bpow(q, 120);
        for (std::uint64_t i : {2, 8, 12, 14, 18, 20, 24, 30}) r *= bpow(q, i) - 1;
        return r;
    }
    case Family::M11: return 7920;
    }
    throw Error("UnsupportedFamily", spec.name());
}

CentralizerEstimate centralizer_formula(const SimpleGroupSpec& spec) {
    spec.validate();
    const std::uint64_t n = spec.n, q = spec.q;
    const std::uint64_t p = spec.family == Family::Alt || spec.family == Family::M11 ? 0 : prime_power(q)->p;
    switch (spec.family) {
    case Family::Alt: return {"3-cycle", exact_div(3 * factorial(n - 3), 2, "(3/2)(n-3)!"), true};
    case Family::PSL: {
        const BigInt num = bpow(q, n * (n - 1) / 2) * product(1, n - 2, [&](auto i) { return bpow(q, i) - 1; });
        return {"transvection, one Jordan block of size 2",
                exact_div(num, std::gcd<std::uint64_t>(n, q - 1), "|C| for " + spec.name()), true};
    }
    case Family::PSU: {
        const BigInt num = bpow(q, n * (n - 1) / 2) *
                           product(1, n - 2, [&](auto i) { return i % 2 ? bpow(q, i) + 1 : bpow(q, i) - 1; });
        return {"unitary transvection, one Jordan block of size 2",
                exact_div(num, std::gcd<std::uint64_t>(n, q + 1), "|C| for " + spec.name()), true};
    }
    case Family::PSp: {
        const BigInt num = bpow(q, n * n) * product(1, n - 1, [&](auto i) { return bpow(q, 2 * i) - 1; });
        return {p > 2 ? "transvection, one Jordan block of size 2" : "involution of type b1",
                exact_div(num, std::gcd<std::uint64_t>(2, q - 1), "|C| for " + spec.name()), true};
    }
    case Family::OmegaOdd: {
        const bool one_mod_four = q % 4 == 1;
        const BigInt mid = one_mod_four ? bpow(q, n) - 1 : bpow(q, n) + 1;
        return {one_mod_four ? "involution of type t_n" : "involution of type t_n'",
                bpow(q, n * n - n) * mid * product(1, n - 1, [&](auto i) { return bpow(q, 2 * i) - 1; }), true};
    }
    case Family::POmega: {
        const BigInt num = bpow(q, n * n - 2) * (bpow(q, 2) - 1) *
                           product(1, n - 3, [&](auto i) { return bpow(q, 2 * i) - 1; });
        if (p > 2) return {"unipotent element of order p", ceil_div(num, 8), false};
        return {"involution of type a2", ceil_div(num, 4), false};
    }
    case Family::Sz: return {"involution", bpow(q, 2), true};
    case Family::G2: return {"unipotent element of type A1", bpow(q, 5) * psl2_order(q), true};
    case Family::TwoF4: return {"unipotent element of type (A1~)2", bpow(q, 10) * suzuki_order(q), true};
    case Family::E8: {
        BigInt r = bpow(q, 120);
        for (std::uint64_t i : {2, 6, 8, 10, 12, 14, 18}) r *= bpow(q, i) - 1;
        return {"unipotent element of type A1", ceil_div(r, 2), false};
    }
    case Family::M11: break;
    }
    throw Error("UnsupportedFamily", spec.name() + " has no closed centralizer formula; use brute force");
}

Exponent Exponent::one_minus_quarter(std::uint32_t r) {
    if (r < 1 || r > 3) throw Error("InvalidInput", "r must be 1, 2 or 3");
    Exponent e{4 - r, 4};
    const auto g = std::gcd(e.num, e.den);
    return {e.num / g, e.den / g};
}

std::string Exponent::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool exceeds(const BigInt& c, const BigInt& t, Exponent e) {
    return boost::multiprecision::pow(c, e.den) > boost::multiprecision::pow(t, e.num);
}

bool reaches(const BigInt& c, const BigInt& t, Exponent e) {
    return boost::multiprecision::pow(c, e.den) >= boost::multiprecision::pow(t, e.num);
}

std::string to_string(Decision d) {
    switch (d) {
    case Decision::Exceeds: return "exceeds";
    case Decision::DoesNotExceed: return "does-not-exceed";
    case Decision::Inconclusive: return "inconclusive";
    }
    return "?";
}

Decision threshold_class(const CentralizerEstimate& c, const BigInt& order, Exponent e) {
    if (exceeds(c.value, order, e)) return Decision::Exceeds;
    return c.exact ? Decision::DoesNotExceed : Decision::Inconclusive;
}

Decision threshold_class(const SimpleGroupSpec& spec, Exponent e) {
    return threshold_class(centralizer_formula(spec), order_of_simple(spec), e);
}

// ---------------------------------------------------------------------------

std::uint64_t centralizer_order(const PermGroup& g, const Permutation& x, std::size_t cap) {
    const auto order = g.order(cap);
    PermutationIndex cls;
    cls.insert(x);
    for (std::size_t head = 0; head < cls.size(); ++head) {
        const Permutation y = cls.items()[head];
        for (const auto& gen : g.generators()) cls.insert(y.conjugate_by(gen));
    }
    return order / cls.size();
}

BruteMax brute_max_centralizer(const PermGroup& g, std::size_t cap) {
    BruteMax r;
    r.group_order = g.order(cap);
    const auto classes = conjugacy_classes(g, cap);
    r.classes = classes.size();
    for (const auto& c : classes) {
        if (c.representative.is_identity()) continue;
        const auto cent = r.group_order / c.size;
        if (cent > r.max) {
            r.max = cent;
            r.witness = c.representative;
        }
    }
    return r;
}

PermGroup alternating_group(std::uint32_t n) {
    if (n < 3) throw Error("InvalidInput", "alternating group needs n >= 3");
    std::vector<Permutation> gens;
    for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
    return PermGroup(n, std::move(gens));
}

namespace {

Permutation matrix_action(const ProjectiveSpace& ps, const Matrix& m) {
    std::vector<Point> images(ps.size());
    for (Point i = 0; i < ps.size(); ++i) images[i] = ps.index_of(vec_mat(ps.field(), ps.point(i), m));
    return Permutation::from_images(images);
}

} // namespace

PermGroup psl_group(std::uint32_t n, std::uint32_t q) {
    const FiniteField f(q);
    const ProjectiveSpace ps(f, n);
    std::vector<Permutation> gens;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            // x^k for k < degree spans GF(q) over the prime field
            Fq a = 1;
            for (std::uint32_t k = 0; k < f.degree(); ++k, a *= f.characteristic()) {
                auto m = mat_identity(n);
                m[i][j] = a;
                gens.push_back(matrix_action(ps, m));
            }
        }
    return PermGroup(ps.size(), std::move(gens));
}

Permutation psl_transvection(std::uint32_t n, std::uint32_t q) {
    const FiniteField f(q);
    const ProjectiveSpace ps(f, n);
    auto m = mat_identity(n);
    m[0][1] = 1;
    return matrix_action(ps, m);
}

PermGroup psp43_group() {
    std::vector<Permutation> gens;
    for (Point c = 0; c < 40; ++c) gens.push_back(symplectic_transvection(3, c, 1));
    return PermGroup(40, std::move(gens));
}

bool is_k_transitive(const PermGroup& g, std::uint32_t k) {
    const std::size_t n = g.degree();
    if (k == 0) return true;
    if (k > n) return false;
    std::uint64_t expect = 1;
    for (std::uint32_t i = 0; i < k; ++i) expect *= n - i;
    std::vector<Point> start(k);
    std::iota(start.begin(), start.end(), Point{0});
    std::map<std::vector<Point>, bool> seen{{start, true}};
    std::vector<std::vector<Point>> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& gen : g.generators()) {
            auto img = queue[head];
            for (auto& x : img) x = gen[x];
            if (seen.emplace(img, true).second) queue.push_back(std::move(img));
        }
    return queue.size() == expect;
}

PermGroup m11_group() {
    std::vector<Point> cyc(11);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    PermGroup g(11, {Permutation::from_cycles(11, {cyc}), Permutation::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
    if (g.order() != 7920 || !is_k_transitive(g, 4))
        throw Error("VerificationFailed", "M11 generators do not give a 4-transitive group of order 7920");
    return g;
}

BruteRepresentation brute_representation(const SimpleGroupSpec& spec) {
    spec.validate();
    switch (spec.family) {
    case Family::Alt:
        if (spec.n > 9) break;
        return {alternating_group(spec.n), Permutation::from_cycles(spec.n, {{0, 1, 2}}), "natural action"};
    case Family::PSL: {
        if (order_of_simple(spec) > 200'000 || spec.q > 13) break;
        const auto q = static_cast<std::uint32_t>(spec.q);
        return {psl_group(spec.n, q), psl_transvection(spec.n, q), "points of PG(n-1,q)"};
    }
    case Family::PSp:
        if (spec.n != 2 || spec.q != 3) break;
        return {psp43_group(), symplectic_transvection(3, 0, 1), "40 points of W(3)"};
    case Family::M11: return {m11_group(), std::nullopt, "11 points"};
    default: break;
    }
    throw Error("UnsupportedFamily", "no brute-force representation for " + spec.name());
}

FormulaCheck compare_formula_brute(const SimpleGroupSpec& spec) {
    FormulaCheck r;
    r.spec = spec;
    const auto rep = brute_representation(spec);
    r.order_formula = order_of_simple(spec);
    r.brute = brute_max_centralizer(rep.group);
    r.order_matches = BigInt(r.brute.group_order) == r.order_formula;
    if (rep.witness) r.brute_witness = centralizer_order(rep.group, *rep.witness);
    try {
        const auto est = centralizer_formula(spec);
        r.formula = est.value;
        const BigInt bw = r.brute_witness;
        const bool ok = est.exact ? est.value == bw : est.value <= bw;
        r.status = ok ? "Match" : "FormulaMismatch";
        r.detail = "formula " + est.value.str() + " (" + est.witness + "), brute force " + std::to_string(r.brute_witness);
    } catch (const Error& e) {
        if (e.kind() == "NonIntegerFormulaValue") {
            r.status = e.kind();
            r.detail = std::string(e.what()) + "; brute force " + std::to_string(r.brute_witness);
        } else if (e.kind() == "UnsupportedFamily") {
            r.status = "NoFormula";
            r.detail = "brute-force maximum " + std::to_string(r.brute.max);
        } else {
            throw;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string to_string(Table1Mode m) {
    switch (m) {
    case Table1Mode::SD: return "SD";
    case Table1Mode::CD_r2: return "CD_r2";
    case Table1Mode::CD_r3: return "CD_r3";
    }
    return "?";
}

Table1Mode parse_table1_mode(const std::string& s) {
    if (s == "SD") return Table1Mode::SD;
    if (s == "CD_r2") return Table1Mode::CD_r2;
    if (s == "CD_r3") return Table1Mode::CD_r3;
    throw Error("InvalidInput", "mode must be SD, CD_r2 or CD_r3");
}

Exponent table1_exponent(Table1Mode m) {
    switch (m) {
    case Table1Mode::SD: return Exponent::one_minus_quarter(1);
    case Table1Mode::CD_r2: return Exponent::one_minus_quarter(2);
    case Table1Mode::CD_r3: return Exponent::one_minus_quarter(3);
    }
    return Exponent::three_quarters();
}

Table1Result table1_filter(Table1Mode mode, const std::vector<SimpleGroupSpec>& specs) {
    Table1Result res;
    res.mode = mode;
    const auto e = table1_exponent(mode);
    for (const auto& spec : specs) {
        Table1Entry entry;
        entry.spec = spec;
        if (!spec.valid()) {
            entry.status = "invalid";
            try {
                spec.validate();
            } catch (const Error& err) {
                entry.reason = err.what();
            }
            res.entries.push_back(std::move(entry));
            continue;
        }
        entry.order = order_of_simple(spec);
        try {
            if (spec.family == Family::M11) {
                static const BruteMax m11 = brute_max_centralizer(m11_group());
                entry.estimate = CentralizerEstimate{"brute-force maximum", m11.max, true};
            } else {
                entry.estimate = centralizer_formula(spec);
            }
        } catch (const Error& err) {
            if (err.kind() != "NonIntegerFormulaValue") throw;
            entry.status = "survives";
            entry.reason = std::string("no usable witness value: ") + err.what();
            res.survivors.push_back(spec);
            res.entries.push_back(std::move(entry));
            continue;
        }
        const std::string rel = "|C|^" + std::to_string(e.den) + (e.num == 1 ? " vs |T|" : " vs |T|^" + std::to_string(e.num));
        // a lower bound that reaches the threshold certifies exclusion
        if (reaches(entry.estimate->value, entry.order, e)) {
            entry.status = "excluded";
            entry.reason = rel + ": reached by " + entry.estimate->witness;
        } else {
            entry.status = "survives";
            entry.reason = rel + ": below" + (entry.estimate->exact ? "" : " (lower bound only)");
            res.survivors.push_back(spec);
        }
        res.entries.push_back(std::move(entry));
    }
    return res;
}

} // namespace gq
