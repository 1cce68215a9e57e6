#include "gq/field.hpp"

#include <algorithm>

#include "gq/error.hpp"

namespace gq {

namespace {

struct FieldSpec {
    std::uint32_t q, p, k;
    std::vector<std::uint32_t> modulus;  // monic, lowest degree first
};

FieldSpec spec_for(std::uint32_t q) {
    switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13: return {q, q, 1, {}};
    case 4: return {4, 2, 2, {1, 1, 1}};
    case 8: return {8, 2, 3, {1, 1, 0, 1}};
    case 9: return {9, 3, 2, {2, 2, 1}};
    default: throw Error("UnsupportedField", "q=" + std::to_string(q) + " (supported: 2,3,4,5,7,8,9,11,13)");
    }
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k);
    for (auto& x : d) {
        x = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

} // namespace

FiniteField::FiniteField(std::uint32_t q) {
    auto sp = spec_for(q);
    q_ = sp.q;
    p_ = sp.p;
    k_ = sp.k;
    modulus_ = sp.modulus;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (Fq a = 0; a < q_; ++a) {
        const auto da = digits(a, p_, k_);
        for (Fq b = 0; b < q_; ++b) {
            const auto db = digits(b, p_, k_);
            std::vector<std::uint32_t> sum(k_);
            for (std::uint32_t i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = undigits(sum, p_);

            std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
            for (std::uint32_t i = 0; i < k_; ++i)
                for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            // reduce by the monic modulus from the top
            for (std::size_t d = prod.size(); d-- > k_;) {
                const auto c = prod[d];
                if (c == 0) continue;
                for (std::uint32_t i = 0; i <= k_; ++i) {
                    auto& slot = prod[d - k_ + i];
                    slot = (slot + (p_ - c) * modulus_[i]) % p_;
                }
            }
            prod.resize(k_);
            mul_[a * q_ + b] = undigits(prod, p_);
        }
    }
    for (Fq a = 0; a < q_; ++a)
        for (Fq b = 0; b < q_; ++b) {
            if (add(a, b) == 0) neg_[a] = b;
            if (mul(a, b) == 1) inv_[a] = b;
        }
    if (!verify_axioms()) throw Error("FieldAxiomFails", "GF(" + std::to_string(q_) + ") tables");
}

std::string FiniteField::modulus_string() const {
    if (modulus_.empty()) return "prime field";
    std::string out;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (modulus_[i] != 1 || i == 0) out += std::to_string(modulus_[i]);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Fq FiniteField::inv(Fq a) const {
    if (a == 0) throw Error("DivisionByZero", "inverse of 0 in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

bool FiniteField::verify_axioms() const {
    for (Fq a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
        if (add(a, neg(a)) != 0) return false;
        if (a != 0 && mul(a, inv_[a]) != 1) return false;
        for (Fq b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            if (a != 0 && b != 0 && mul(a, b) == 0) return false;
            for (Fq c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) return false;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
    }
    return true;
}

ProjectiveSpace::ProjectiveSpace(const FiniteField& field, std::size_t dim) : f_(field), dim_(dim) {
    const std::uint32_t q = f_.order();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim_; ++i) total *= q;
    if (total > (1u << 24)) throw Error("TooLarge", "projective space too large for lookup table");
    lookup_.assign(total, -1);
    // Enumerate all vectors in lexicographic order; keep the normalized ones.
    Vec v(dim_, 0);
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t x = c;
        for (std::size_t i = dim_; i-- > 0;) {
            v[i] = static_cast<Fq>(x % q);
            x /= q;
        }
        auto first = std::find_if(v.begin(), v.end(), [](Fq a) { return a != 0; });
        if (first == v.end() || *first != 1) continue;
        lookup_[c] = static_cast<std::int32_t>(points_.size());
        points_.push_back(v);
    }
}

std::size_t ProjectiveSpace::code(const Vec& v) const {
    std::size_t c = 0;
    for (auto a : v) c = c * f_.order() + a;
    return c;
}

Vec ProjectiveSpace::normalize(Vec v) const {
    if (v.size() != dim_) throw Error("DomainMismatch", "vector length differs from space dimension");
    auto first = std::find_if(v.begin(), v.end(), [](Fq a) { return a != 0; });
    if (first == v.end()) throw Error("ZeroVector", "the zero vector spans no projective point");
    const Fq s = f_.inv(*first);
    for (auto& a : v) a = f_.mul(s, a);
    return v;
}

std::uint32_t ProjectiveSpace::index_of(const Vec& v) const {
    return static_cast<std::uint32_t>(lookup_[code(normalize(v))]);
}

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_scale(const FiniteField& f, Fq c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Fq dot(const FiniteField& f, const Vec& a, const Vec& b) {
    Fq s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

Matrix mat_identity(std::size_t n) {
    Matrix m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Vec vec_mat(const FiniteField& f, const Vec& v, const Matrix& m) {
    Vec out(m.empty() ? 0 : m[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], m[i][j]));
    }
    return out;
}

} // namespace gq
