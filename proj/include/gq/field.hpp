#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gq {

using Fq = std::uint32_t;  // field element, 0..q-1
using Vec = std::vector<Fq>;

/// GF(q) for q in {2,3,4,5,7,8,9,11,13}. Element k encodes the polynomial whose
/// base-p digits are its coefficients (lowest degree first). Extension fields
/// use x^2+x+1 (q=4), x^3+x+1 (q=8) and x^2+2x+2 (q=9).
class FiniteField {
public:
    explicit FiniteField(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    /// Coefficients of the defining polynomial, lowest degree first (empty for prime q).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::string modulus_string() const;

    Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    /// Throws DivisionByZero.
    Fq inv(Fq a) const;

    /// Exhaustive check of the field axioms on the tables.
    bool verify_axioms() const;

private:
    std::uint32_t q_, p_, k_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

/// Points of PG(dim-1, q) as normalized vectors (first nonzero coordinate 1),
/// indexed in lexicographic order of coordinates.
class ProjectiveSpace {
public:
    ProjectiveSpace(const FiniteField& field, std::size_t dim);

    const FiniteField& field() const noexcept { return f_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Vec& point(std::uint32_t i) const { return points_[i]; }
    const std::vector<Vec>& points() const noexcept { return points_; }

    /// Index of the projective point spanned by a nonzero vector. Throws ZeroVector.
    std::uint32_t index_of(const Vec& v) const;
    Vec normalize(Vec v) const;

private:
    FiniteField f_;
    std::size_t dim_;
    std::vector<Vec> points_;
    std::vector<std::int32_t> lookup_;  // base-q code of a normalized vector -> index
    std::size_t code(const Vec& v) const;
};

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b);
Vec vec_scale(const FiniteField& f, Fq c, const Vec& a);
Fq dot(const FiniteField& f, const Vec& a, const Vec& b);

/// Square matrices over GF(q), row-major; vectors act on the left: v * M.
using Matrix = std::vector<Vec>;
Matrix mat_identity(std::size_t n);
Vec vec_mat(const FiniteField& f, const Vec& v, const Matrix& m);

} // namespace gq
