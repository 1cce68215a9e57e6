#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gq/field.hpp"
#include "gq/incidence.hpp"
#include "gq/perm.hpp"

namespace gq {

/// Symplectic quadrangle W(q), q in {2,3,4}: points of PG(3,q), lines the
/// totally isotropic lines of x1y2-x2y1+x3y4-x4y3. Point 0 is (0,0,0,1).
IncidenceStructure construct_w(std::uint32_t q);
Fq symplectic_form(const FiniteField& f, const Vec& x, const Vec& y);

/// Elliptic quadric Q-(5,q), q in {2,3}, with form x1x2 + x3x4 + f(x5,x6),
/// f(a,b) = a^2+ab+b^2 (q=2) or a^2+b^2 (q=3).
IncidenceStructure construct_elliptic_q5(std::uint32_t q);
/// Exhaustive search for a plane of PG(5,q) contained in the quadric.
bool elliptic_quadric_contains_plane(std::uint32_t q);

/// Points x_{i,j} = i*(s2+1)+j; line k of the first class holds x_{k,*}.
IncidenceStructure construct_grid(std::uint32_t s1, std::uint32_t s2);
IncidenceStructure construct_dual_grid(std::uint32_t t1, std::uint32_t t2);

/// Throws NotSquareOrder unless S has order (s,s).
bool is_regular_point(const IncidenceStructure& s, Point p);

struct DerivedQuadrangle {
    IncidenceStructure structure;
    Point base = 0;                 // in the original numbering
    std::vector<Point> original;    // derived index -> original point
};

/// Payne derivation at a regular point. Throws NotRegularPoint or
/// ValidationFailed.
DerivedQuadrangle payne_derive_map(const IncidenceStructure& s, Point p);
IncidenceStructure payne_derive(const IncidenceStructure& s, Point p);

/// x -> x + lambda*B(x,c)*c on the points of W(q).
Permutation symplectic_transvection(std::uint32_t q, Point center, Fq lambda);

/// The q^3 symplectic elations of W(q) about point 0, restricted to the
/// points of payne_derive(W(q), 0). Built from explicit unipotent maps;
/// falls back to filtering the point stabilizer in Aut(W(q)) when the
/// explicit maps fail verification.
PermGroup construct_elation_singer(std::uint32_t q);
/// The two routes separately. Both throw ConstructionFailed on a failed check.
PermGroup elation_group_from_matrices(std::uint32_t q);
PermGroup elation_group_from_stabilizer(std::uint32_t q);

/// Names accepted by the CLI: w2 w3 w4 q5m2 q5m3 payne-w3 payne-w4 grid:a,b dualgrid:a,b.
IncidenceStructure construct_by_name(const std::string& name);

} // namespace gq
