#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gq/perm.hpp"

namespace gq {

using PointSet = boost::dynamic_bitset<std::uint64_t>;
using LineIndex = std::uint32_t;

PointSet make_point_set(std::size_t n, std::span<const Point> pts);
std::vector<Point> to_vector(const PointSet& s);

struct GQOrder {
    std::uint32_t s = 0;
    std::uint32_t t = 0;

    bool thick() const noexcept { return s >= 2 && t >= 2; }
    friend bool operator==(const GQOrder&, const GQOrder&) = default;
};

/// A finite point-line geometry. Lines are canonical: each is a sorted point
/// list and the line list is sorted lexicographically, so two structures are
/// equal iff they have the same lines.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    IncidenceStructure(std::size_t point_count, std::vector<std::vector<Point>> lines, std::string name = {});

    std::size_t point_count() const noexcept { return point_count_; }
    std::size_t line_count() const noexcept { return lines_.size(); }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::vector<Point>>& lines() const noexcept { return lines_; }
    const std::vector<Point>& line(LineIndex l) const { return lines_[l]; }
    const PointSet& line_points(LineIndex l) const { return derived_->line_sets[l]; }
    const std::vector<LineIndex>& lines_through(Point p) const { return derived_->lines_through[p]; }

    bool incident(Point p, LineIndex l) const { return derived_->line_sets[l].test(p); }
    /// p ~ q: equal or on a common line.
    bool collinear(Point p, Point q) const { return derived_->collinear[p].test(q); }
    /// Row of the collinearity map, including p itself.
    const PointSet& collinear_set(Point p) const { return derived_->collinear[p]; }
    bool concurrent(LineIndex a, LineIndex b) const { return line_points(a).intersects(line_points(b)); }

    std::optional<LineIndex> find_line(std::span<const Point> sorted_points) const;
    /// A line containing both points, if any (the first one when several do).
    std::optional<LineIndex> line_through(Point p, Point q) const;

    /// Point-line transposition: points become lines and vice versa.
    IncidenceStructure dual() const;
    /// Image under a relabeling of the points.
    IncidenceStructure relabeled(const Permutation& g) const;
    IncidenceStructure with_name(std::string name) const;

    friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
        return a.point_count_ == b.point_count_ && a.lines_ == b.lines_;
    }

private:
    struct Derived {
        std::vector<PointSet> line_sets;
        std::vector<std::vector<LineIndex>> lines_through;
        std::vector<PointSet> collinear;
        std::vector<std::int32_t> joining;  // point_count^2 table, -1 when none
    };

    std::size_t point_count_ = 0;
    std::vector<std::vector<Point>> lines_;
    std::string name_;
    std::shared_ptr<const Derived> derived_;
};

/// Returns (s,t) or throws Error with kind NotUniformLineSize,
/// NotUniformPointDegree, ContainsTriangleOrDigon, GQAxiomFails or CountMismatch.
GQOrder validate_gq(const IncidenceStructure& s);
bool is_gq(const IncidenceStructure& s);

/// Points collinear (under ~) with every member of `pts`.
PointSet perp(const IncidenceStructure& s, const PointSet& pts);
std::vector<Point> perp(const IncidenceStructure& s, std::span<const Point> pts, bool span = false);
PointSet span(const IncidenceStructure& s, const PointSet& pts);

struct GridShape {
    enum class Kind { Grid, DualGrid, NotThin };
    Kind kind = Kind::NotThin;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

std::string to_string(const GridShape& g);

/// Grid(a,b) when the lines fall into two parallel classes of a+1 and b+1
/// lines (the class holding the lexicographically first line counts as the
/// a-side); DualGrid(a,b) when the dual is Grid(b,a).
GridShape classify_thin(const IncidenceStructure& s);

struct PartialOvoidReport {
    bool pairwise_noncollinear = false;
    bool within_bound = false;  // |pts| <= 1 + st
    std::size_t size = 0;
    std::uint64_t bound = 0;
};

PartialOvoidReport is_partial_ovoid(const IncidenceStructure& s, const GQOrder& order, std::span<const Point> pts);

/// The substructure on `points` (reindexed in ascending order) with each line
/// of `lines` restricted to them. Returns nullopt when a restricted line has
/// fewer than two points or two restricted lines coincide.
std::optional<IncidenceStructure> restrict_to(const IncidenceStructure& s, std::span<const Point> points,
                                              std::span<const LineIndex> lines);

} // namespace gq
