#include "gq/incidence.hpp"

#include <algorithm>
#include <string>

namespace gq {

PointSet make_point_set(std::size_t n, std::span<const Point> pts) {
    PointSet s(n);
    for (auto p : pts) s.set(p);
    return s;
}

std::vector<Point> to_vector(const PointSet& s) {
    std::vector<Point> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(static_cast<Point>(i));
    return out;
}

IncidenceStructure::IncidenceStructure(std::size_t point_count, std::vector<std::vector<Point>> lines,
                                       std::string name)
    : point_count_(point_count), lines_(std::move(lines)), name_(std::move(name)) {
    if (point_count_ > 0xFFFF) throw Error("TooLarge", "point count " + std::to_string(point_count_));
    for (auto& l : lines_) {
        std::sort(l.begin(), l.end());
        if (l.size() < 2) throw Error("InvalidStructure", "line with fewer than 2 points");
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw Error("InvalidStructure", "line repeats a point");
        if (l.back() >= point_count_) throw Error("InvalidStructure", "point index out of range");
    }
    std::sort(lines_.begin(), lines_.end());
    if (std::adjacent_find(lines_.begin(), lines_.end()) != lines_.end())
        throw Error("DuplicateLine", "two lines have identical point sets");

    auto d = std::make_shared<Derived>();
    const std::size_t n = point_count_;
    d->lines_through.resize(n);
    d->collinear.assign(n, PointSet(n));
    for (std::size_t p = 0; p < n; ++p) d->collinear[p].set(p);
    const bool table = n <= 4096;
    if (table) d->joining.assign(n * n, -1);
    for (LineIndex li = 0; li < lines_.size(); ++li) {
        const auto& l = lines_[li];
        d->line_sets.push_back(make_point_set(n, l));
        for (auto p : l) {
            d->lines_through[p].push_back(li);
            d->collinear[p] |= d->line_sets.back();
            if (table)
                for (auto q : l)
                    if (q != p && d->joining[p * n + q] < 0) d->joining[p * n + q] = static_cast<std::int32_t>(li);
        }
    }
    derived_ = std::move(d);
}

std::optional<LineIndex> IncidenceStructure::find_line(std::span<const Point> sorted_points) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), sorted_points,
                               [](const std::vector<Point>& a, std::span<const Point> b) {
                                   return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                               });
    if (it == lines_.end() || !std::equal(it->begin(), it->end(), sorted_points.begin(), sorted_points.end()))
        return std::nullopt;
    return static_cast<LineIndex>(it - lines_.begin());
}

std::optional<LineIndex> IncidenceStructure::line_through(Point p, Point q) const {
    if (!derived_->joining.empty()) {
        const auto v = derived_->joining[p * point_count_ + q];
        if (v < 0) return std::nullopt;
        return static_cast<LineIndex>(v);
    }
    for (auto l : lines_through(p))
        if (incident(q, l)) return l;
    return std::nullopt;
}

IncidenceStructure IncidenceStructure::dual() const {
    std::vector<std::vector<Point>> dl(point_count_);
    for (Point p = 0; p < point_count_; ++p) {
        const auto& through = lines_through(p);
        dl[p].assign(through.begin(), through.end());
    }
    return IncidenceStructure(lines_.size(), std::move(dl), name_.empty() ? "" : "dual(" + name_ + ")");
}

IncidenceStructure IncidenceStructure::relabeled(const Permutation& g) const {
    if (g.degree() != point_count_) throw Error("DomainMismatch", "relabeling degree differs from point count");
    auto ls = lines_;
    for (auto& l : ls)
        for (auto& p : l) p = g[p];
    return IncidenceStructure(point_count_, std::move(ls), name_);
}

IncidenceStructure IncidenceStructure::with_name(std::string name) const {
    IncidenceStructure out = *this;
    out.name_ = std::move(name);
    return out;
}

GQOrder validate_gq(const IncidenceStructure& s) {
    const std::size_t n = s.point_count();
    if (s.line_count() == 0 || n == 0) throw Error("NotUniformLineSize", "structure has no lines");
    const std::size_t k = s.line(0).size();
    for (LineIndex l = 0; l < s.line_count(); ++l)
        if (s.line(l).size() != k)
            throw Error("NotUniformLineSize", "line " + std::to_string(l) + " has " +
                                                  std::to_string(s.line(l).size()) + " points, expected " +
                                                  std::to_string(k));
    const std::size_t deg = s.lines_through(0).size();
    for (Point p = 0; p < n; ++p)
        if (s.lines_through(p).size() != deg || deg < 2)
            throw Error("NotUniformPointDegree", "point " + std::to_string(p) + " lies on " +
                                                     std::to_string(s.lines_through(p).size()) + " lines");
    // Digons: two lines sharing two points.
    for (LineIndex a = 0; a < s.line_count(); ++a)
        for (std::size_t i = 0; i + 1 < s.line(a).size(); ++i)
            for (std::size_t j = i + 1; j < s.line(a).size(); ++j) {
                const auto l = s.line_through(s.line(a)[i], s.line(a)[j]);
                if (l && *l != a)
                    throw Error("ContainsTriangleOrDigon", "lines " + std::to_string(*l) + " and " +
                                                               std::to_string(a) + " share two points");
            }
    for (Point p = 0; p < n; ++p) {
        const auto& row = s.collinear_set(p);
        for (LineIndex l = 0; l < s.line_count(); ++l) {
            if (s.incident(p, l)) continue;
            std::size_t witnesses = 0;
            for (auto x : s.line(l)) witnesses += row.test(x);
            if (witnesses >= 2)
                throw Error("ContainsTriangleOrDigon", "point " + std::to_string(p) + " is collinear with " +
                                                           std::to_string(witnesses) + " points of line " +
                                                           std::to_string(l));
            if (witnesses == 0)
                throw Error("GQAxiomFails", "point " + std::to_string(p) + " has no collinear point on line " +
                                                std::to_string(l));
        }
    }
    const GQOrder ord{static_cast<std::uint32_t>(k - 1), static_cast<std::uint32_t>(deg - 1)};
    const std::uint64_t st1 = std::uint64_t{ord.s} * ord.t + 1;
    if (n != (ord.s + 1) * st1 || s.line_count() != (ord.t + 1) * st1)
        throw Error("CountMismatch", "point/line counts disagree with (s+1)(st+1), (t+1)(st+1)");
    return ord;
}

bool is_gq(const IncidenceStructure& s) {
    try {
        validate_gq(s);
        return true;
    } catch (const Error&) {
        return false;
    }
}

PointSet perp(const IncidenceStructure& s, const PointSet& pts) {
    if (pts.none()) throw Error("EmptyInput", "perp of the empty set");
    PointSet out(s.point_count());
    out.set();
    for (auto i = pts.find_first(); i != PointSet::npos; i = pts.find_next(i)) out &= s.collinear_set(static_cast<Point>(i));
    return out;
}

PointSet span(const IncidenceStructure& s, const PointSet& pts) { return perp(s, perp(s, pts)); }

std::vector<Point> perp(const IncidenceStructure& s, std::span<const Point> pts, bool take_span) {
    const auto set = make_point_set(s.point_count(), pts);
    return to_vector(take_span ? span(s, set) : perp(s, set));
}

std::string to_string(const GridShape& g) {
    switch (g.kind) {
    case GridShape::Kind::Grid:
        return "Grid(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    case GridShape::Kind::DualGrid:
        return "DualGrid(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    default:
        return "NotThin";
    }
}

namespace {

std::optional<std::pair<std::uint32_t, std::uint32_t>> grid_parameters(const IncidenceStructure& s) {
    if (s.line_count() < 4) return std::nullopt;
    std::vector<LineIndex> a_side, b_side;
    for (LineIndex l = 0; l < s.line_count(); ++l) (l == 0 || !s.concurrent(0, l) ? a_side : b_side).push_back(l);
    if (a_side.size() < 2 || b_side.size() < 2) return std::nullopt;
    auto pairwise_disjoint = [&](const std::vector<LineIndex>& cls) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (s.concurrent(cls[i], cls[j])) return false;
        return true;
    };
    if (!pairwise_disjoint(a_side) || !pairwise_disjoint(b_side)) return std::nullopt;
    for (auto a : a_side)
        for (auto b : b_side)
            if ((s.line_points(a) & s.line_points(b)).count() != 1) return std::nullopt;
    if (s.point_count() != a_side.size() * b_side.size()) return std::nullopt;
    for (Point p = 0; p < s.point_count(); ++p)
        if (s.lines_through(p).size() != 2) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(a_side.size() - 1), static_cast<std::uint32_t>(b_side.size() - 1)};
}

} // namespace

GridShape classify_thin(const IncidenceStructure& s) {
    if (auto g = grid_parameters(s)) return {GridShape::Kind::Grid, g->first, g->second};
    try {
        if (auto g = grid_parameters(s.dual())) return {GridShape::Kind::DualGrid, g->second, g->first};
    } catch (const Error&) {
        // dual not a valid structure (a point on fewer than two lines)
    }
    return {};
}

PartialOvoidReport is_partial_ovoid(const IncidenceStructure& s, const GQOrder& order, std::span<const Point> pts) {
    PartialOvoidReport r;
    r.size = pts.size();
    r.bound = 1 + std::uint64_t{order.s} * order.t;
    r.pairwise_noncollinear = true;
    for (std::size_t i = 0; i < pts.size() && r.pairwise_noncollinear; ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (s.collinear(pts[i], pts[j])) {
                r.pairwise_noncollinear = false;
                break;
            }
    r.within_bound = r.size <= r.bound;
    return r;
}

std::optional<IncidenceStructure> restrict_to(const IncidenceStructure& s, std::span<const Point> points,
                                              std::span<const LineIndex> lines) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> new_index(s.point_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_index[sorted[i]] = static_cast<std::int64_t>(i);
    std::vector<std::vector<Point>> ls;
    for (auto l : lines) {
        std::vector<Point> r;
        for (auto p : s.line(l))
            if (new_index[p] >= 0) r.push_back(static_cast<Point>(new_index[p]));
        if (r.size() < 2) return std::nullopt;
        ls.push_back(std::move(r));
    }
    try {
        return IncidenceStructure(sorted.size(), std::move(ls));
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace gq
