#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "belief.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"
#include "intervals.hpp"

namespace intprob {

using Point = Eigen::VectorXd;
using PointSet = std::vector<Point>;

/// Maximum point-to-line distance accepted when intersecting focus lines.
inline constexpr double line_tolerance = 1e-8;
/// Maximum spread of per-line coordinates for a focus to count as special.
inline constexpr double special_tolerance = 1e-8;

/// n labelled (pseudo-)probability vertices, vertex i associated with singleton i.
class Simplex {
public:
    Simplex(Frame frame, std::vector<Distribution> vertices) : frame_(std::move(frame)), vertices_(std::move(vertices))
    {
        if (vertices_.size() != frame_.size())
            throw domain_error("simplex: expected one vertex per singleton");
        for (const auto& v : vertices_)
            require_same_frame(v.frame(), frame_);
    }

    const Frame& frame() const { return frame_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Distribution>& vertices() const { return vertices_; }
    const Distribution& vertex(std::size_t i) const { return vertices_[i]; }

    /// Vertices in the (n-1)-dimensional chart obtained by dropping the last coordinate.
    PointSet chart() const;

    /// Vertices fail to be affinely independent.
    bool degenerate() const;

private:
    Frame frame_;
    std::vector<Distribution> vertices_;
};

inline Point to_chart(const Distribution& p)
{
    Point x(static_cast<Eigen::Index>(p.size() - 1));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        x[static_cast<Eigen::Index>(i)] = p[i];
    return x;
}

inline Distribution from_chart(const Frame& frame, const Point& x)
{
    std::vector<double> v(frame.size());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        v[i] = x[static_cast<Eigen::Index>(i)];
        sum += v[i];
    }
    v.back() = 1.0 - sum;
    return Distribution(frame, std::move(v));
}

inline PointSet Simplex::chart() const
{
    PointSet out;
    for (const auto& v : vertices_)
        out.push_back(to_chart(v));
    return out;
}

/// Dimension of the affine hull of a point set.
inline std::size_t affine_rank(const PointSet& pts, double tol = 1e-10)
{
    if (pts.size() < 2)
        return 0;
    Eigen::MatrixXd d(pts.front().size(), static_cast<Eigen::Index>(pts.size() - 1));
    for (std::size_t i = 1; i < pts.size(); ++i)
        d.col(static_cast<Eigen::Index>(i - 1)) = pts[i] - pts.front();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
    lu.setThreshold(tol);
    return static_cast<std::size_t>(lu.rank());
}

inline bool Simplex::degenerate() const
{
    return size() < 2 || affine_rank(chart()) < size() - 1;
}

/// Corners of the probability simplex (categorical distributions).
inline Simplex probability_simplex(const Frame& frame)
{
    std::vector<Distribution> v;
    for (std::size_t i = 0; i < frame.size(); ++i)
        v.push_back(Distribution::vertex(frame, i));
    return Simplex(frame, std::move(v));
}

/// Lower simplex T^1: vertex x adds the non-singleton mass 1 - k_Bel to m(x).
inline Simplex lower_simplex(const MassFunction& m)
{
    const auto ms = m.singleton_masses();
    const double k_bel = std::accumulate(ms.begin(), ms.end(), 0.0);
    std::vector<Distribution> v;
    for (std::size_t x = 0; x < ms.size(); ++x) {
        auto p = ms;
        p[x] += 1.0 - k_bel;
        v.emplace_back(m.frame(), std::move(p));
    }
    return Simplex(m.frame(), std::move(v));
}

/// Upper simplex T^{n-1}: vertex x takes Pl(y) for y != x and Pl(x) + 1 - k_Pl at x (possibly negative).
inline Simplex upper_simplex(const MassFunction& m)
{
    const auto pl = m.singleton_plausibilities();
    const double k_pl = std::accumulate(pl.begin(), pl.end(), 0.0);
    std::vector<Distribution> v;
    for (std::size_t x = 0; x < pl.size(); ++x) {
        auto p = pl;
        p[x] += 1.0 - k_pl;
        v.emplace_back(m.frame(), std::move(p));
    }
    return Simplex(m.frame(), std::move(v));
}

inline Point barycentre(const PointSet& pts)
{
    Point b = Point::Zero(pts.front().size());
    for (const auto& p : pts)
        b += p;
    return b / static_cast<double>(pts.size());
}

inline Distribution barycentre(const Simplex& s)
{
    std::vector<double> b(s.size(), 0.0);
    for (const auto& v : s.vertices())
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i] += v[i] / static_cast<double>(s.size());
    return Distribution(s.frame(), std::move(b));
}

/// Affine coordinates alpha of p in the simplex spanned by `pts`: sum alpha_i pts_i = p, sum alpha_i = 1.
/// Coordinates may be negative (p outside the simplex).
inline std::vector<double> affine_coords(const Point& p, const PointSet& pts)
{
    const auto n = static_cast<Eigen::Index>(pts.size());
    const auto d = p.size();
    Eigen::MatrixXd a(d + 1, n);
    Eigen::VectorXd b(d + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        a.block(0, i, d, 1) = pts[static_cast<std::size_t>(i)];
        a(d, i) = 1.0;
    }
    b.head(d) = p;
    b[d] = 1.0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    qr.setThreshold(1e-12);
    if (qr.rank() < n)
        throw domain_error("affine_coords: degenerate simplex (vertices not affinely independent)");
    Eigen::VectorXd x = qr.solve(b);
    if ((a * x - b).lpNorm<Eigen::Infinity>() > 1e-9)
        throw domain_error("affine_coords: point does not lie in the affine hull of the simplex");
    return std::vector<double>(x.data(), x.data() + x.size());
}

inline std::vector<double> affine_coords(const Distribution& p, const Simplex& s)
{
    require_same_frame(p.frame(), s.frame());
    if (s.degenerate())
        throw domain_error("affine_coords: degenerate simplex (vertices not affinely independent)");
    return affine_coords(to_chart(p), s.chart());
}

/// Common intersection of the lines a(s_i, t_rho(i)).
///
/// line_coordinates[i] is the coordinate alpha_i with point = alpha_i s_i + (1 - alpha_i) t_rho(i);
/// NaN when s_i == t_rho(i) (the "line" is a single point and the coordinate is free).
template <typename P>
struct BasicFocus {
    P point;
    std::vector<std::size_t> permutation;
    std::vector<double> line_coordinates;
    bool special = false;
    std::optional<double> common_alpha;
    bool degenerate = false; ///< every pair coincides; point is the barycentre of S
};

using PointFocus = BasicFocus<Point>;
using FocusResult = BasicFocus<Distribution>;

namespace detail {

inline void classify_special(PointFocus& f)
{
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    std::size_t count = 0;
    for (double a : f.line_coordinates)
        if (!std::isnan(a)) {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
            sum += a;
            ++count;
        }
    f.special = count > 0 && hi - lo <= special_tolerance;
    if (f.special)
        f.common_alpha = sum / static_cast<double>(count);
}

} // namespace detail

/// Focus of two point simplices under a fixed vertex pairing rho (i -> rho[i]).
/// Returns nullopt when the lines have no unique common point.
inline std::optional<PointFocus> focus(const PointSet& s, const PointSet& t, const std::vector<std::size_t>& rho)
{
    const std::size_t n = s.size();
    if (t.size() != n || rho.size() != n || n == 0)
        throw domain_error("focus: simplices and permutation differ in size");
    const auto d = s.front().size();

    std::vector<Point> dir(n);
    std::vector<bool> degenerate(n);
    std::size_t free_lines = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dir[i] = s[i] - t[rho[i]];
        degenerate[i] = dir[i].lpNorm<Eigen::Infinity>() <= 1e-12;
        if (!degenerate[i])
            ++free_lines;
    }
    if (free_lines == 0) {
        return PointFocus{barycentre(s), rho, std::vector<double>(n, std::nan("")), false, std::nullopt, true};
    }

    // Unknowns: the point (d) and one coordinate per proper line.
    // Proper line i:      point - alpha_i (s_i - t_i) = t_i
    // Degenerate pair i:  point = s_i
    const auto cols = d + static_cast<Eigen::Index>(free_lines);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * d, cols);
    Eigen::VectorXd b(static_cast<Eigen::Index>(n) * d);
    Eigen::Index col = d;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = static_cast<Eigen::Index>(i) * d;
        a.block(row, 0, d, d).setIdentity();
        if (degenerate[i]) {
            b.segment(row, d) = s[i];
        } else {
            a.block(row, col, d, 1) = -dir[i];
            b.segment(row, d) = t[rho[i]];
            ++col;
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    qr.setThreshold(1e-10);
    if (qr.rank() < cols)
        return std::nullopt;
    const Eigen::VectorXd x = qr.solve(b);
    const Point f = x.head(d);

    PointFocus out{f, rho, std::vector<double>(n), false, std::nullopt, false};
    for (std::size_t i = 0; i < n; ++i) {
        const Point& ti = t[rho[i]];
        if (degenerate[i]) {
            if ((f - s[i]).norm() > line_tolerance)
                return std::nullopt;
            out.line_coordinates[i] = std::nan("");
            continue;
        }
        const double lambda = (f - ti).dot(dir[i]) / dir[i].squaredNorm();
        if ((f - ti - lambda * dir[i]).norm() > line_tolerance)
            return std::nullopt;
        out.line_coordinates[i] = lambda;
    }
    detail::classify_special(out);
    return out;
}

/// First special focus over all pairings, identity pairing first.
inline std::optional<PointFocus> special_focus(const PointSet& s, const PointSet& t)
{
    if (s.size() > 8)
        throw size_error("special_focus: more than 8 vertices");
    for (const auto& rho : permutations(s.size())) {
        auto f = focus(s, t, rho);
        if (f && (f->special || f->degenerate))
            return f;
    }
    return std::nullopt;
}

namespace detail {

inline FocusResult to_distribution_focus(const Frame& frame, PointFocus f)
{
    return FocusResult{from_chart(frame, f.point), std::move(f.permutation), std::move(f.line_coordinates), f.special,
                       f.common_alpha, f.degenerate};
}

} // namespace detail

inline std::optional<FocusResult> focus(const Simplex& s, const Simplex& t, const std::vector<std::size_t>& rho)
{
    require_same_frame(s.frame(), t.frame());
    if (s.size() < 2)
        throw domain_error("focus: simplices need at least two vertices");
    auto f = focus(s.chart(), t.chart(), rho);
    if (!f)
        return std::nullopt;
    if (f->degenerate)
        return detail::to_distribution_focus(s.frame(),
                                             PointFocus{to_chart(barycentre(s)), f->permutation,
                                                        f->line_coordinates, false, std::nullopt, true});
    return detail::to_distribution_focus(s.frame(), std::move(*f));
}

inline std::optional<FocusResult> special_focus(const Simplex& s, const Simplex& t)
{
    require_same_frame(s.frame(), t.frame());
    if (s.size() < 2)
        throw domain_error("special_focus: simplices need at least two vertices");
    auto f = special_focus(s.chart(), t.chart());
    if (!f)
        return std::nullopt;
    return detail::to_distribution_focus(s.frame(), std::move(*f));
}

/// Vertex of the credal set generated by an ordering of the singletons: each focal
/// element's mass goes to its first member in the ordering.
inline Distribution permutation_vertex(const MassFunction& m, const std::vector<std::size_t>& order)
{
    std::vector<double> p(m.frame().size(), 0.0);
    for (const auto& [set, value] : m.focal())
        for (std::size_t x : order)
            if (set.contains(x)) {
                p[x] += value;
                break;
            }
    return Distribution(m.frame(), std::move(p));
}

/// All n! permutation vertices, with multiplicity, in lexicographic permutation order.
inline std::vector<Distribution> permutation_vertices(const MassFunction& m)
{
    if (m.frame().size() > 8)
        throw size_error("credal_vertices: frame larger than 8 (n! enumeration)");
    std::vector<Distribution> out;
    for (const auto& order : permutations(m.frame().size()))
        out.push_back(permutation_vertex(m, order));
    return out;
}

inline std::vector<Distribution> deduplicate(const std::vector<Distribution>& pts, double tol = 1e-12)
{
    std::vector<Distribution> out;
    for (const auto& p : pts)
        if (std::none_of(out.begin(), out.end(), [&](const Distribution& q) { return max_abs_diff(p, q) <= tol; }))
            out.push_back(p);
    return out;
}

/// Distinct vertices of the credal set P[Bel].
inline std::vector<Distribution> credal_vertices(const MassFunction& m)
{
    if (m.pseudo())
        throw domain_error("credal_vertices: pseudo mass function");
    return deduplicate(permutation_vertices(m));
}

/// Candidate extreme points of the interval credal set: all coordinates but one at a bound,
/// the remaining one fixed by normalisation and within its own bounds. Their hull is P(l,u).
inline std::vector<Distribution> interval_vertices(const IntervalSystem& sys)
{
    require_consistent(sys, "interval_vertices");
    const std::size_t n = sys.size();
    if (n > 16)
        throw size_error("interval_vertices: frame larger than 16");
    std::vector<Distribution> out;
    for (std::size_t free = 0; free < n; ++free) {
        for (mask_t pick = 0; pick < (mask_t{1} << (n - 1)); ++pick) {
            std::vector<double> p(n);
            double sum = 0.0;
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == free)
                    continue;
                p[i] = ((pick >> bit++) & 1u) ? sys.upper(i) : sys.lower(i);
                sum += p[i];
            }
            p[free] = 1.0 - sum;
            if (p[free] < sys.lower(free) - eps || p[free] > sys.upper(free) + eps)
                continue;
            out.emplace_back(sys.frame(), std::move(p));
        }
    }
    return deduplicate(out, 1e-12);
}

namespace detail {

/// All points (c_1/k, ..., c_n/k) with nonnegative integers c summing to k.
inline void simplex_lattice(std::size_t n, std::size_t k, std::vector<std::vector<double>>& out)
{
    std::vector<std::size_t> c(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == n) {
            c[i] = left;
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = static_cast<double>(c[j]) / static_cast<double>(k);
            out.push_back(std::move(p));
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            c[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, k);
}

inline double binomial(std::size_t n, std::size_t k)
{
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

} // namespace detail

/// Checks on a lattice of about `grid_points` distributions plus every credal vertex that
/// (a) membership in P[Bel] equals membership in every size-i component P^i[Bel], i < n,
/// (b) membership in the interval credal set equals joint membership in T^1 and T^{n-1},
///     the latter judged by nonnegative affine coordinates in each simplex,
/// (c) every credal vertex lies in P[Bel] and in the interval credal set.
inline bool credal_decomposition_check(const MassFunction& m, std::size_t grid_points = 10000)
{
    const Frame& frame = m.frame();
    const std::size_t n = frame.size();
    if (n > 6)
        throw size_error("credal_decomposition_check: frame larger than 6");
    const auto bel = belief_values(m);
    const auto sys = from_belief(m);
    const auto lower = lower_simplex(m);
    const auto upper = upper_simplex(m);
    const bool lower_flat = lower.degenerate();
    const bool upper_flat = upper.degenerate();
    const auto t = singleton_totals(m);

    std::size_t k = 1;
    while (n > 1 && detail::binomial(k + n, n - 1) <= static_cast<double>(grid_points))
        ++k;
    std::vector<std::vector<double>> raw;
    detail::simplex_lattice(n, k, raw);
    std::vector<Distribution> pts;
    for (auto& p : raw)
        pts.emplace_back(frame, std::move(p));
    const auto vertices = credal_vertices(m);
    pts.insert(pts.end(), vertices.begin(), vertices.end());

    auto in_component = [&](const Distribution& p, std::size_t size) {
        for (mask_t a = 1; a < frame.subset_count(); ++a) {
            const Subset s(a);
            if (s.size() == size && p.probability(s) < bel(s) - eps)
                return false;
        }
        return true;
    };
    auto in_credal = [&](const Distribution& p) {
        for (mask_t a = 1; a < frame.subset_count(); ++a)
            if (p.probability(Subset(a)) < bel(Subset(a)) - eps)
                return false;
        return true;
    };
    // Coordinates are scaled copies of the slack, so compare at the matching scale.
    auto in_simplex = [&](const Distribution& p, const Simplex& s, bool flat, double scale) {
        if (flat)
            return max_abs_diff(p, s.vertex(0)) <= eps;
        const auto a = affine_coords(p, s);
        return std::all_of(a.begin(), a.end(), [&](double v) { return v >= -eps / scale; });
    };

    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
        const auto& p = pts[idx];
        const bool credal = in_credal(p);
        bool components = true;
        for (std::size_t i = 1; i < n; ++i)
            components = components && in_component(p, i);
        if (credal != components)
            return false;
        const bool interval = contains(sys, p);
        const bool simplices = in_simplex(p, lower, lower_flat, 1.0 - t.k_bel) &&
                               in_simplex(p, upper, upper_flat, t.k_pl - 1.0);
        if (interval != simplices)
            return false;
        if (credal && !interval)
            return false;
        if (idx >= raw.size() && !credal)
            return false;
    }
    return true;
}

} // namespace intprob
