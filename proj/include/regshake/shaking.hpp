#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "piecewise_linear.hpp"
#include "profile.hpp"
#include "shapes.hpp"

namespace regshake {

// Ladder slope 1 - 2/e as an exact rational.
inline Rational alpha_rational(long long e) {
    require_ladder_order(e);
    return Rational(e - 2, e);
}

inline void require_slope(const Rational& alpha) {
    if (!(alpha >= 0 && alpha < 1))
        throw std::invalid_argument("slope alpha must lie in [0,1)");
}

// A slice of the region {|x| <= y <= g} along the slope-alpha line through
// the anchor (x0, -x0) on y = -x.
struct SliceQuery {
    double alpha = 0;
    double x0 = 0;
};

// Abscissa intervals where the line lies between |x| and the curve, exact.
// The line stays above |x| precisely on [x0, -x0 (1+alpha)/(1-alpha)], so
// only that window is scanned.
inline std::vector<std::pair<Rational, Rational>>
slice_intervals(const PiecewiseLinear& g, const Rational& alpha, const Rational& x0) {
    require_slope(alpha);
    std::vector<std::pair<Rational, Rational>> out;
    if (x0 >= 0) return out;
    const Rational xR = -x0 * (1 + alpha) / (1 - alpha);
    const auto& pts = g.points();
    const Rational lo = std::max(x0, pts.front().first);
    const Rational hi = std::min(xR, pts.back().first);
    auto line_at = [&](const Rational& x) { return -x0 + alpha * (x - x0); };
    auto push = [&](const Rational& u1, const Rational& u2) {
        if (!(u1 < u2)) return;
        if (!out.empty() && out.back().second == u1)
            out.back().second = u2;
        else
            out.emplace_back(u1, u2);
    };
    // outside the breakpoint span g = |x| <= line with equality only at the
    // window ends, so segments of g are the only source of measure
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& [X1, Y1] = pts[i];
        const auto& [X2, Y2] = pts[i + 1];
        const Rational u1 = std::max(X1, lo), u2 = std::min(X2, hi);
        if (!(u1 < u2)) continue;
        auto curve_at = [&](const Rational& x) {
            return Y1 + (Y2 - Y1) * (x - X1) / (X2 - X1);
        };
        const Rational d1 = curve_at(u1) - line_at(u1);
        const Rational d2 = curve_at(u2) - line_at(u2);
        if (d1 >= 0 && d2 >= 0) {
            push(u1, u2);
        } else if (d1 >= 0 || d2 >= 0) {
            const Rational xc = u1 + (u2 - u1) * d1 / (d1 - d2);
            if (d1 >= 0)
                push(u1, xc);
            else
                push(xc, u2);
        }
    }
    return out;
}

// Total abscissa measure of the slice, exact.
inline Rational slice_measure(const PiecewiseLinear& g, const Rational& alpha, const Rational& x0) {
    Rational total = 0;
    for (const auto& [u1, u2] : slice_intervals(g, alpha, x0)) total += u2 - u1;
    return total;
}

// Euclidean slice length: abscissa measure stretched along the direction
// (1, alpha).
inline double slice_length(const PiecewiseLinear& g, SliceQuery q) {
    const Rational m = slice_measure(g, Rational(q.alpha), Rational(q.x0));
    return to_double(m) * std::sqrt(1.0 + q.alpha * q.alpha);
}

// Numeric slice measure for a convex upper boundary g >= |x| (any of the
// shape curves, shaken curves included). The gap g - line is convex, so its
// negative part is one interval found by ternary search plus two bisections.
template <class G>
    requires std::invocable<const G&, double>
double slice_measure_fn(const G& g, double alpha, double x0, double tol = 1e-12) {
    require_slope(alpha);
    if (x0 >= 0) return 0.0;
    const double xR = -x0 * (1.0 + alpha) / (1.0 - alpha);
    auto gap = [&](double x) { return g(x) - (-x0 + alpha * (x - x0)); };
    double lo = x0, hi = xR;
    while (hi - lo > tol) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (m1 <= lo || m2 >= hi) break;
        if (gap(m1) <= gap(m2)) hi = m2; else lo = m1;
    }
    const double xmin = 0.5 * (lo + hi);
    if (gap(xmin) >= 0.0) return xR - x0;   // line never climbs above the curve
    // tangential touches at the window ends evaluate to 0 up to round-off;
    // treat them as empty ends rather than handing bisect a one-signed bracket
    const double gap_lo = gap(x0), gap_hi = gap(xR);
    const double c1 = gap_lo <= 0.0 ? x0 : bisect(gap, x0, xmin, tol);
    const double c2 = gap_hi <= 0.0 ? xR : bisect(gap, xmin, xR, tol);
    return (c1 - x0) + (xR - c2);
}

template <class G>
    requires std::invocable<const G&, double>
double slice_length(const G& g, SliceQuery q, double tol = 1e-12) {
    return slice_measure_fn(g, q.alpha, q.x0, tol) * std::sqrt(1.0 + q.alpha * q.alpha);
}

namespace detail {

template <class T>
void require_increasing_grid(const std::vector<T>& anchors, const char* who) {
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
        if (!(anchors[i] < anchors[i + 1]))
            throw std::invalid_argument(std::string(who) + ": anchor grid must be strictly increasing");
}

} // namespace detail

// Discrete geometric shake of the region {|x| <= y <= g}: every slope-alpha
// slice slides along (1, alpha) until it touches y = -x. The far endpoints
// trace the shaken boundary; an endpoint already covered by the reach of an
// earlier (higher) slice lies strictly below that slice's segment and is
// dropped, which also resolves equal-abscissa ties towards the larger y.
// Exact rational arithmetic throughout.
inline PiecewiseLinear discrete_shake(const PiecewiseLinear& g, const Rational& alpha,
                                      const std::vector<Rational>& anchors) {
    require_slope(alpha);
    detail::require_increasing_grid(anchors, "discrete_shake");
    std::vector<PiecewiseLinear::Point> pts;
    Rational reach;
    bool any = false;
    for (const Rational& x0 : anchors) {
        const Rational m = slice_measure(g, alpha, x0);
        if (m <= 0) continue;
        const Rational ex = x0 + m;
        const Rational ey = -x0 + alpha * m;
        if (any && !(ex > reach)) continue;   // below an earlier slice
        if (!any) pts.emplace_back(x0, -x0);  // open the rim on y = -x
        pts.emplace_back(ex, ey);
        reach = ex;
        any = true;
    }
    if (!any) return PiecewiseLinear();
    const auto& [ex, ey] = pts.back();
    if (ey > ex) pts.emplace_back(ey, ey);    // close the rim onto y = x
    return PiecewiseLinear(std::move(pts));
}

// Convenience grid: anchors from -(top of the curve), below which every slice
// is empty, up to 0 in steps of grid_step.
inline PiecewiseLinear discrete_shake(const PiecewiseLinear& g, const Rational& alpha,
                                      const Rational& grid_step) {
    if (!(grid_step > 0)) throw std::invalid_argument("discrete_shake: grid step must be positive");
    std::vector<Rational> anchors;
    for (Rational x0 = -g.max_height(); x0 < 0; x0 += grid_step) anchors.push_back(x0);
    return discrete_shake(g, alpha, anchors);
}

// Same shake for a numeric convex boundary; endpoints are embedded exactly
// into rationals at the end.
template <class G>
    requires std::invocable<const G&, double>
PiecewiseLinear discrete_shake_fn(const G& g, double alpha, const std::vector<double>& anchors,
                                  double tol = 1e-12) {
    require_slope(alpha);
    detail::require_increasing_grid(anchors, "discrete_shake_fn");
    std::vector<PiecewiseLinear::Point> pts;
    double reach = 0;
    bool any = false;
    for (double x0 : anchors) {
        const double m = slice_measure_fn(g, alpha, x0, tol);
        if (m <= 0) continue;
        const double ex = x0 + m;
        const double ey = -x0 + alpha * m;
        if (any && !(ex > reach + 1e-12)) continue;
        if (!any) pts.emplace_back(Rational(x0), Rational(-x0));
        pts.emplace_back(Rational(ex), Rational(ey));
        reach = ex;
        any = true;
    }
    if (!any) return PiecewiseLinear();
    auto& [ex, ey] = pts.back();
    if (ey > ex)
        pts.emplace_back(ey, ey);
    else if (ey < ex)
        ey = ex;   // numeric noise on a full slice; snap onto y = x
    return PiecewiseLinear(std::move(pts));
}

// Convenience grid over [lo_anchor, 0); lo_anchor should be -(max of g),
// e.g. -a for a shape of radius a.
template <class G>
    requires std::invocable<const G&, double>
PiecewiseLinear discrete_shake_fn(const G& g, double lo_anchor, double alpha, double grid_step,
                                  double tol = 1e-12) {
    if (!(grid_step > 0)) throw std::invalid_argument("discrete_shake_fn: grid step must be positive");
    std::vector<double> anchors;
    for (double x0 = lo_anchor; x0 < 0; x0 += grid_step) anchors.push_back(x0);
    return discrete_shake_fn(g, alpha, anchors, tol);
}

struct Flattening {
    PiecewiseLinear curve;
    std::vector<Rational> meets;   // meeting abscissae, by increasing corner
};

namespace detail {

inline void require_regular_profile(const Profile& p, const Corners& c, long long e) {
    for (std::size_t m = 0; m < c.outer.size(); ++m)
        if (c.outer[m] - c.inner[m] > e - 1)
            throw std::invalid_argument("flattening requires an e-regular profile");
}

} // namespace detail

// Outer flattening: from each outer corner follow the slope-alpha_e line
// leftward until it first meets the current curve (a tangential touch counts)
// and replace the stretch in between. Satisfies 0 <= curve - omega <= e and
// equals |x| outside (i_1 - 1, i_{r+1}).
inline Flattening flatten_outer(const Profile& p, long long e) {
    const Rational alpha = alpha_rational(e);
    const Corners cor = p.corners();
    detail::require_regular_profile(p, cor, e);
    auto pts = PiecewiseLinear::from_profile(p).points();
    std::vector<Rational> meets;
    for (long long c : cor.outer) {
        const Rational xc(c), yc(p.eval_int(c));
        auto line_at = [&](const Rational& x) { return yc + alpha * (x - xc); };
        std::size_t ci = 0;
        while (pts[ci].first != xc) ++ci;
        Rational xm, ym;
        bool found = false;
        // walk vertices leftward; the segment left of an outer corner has
        // slope +1, so the line starts strictly above the curve
        for (std::size_t j = ci; j-- > 0;) {
            const Rational d = line_at(pts[j].first) - pts[j].second;
            if (d > 0) continue;
            if (d == 0) {
                xm = pts[j].first;
                ym = pts[j].second;
            } else {
                const Rational d2 = line_at(pts[j + 1].first) - pts[j + 1].second;
                assert(d2 > 0);
                xm = pts[j].first + (pts[j + 1].first - pts[j].first) * d / (d - d2);
                ym = line_at(xm);
            }
            found = true;
            break;
        }
        if (!found) {   // meet the left branch of |x|
            xm = (alpha * xc - yc) / (1 + alpha);
            ym = -xm;
            assert(xm < pts.front().first);
        }
        std::vector<PiecewiseLinear::Point> next;
        for (const auto& pt : pts)
            if (pt.first < xm) next.push_back(pt);
        next.emplace_back(xm, ym);
        for (const auto& pt : pts)
            if (pt.first >= xc) next.push_back(pt);
        pts = std::move(next);
        meets.push_back(xm);
    }
    return {PiecewiseLinear(std::move(pts)), std::move(meets)};
}

// Inner flattening: from each inner corner (the rightmost first, skipping
// i_{r+1}) follow the slope-alpha_e line rightward to its first meeting with
// the current curve. Satisfies -e <= curve - omega <= 0.
inline Flattening flatten_inner(const Profile& p, long long e) {
    const Rational alpha = alpha_rational(e);
    const Corners cor = p.corners();
    detail::require_regular_profile(p, cor, e);
    auto pts = PiecewiseLinear::from_profile(p).points();
    std::vector<Rational> meets(cor.outer.size());
    for (std::size_t k = cor.outer.size(); k-- > 0;) {
        const long long c = cor.inner[k];
        const Rational xc(c), yc(p.eval_int(c));
        auto line_at = [&](const Rational& x) { return yc + alpha * (x - xc); };
        std::size_t ci = 0;
        while (pts[ci].first != xc) ++ci;
        Rational xm, ym;
        bool found = false;
        // the segment right of an inner corner has slope +1 > alpha, so the
        // line starts strictly below the curve
        for (std::size_t j = ci + 1; j < pts.size(); ++j) {
            const Rational d = line_at(pts[j].first) - pts[j].second;
            if (d < 0) continue;
            if (d == 0) {
                xm = pts[j].first;
                ym = pts[j].second;
            } else {
                const Rational d1 = line_at(pts[j - 1].first) - pts[j - 1].second;
                assert(d1 < 0);
                xm = pts[j - 1].first + (pts[j].first - pts[j - 1].first) * d1 / (d1 - d);
                ym = line_at(xm);
            }
            found = true;
            break;
        }
        if (!found) {   // meet the right branch of |x|
            xm = (yc - alpha * xc) / (1 - alpha);
            ym = xm;
            assert(xm > pts.back().first);
        }
        std::vector<PiecewiseLinear::Point> next;
        for (const auto& pt : pts)
            if (pt.first <= xc) next.push_back(pt);
        next.emplace_back(xm, ym);
        for (const auto& pt : pts)
            if (pt.first > xm) next.push_back(pt);
        pts = std::move(next);
        meets[k] = xm;
    }
    return {PiecewiseLinear(std::move(pts)), std::move(meets)};
}

struct ShakeReport {
    bool pass = false;
    double worst_abs_discrepancy = 0;
    long long n_anchors = 0;
};

// A partition and its e-regularisation have the same ladder counts and, box
// by box along every slope-alpha_e line, slices of equal length. Checked
// exactly on a grid of anchors; worst discrepancy is reported in Euclidean
// length.
inline ShakeReport shake_equivalence_check(const Partition& p, long long e,
                                           const Rational& grid_step) {
    require_ladder_order(e);
    if (!(grid_step > 0))
        throw std::invalid_argument("shake_equivalence_check: grid step must be positive");
    const Partition reg = regularise(p, e);
    const PiecewiseLinear a = PiecewiseLinear::from_profile(Profile::of(p));
    const PiecewiseLinear b = PiecewiseLinear::from_profile(Profile::of(reg));
    const Rational alpha = alpha_rational(e);
    ShakeReport rep;
    rep.pass = ladder_counts(p, e) == ladder_counts(reg, e);
    const Rational top = std::max(a.max_height(), b.max_height());
    Rational worst = 0;
    for (Rational x0 = -top; x0 < 0; x0 += grid_step) {
        const Rational d = rational_abs(slice_measure(a, alpha, x0) - slice_measure(b, alpha, x0));
        if (d > worst) worst = d;
        ++rep.n_anchors;
    }
    const double aa = to_double(alpha);
    rep.worst_abs_discrepancy = to_double(worst) * std::sqrt(1.0 + aa * aa);
    rep.pass = rep.pass && rep.worst_abs_discrepancy <= 1e-9;
    return rep;
}

} // namespace regshake
