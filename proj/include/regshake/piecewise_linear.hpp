#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "format.hpp"
#include "profile.hpp"
#include "rational.hpp"

namespace regshake {

// Piecewise linear curve with exact rational breakpoints, extended by |x|
// outside its breakpoint span. First and last breakpoints lie on y = |x| so
// the extension is continuous. A single breakpoint (0,0) represents |x|.
class PiecewiseLinear {
public:
    using Point = std::pair<Rational, Rational>;

    PiecewiseLinear() : pts_{{Rational(0), Rational(0)}} {}

    explicit PiecewiseLinear(std::vector<Point> pts) : pts_(std::move(pts)) {
        if (pts_.empty())
            throw std::invalid_argument("PiecewiseLinear: needs at least one breakpoint");
        for (std::size_t i = 1; i < pts_.size(); ++i)
            if (!(pts_[i - 1].first < pts_[i].first))
                throw std::invalid_argument("PiecewiseLinear: breakpoints must increase in x");
        if (pts_.front().second != rational_abs(pts_.front().first) ||
            pts_.back().second != rational_abs(pts_.back().first))
            throw std::invalid_argument("PiecewiseLinear: end breakpoints must lie on y = |x|");
    }

    const std::vector<Point>& points() const { return pts_; }

    Rational eval(const Rational& x) const {
        if (x <= pts_.front().first || x >= pts_.back().first) return rational_abs(x);
        // rightmost breakpoint with x_i <= x
        std::size_t lo = 0, hi = pts_.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (pts_[mid].first <= x) lo = mid; else hi = mid;
        }
        const auto& [x0, y0] = pts_[lo];
        const auto& [x1, y1] = pts_[lo + 1];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }

    double eval(double x) const { return to_double(eval(Rational(x))); }

    Rational max_height() const {
        Rational m = pts_.front().second;
        for (const auto& [x, y] : pts_)
            if (y > m) m = y;
        return m;
    }

    static PiecewiseLinear from_profile(const Profile& p) {
        std::vector<Point> pts;
        for (long long k = p.left(); k <= p.right(); ++k)
            pts.emplace_back(Rational(k), Rational(p.eval_int(k)));
        return PiecewiseLinear(std::move(pts));
    }

    // "x,y" rows, one per breakpoint, 12 significant digits
    void to_csv(std::ostream& out) const {
        out << "x,y\n";
        for (const auto& [x, y] : pts_)
            out << fmt12(to_double(x)) << ',' << fmt12(to_double(y)) << '\n';
    }

private:
    std::vector<Point> pts_;
};

} // namespace regshake
