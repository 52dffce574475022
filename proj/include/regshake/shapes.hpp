#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <vector>

namespace regshake {

inline constexpr double kPi = 3.14159265358979323846;

// Continual diagram shapes: even C^1 functions equal to |x| for |x| >= a and
// strictly convex inside. The whole calculus below is generic over this.
template <class F>
concept ShapeFunction = requires(const F f, double x) {
    { f.radius() } -> std::convertible_to<double>;
    { f.value(x) } -> std::convertible_to<double>;
    { f.derivative(x) } -> std::convertible_to<double>;
};

// Shapes may expose a closed-form inverse of the derivative on [0, a); when
// present it is preferred and cross-checked against the bisection root.
template <class F>
concept HasDerivativeInverse = requires(const F f, double s) {
    { f.derivative_inverse(s) } -> std::convertible_to<double>;
};

// Plancherel limit shape (Vershik-Kerov, Logan-Shepp).
struct Omega {
    double radius() const { return 2.0; }
    double value(double s) const {
        if (std::abs(s) >= 2.0) return std::abs(s);
        const double half = std::clamp(s / 2.0, -1.0, 1.0);
        return (2.0 / kPi) * (s * std::asin(half) + std::sqrt(std::max(0.0, 4.0 - s * s)));
    }
    double derivative(double s) const {
        if (s <= -2.0) return -1.0;
        if (s >= 2.0) return 1.0;
        return (2.0 / kPi) * std::asin(std::clamp(s / 2.0, -1.0, 1.0));
    }
    double derivative_inverse(double slope) const { return 2.0 * std::sin(kPi * slope / 2.0); }
};

// Parabolic example shape: (s^2 + 1)/2 inside [-1, 1].
struct Sigma {
    double radius() const { return 1.0; }
    double value(double s) const {
        return std::abs(s) >= 1.0 ? std::abs(s) : 0.5 * (s * s + 1.0);
    }
    double derivative(double s) const { return std::clamp(s, -1.0, 1.0); }
    double derivative_inverse(double slope) const { return slope; }
};

// f^{+eps} and f^{-eps}: theta f(s/theta) with theta = 1 +- eps/2. Same class,
// radius theta a, and f^{-eps} <= f <= f^{+eps} with sup distance (eps/2) f(0).
template <ShapeFunction F>
struct Scaled {
    F base;
    double factor;

    double radius() const { return factor * base.radius(); }
    double value(double s) const { return factor * base.value(s / factor); }
    double derivative(double s) const { return base.derivative(s / factor); }
    double derivative_inverse(double slope) const
        requires HasDerivativeInverse<F>
    {
        return factor * base.derivative_inverse(slope);
    }
};

template <ShapeFunction F>
Scaled<F> scaled(F f, double eps, int sign) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("scaled: eps must lie in (0,1)");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("scaled: sign must be +1 or -1");
    return Scaled<F>{std::move(f), 1.0 + 0.5 * static_cast<double>(sign) * eps};
}

inline void require_slope(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("slope alpha must lie in [0,1)");
}

// ladder slope for e-regularisation: 1 - 2/e
inline double alpha_for(long long e) {
    if (e < 2) throw std::invalid_argument("alpha_for: e must be at least 2");
    return 1.0 - 2.0 / static_cast<double>(e);
}

// Bracketed bisection; g(lo) and g(hi) must straddle a root (either may be
// zero). Returns the midpoint of the final bracket of width <= tol.
template <class G>
double bisect(G&& g, double lo, double hi, double tol) {
    double glo = g(lo);
    if (glo == 0.0) return lo;
    double ghi = g(hi);
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0))
        throw std::logic_error("bisect: endpoints do not straddle a root");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;   // double resolution exhausted
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// F_alpha(x) = f(x) - alpha x: decreasing to its minimum at x_alpha^+, then
// increasing, linear of slope 1-alpha beyond a.
template <ShapeFunction F>
double big_F(const F& f, double alpha, double x) {
    require_slope(alpha);
    return f.value(x) - alpha * x;
}

// Unique x in [0, a) with f'(x) = alpha. Uses the analytic inverse when the
// shape provides one; the bisection root must then agree within tol.
template <ShapeFunction F>
double x_alpha_plus(const F& f, double alpha, double tol = 1e-12) {
    require_slope(alpha);
    const double a = f.radius();
    const double numeric =
        bisect([&](double x) { return f.derivative(x) - alpha; }, 0.0, a, tol);
    if constexpr (HasDerivativeInverse<F>) {
        const double analytic = f.derivative_inverse(alpha);
        assert(std::abs(analytic - numeric) <= std::max(tol, 1e-12) &&
               "analytic and bisection roots of f' = alpha disagree");
        return analytic;
    }
    return numeric;
}

// Anchor on y = -x of the slope-alpha line through (p, f(p)).
template <ShapeFunction F>
double line_anchor(const F& f, double alpha, double p) {
    require_slope(alpha);
    return (alpha * p - f.value(p)) / (alpha + 1.0);
}

struct ShakeLandmarks {
    double alpha = 0;
    double a = 0;        // support radius of the base shape
    double x_minus = 0;  // below it the shake acts as the identity on f
    double x_plus = 0;   // minimiser of F_alpha
    double s_alpha = 0;  // right support endpoint of the shaken shape
    double u_alpha = 0;  // where the shaken curve crosses the base curve
};

// The shake Sh_alpha f, with every landmark precomputed by bracketed
// bisection to tol. Immutable after construction, safe to share across
// threads. The optional tau table trades ~1e-8 accuracy for batch speed;
// correctness is defined by the uncached path.
template <ShapeFunction F>
class Shaken {
public:
    explicit Shaken(F f, double alpha, double tol = 1e-12, bool cache_tau = false)
        : f_(std::move(f)), alpha_(alpha), tol_(tol) {
        require_slope(alpha);
        if (!(tol > 0)) throw std::invalid_argument("Shaken: tol must be positive");
        const double a = f_.radius();
        x_plus_ = x_alpha_plus(f_, alpha_, tol_);
        big_F_min_ = big_F_raw(x_plus_);
        s_alpha_ = big_F_min_ / (1.0 - alpha_);
        // F_alpha(x) = (1-alpha) a on the decreasing branch; at alpha = 0 the
        // root sits exactly at -a
        const double g_lo = big_F_raw(-a) - (1.0 - alpha_) * a;
        x_minus_ = g_lo <= 0.0
            ? -a
            : bisect([&](double x) { return big_F_raw(x) - (1.0 - alpha_) * a; },
                     -a, x_plus_, tol_);
        if (cache_tau) build_cache();
        u_cross_ = bisect([&](double u) { return phi(tau(u)) - u; },
                          x_minus_, s_alpha_, tol_);
    }

    const F& base() const { return f_; }
    double alpha() const { return alpha_; }
    double tol() const { return tol_; }
    double radius() const { return f_.radius(); }
    double x_plus() const { return x_plus_; }
    double x_minus() const { return x_minus_; }
    double s_alpha() const { return s_alpha_; }
    double crossing_point() const { return u_cross_; }

    ShakeLandmarks landmarks() const {
        return {alpha_, f_.radius(), x_minus_, x_plus_, s_alpha_, u_cross_};
    }

    double big_F(double x) const { return big_F_raw(x); }

    // Inverse of F_alpha on the increasing branch [x_alpha^+, inf).
    double big_F_inverse(double y) const {
        if (y < big_F_min_ - 1e-9)
            throw std::invalid_argument("big_F_inverse: y below the minimum of F_alpha");
        y = std::max(y, big_F_min_);
        const double a = f_.radius();
        const double linear_from = (1.0 - alpha_) * a;   // F_alpha(x) = (1-alpha) x past a
        if (y >= linear_from) return y / (1.0 - alpha_);
        return bisect([&](double x) { return big_F_raw(x) - y; }, x_plus_, a, tol_);
    }

    // Chord partner: phi(s) is the other abscissa where F_alpha takes the
    // value F_alpha(s); the chord of f from s to phi(s) has slope alpha.
    double phi(double s) const {
        if (s >= x_plus_) return s;
        return big_F_inverse(big_F_raw(s));
    }

    // Shift needed at x: zero up to x_alpha^-, then increasing.
    double delta(double x) const {
        if (x > x_plus_)
            throw std::invalid_argument("delta: x beyond x_alpha^+");
        if (x <= x_minus_) return 0.0;
        return big_F_raw(x) / (1.0 - alpha_) - phi(x);
    }

    // Inverse of x -> x + delta(x); defined up to s_alpha.
    double tau(double y) const {
        if (y > s_alpha_ + tol_)
            throw std::invalid_argument("tau: y beyond s_alpha");
        y = std::min(y, s_alpha_);
        if (y <= x_minus_) return y;
        if (!cache_x_.empty()) return tau_cached(y);
        return bisect([&](double x) { return x + delta(x) - y; }, x_minus_, x_plus_, tol_);
    }

    // Sh_alpha f: alpha y + F_alpha(tau(y)) up to s_alpha, the identity past
    // it. Coincides with f below x_alpha^-, hence with |y| below -a.
    double eval(double y) const {
        if (y > s_alpha_) return y;
        if (y <= x_minus_) return f_.value(y);
        return alpha_ * y + big_F_raw(tau(y));
    }

private:
    double big_F_raw(double x) const { return f_.value(x) - alpha_ * x; }

    void build_cache() {
        const int knots = 10000;
        cache_x_.resize(knots + 1);
        cache_y_.resize(knots + 1);
        const double w = (x_plus_ - x_minus_) / knots;
        for (int i = 0; i <= knots; ++i) {
            const double x = i == knots ? x_plus_ : x_minus_ + i * w;
            cache_x_[i] = x;
            cache_y_[i] = x + delta(x);
        }
    }

    // Locate the bracketing knots, then refine by a short bisection inside
    // the segment. Error is bounded by the final bracket, about 1e-8.
    double tau_cached(double y) const {
        const auto it = std::lower_bound(cache_y_.begin(), cache_y_.end(), y);
        if (it == cache_y_.begin()) return cache_x_.front();
        if (it == cache_y_.end()) return cache_x_.back();
        const std::size_t hi = static_cast<std::size_t>(it - cache_y_.begin());
        double xlo = cache_x_[hi - 1], xhi = cache_x_[hi];
        for (int iter = 0; iter < 16 && xhi - xlo > tol_; ++iter) {
            const double mid = 0.5 * (xlo + xhi);
            if (mid + delta(mid) < y) xlo = mid; else xhi = mid;
        }
        return 0.5 * (xlo + xhi);
    }

    F f_;
    double alpha_, tol_;
    double x_plus_ = 0, x_minus_ = 0, s_alpha_ = 0, big_F_min_ = 0, u_cross_ = 0;
    std::vector<double> cache_x_, cache_y_;
};

template <ShapeFunction F>
Shaken<F> shake(F f, double alpha, double tol = 1e-12, bool cache_tau = false) {
    return Shaken<F>(std::move(f), alpha, tol, cache_tau);
}

// Closed form for the right support endpoint of Sh_{alpha_e} Omega.
inline double s_alpha_closed_form(long long e) {
    if (e < 2) throw std::invalid_argument("s_alpha_closed_form: e must be at least 2");
    return (2.0 * static_cast<double>(e) / kPi) * std::sin(kPi / static_cast<double>(e));
}

} // namespace regshake
