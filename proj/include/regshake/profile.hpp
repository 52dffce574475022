#pragma once

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "format.hpp"
#include "partition.hpp"

namespace regshake {

// Inner corners are the local minima of the profile (where new boxes could be
// added), outer corners the local maxima (boxes that could be removed). For a
// nonempty diagram with r distinct parts: r+1 inner, r outer, interleaved
// i_1 < c_1 < i_2 < ... < c_r < i_{r+1}.
struct Corners {
    std::vector<long long> inner;
    std::vector<long long> outer;
};

// Boundary profile of a partition in Russian convention: the box in row a,
// column b is the unit-diagonal square with top vertex (a-b, a+b). The
// profile omega is a 1-Lipschitz path with slopes +-1, equal to |x| outside
// [-lambda_1, #parts], and the area between omega and |x| is exactly 2n.
class Profile {
public:
    static Profile of(const Partition& p) {
        Profile prof;
        prof.n_ = p.size();
        const auto& parts = p.parts();
        if (parts.empty()) {
            prof.left_ = 0;
            prof.heights_ = {0};
            return prof;
        }
        prof.left_ = -parts[0];
        prof.heights_.push_back(parts[0]);
        // walk distinct parts from the largest: up one step per repeat of the
        // part, then down by the drop to the next distinct part (0 at the end)
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            for (std::size_t k = i; k < j; ++k)
                prof.heights_.push_back(prof.heights_.back() + 1);
            const long long next = j < parts.size() ? parts[j] : 0;
            for (long long d = 0; d < parts[i] - next; ++d)
                prof.heights_.push_back(prof.heights_.back() - 1);
            i = j;
        }
        assert(prof.right() == static_cast<long long>(parts.size()));
        assert(prof.heights_.back() == static_cast<long long>(parts.size()));
        assert(prof.excess_area_doubled() == 4 * prof.n_);
        return prof;
    }

    long long boxes() const { return n_; }
    long long left() const { return left_; }    // = -lambda_1
    long long right() const { return left_ + static_cast<long long>(heights_.size()) - 1; }

    // omega at an integer abscissa
    long long eval_int(long long k) const {
        if (k < left_ || k > right()) return std::llabs(k);
        return heights_[static_cast<std::size_t>(k - left_)];
    }

    // omega(x); equals |x| outside the path
    double eval(double x) const {
        if (x <= static_cast<double>(left_) || x >= static_cast<double>(right()))
            return std::abs(x);
        const double fk = std::floor(x);
        const long long k = static_cast<long long>(fk);
        const long long v0 = eval_int(k);
        const long long v1 = eval_int(k + 1);
        return static_cast<double>(v0) + (x - fk) * static_cast<double>(v1 - v0);
    }

    // rescaled profile omega(s sqrt n)/sqrt n; |s| for the empty partition
    double rescaled(double s) const {
        if (n_ == 0) return std::abs(s);
        const double rt = std::sqrt(static_cast<double>(n_));
        return eval(s * rt) / rt;
    }

    Corners corners() const {
        Corners c;
        // slope is -1 left of the path and +1 right of it, so scan the
        // extended slope sequence for sign flips
        int prev = -1;
        for (long long k = left_; k <= right() + 1; ++k) {
            const int next = k <= right() - 1
                ? static_cast<int>(heights_[static_cast<std::size_t>(k + 1 - left_)] -
                                   heights_[static_cast<std::size_t>(k - left_)])
                : +1;
            if (prev < 0 && next > 0) c.inner.push_back(k);
            if (prev > 0 && next < 0) c.outer.push_back(k);
            prev = next;
        }
        return c;
    }

    // open interval where omega differs from |x|; empty diagram has none
    std::optional<std::pair<long long, long long>> support() const {
        if (n_ == 0) return std::nullopt;
        return std::make_pair(left_, right());
    }

    // sum over unit cells of (omega(k)+omega(k+1)-|k|-|k+1|); equals 4n exactly
    long long excess_area_doubled() const {
        long long total = 0;
        for (long long k = left_; k < right(); ++k)
            total += eval_int(k) + eval_int(k + 1) - std::llabs(k) - std::llabs(k + 1);
        return total;
    }

private:
    long long n_ = 0;
    long long left_ = 0;
    std::vector<long long> heights_;   // omega at integers left_..right_
};

// Max of |rescaled profile - g| over the rescaled breakpoints inside the
// window plus a uniform grid. g must be 1-Lipschitz for the sampling to be
// faithful; the true sup can exceed the result by at most 2*grid_step.
template <class G>
double sup_distance(const Profile& p, G&& g, double window_lo, double window_hi,
                    double grid_step) {
    if (!(window_lo < window_hi) || !(grid_step > 0))
        throw std::invalid_argument("sup_distance: bad window or grid step");
    double worst = 0.0;
    auto probe = [&](double s) {
        const double d = std::abs(p.rescaled(s) - g(s));
        if (d > worst) worst = d;
    };
    const double rt = p.boxes() > 0 ? std::sqrt(static_cast<double>(p.boxes())) : 1.0;
    for (long long k = p.left(); k <= p.right(); ++k) {
        const double s = static_cast<double>(k) / rt;
        if (s >= window_lo && s <= window_hi) probe(s);
    }
    const long long steps = static_cast<long long>((window_hi - window_lo) / grid_step);
    for (long long i = 0; i <= steps; ++i) probe(window_lo + static_cast<double>(i) * grid_step);
    probe(window_hi);
    return worst;
}

// Breakpoint CSV. Header "x,omega"; rescaled export appends a constant n
// column ("x,omega,n") so the scale travels with the file.
inline void profile_to_csv(const Profile& p, std::ostream& out, bool rescaled = false) {
    out << (rescaled ? "x,omega,n\n" : "x,omega\n");
    const double rt = p.boxes() > 0 ? std::sqrt(static_cast<double>(p.boxes())) : 1.0;
    for (long long k = p.left(); k <= p.right(); ++k) {
        if (rescaled) {
            const double s = static_cast<double>(k) / rt;
            out << fmt12(s) << ',' << fmt12(p.rescaled(s)) << ',' << p.boxes() << '\n';
        } else {
            out << k << ',' << p.eval_int(k) << '\n';
        }
    }
}

} // namespace regshake
