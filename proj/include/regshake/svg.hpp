#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "profile.hpp"

namespace regshake {

namespace detail {

class SvgCanvas {
  public:
    SvgCanvas(double x_lo, double x_hi, double y_hi, int width, int height)
        : x_lo_(x_lo), x_hi_(x_hi), y_hi_(y_hi), width_(width), height_(height) {}

    int width() const { return width_; }
    int height() const { return height_; }

    std::string map(double x, double y) const {
        const double px = pad_ + (x - x_lo_) / (x_hi_ - x_lo_) * (width_ - 2 * pad_);
        const double py = height_ - pad_ - y / y_hi_ * (height_ - 2 * pad_);
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", px, py);
        return buf;
    }

    template <class G>
    void polyline(std::ostream& os, G&& g, const char* colour, double width, int steps,
                  const char* dash = nullptr) const {
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width
           << "\"";
        if (dash) os << " stroke-dasharray=\"" << dash << "\"";
        os << " points=\"";
        for (int i = 0; i <= steps; ++i) {
            const double x = x_lo_ + (x_hi_ - x_lo_) * i / steps;
            const double y = std::clamp(g(x), 0.0, y_hi_);
            os << map(x, y) << (i == steps ? "" : " ");
        }
        os << "\"/>\n";
    }

  private:
    double x_lo_, x_hi_, y_hi_;
    int width_, height_;
    static constexpr double pad_ = 34;
};

} // namespace detail

// Overlay of a rescaled diagram boundary (black) with a plain limit curve
// (red) and its shaken counterpart (green), over the |x| floor.
template <class F1, class F2>
void write_figure_svg(std::ostream& os, const Profile& prof, F1&& plain, F2&& shaken_curve,
                      double x_lo = -2.6, double x_hi = 2.6, double y_hi = 2.6) {
    detail::SvgCanvas c(x_lo, x_hi, y_hi, 760, 560);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\""
       << c.height() << "\" viewBox=\"0 0 " << c.width() << " " << c.height() << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const int fine = static_cast<int>((x_hi - x_lo) / 1e-3);   // limit curves on a 1e-3 grid
    c.polyline(os, [](double x) { return std::abs(x); }, "#bbbbbb", 1.0, 400, "5,4");
    c.polyline(os, plain, "#cc2222", 1.4, fine);
    c.polyline(os, shaken_curve, "#118822", 1.4, fine);
    c.polyline(os, [&](double s) { return prof.rescaled(s); }, "#000000", 1.1, 2000);
    os << "<text x=\"40\" y=\"24\" font-family=\"sans-serif\" font-size=\"13\">"
       << "black: sampled boundary, red: plain limit, green: shaken limit</text>\n"
       << "</svg>\n";
}

} // namespace regshake
