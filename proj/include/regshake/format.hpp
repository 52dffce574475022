#pragma once

#include <cstdio>
#include <string>

namespace regshake {

// Fixed float formatting for all exported files: 12 significant digits,
// locale independent, so identical configs reproduce byte-identical output.
inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace regshake
