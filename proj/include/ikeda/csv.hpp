#ifndef IKEDA_CSV_HPP
#define IKEDA_CSV_HPP

#include <cstdio>
#include <string>

namespace ikeda {

/// Shortest representation that round-trips a double (17 significant
/// digits); keeps CSV output byte-stable across reruns.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace ikeda

#endif
