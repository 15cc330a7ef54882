#ifndef FRACSPEC_FORMAT_HPP
#define FRACSPEC_FORMAT_HPP

#include <string>

namespace fracspec {

/// Shortest decimal form that round-trips to the same double.
std::string fmt_shortest(double v);

/// Scientific notation with 3 significant digits, paper-table style: 1.05E-04.
std::string fmt_sci3(double v);

/// Fixed-point with the given number of decimals.
std::string fmt_fixed(double v, int decimals);

}  // namespace fracspec

#endif
