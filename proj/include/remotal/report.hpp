#ifndef REMOTAL_REPORT_HPP
#define REMOTAL_REPORT_HPP

#include <string>

namespace remotal {

/// Shortest round-trip decimal form of a double, locale-independent
/// ('.' separator always). Integral values print without an exponent where
/// possible ("2" not "2.0").
std::string format_double(double value);

}  // namespace remotal

#endif  // REMOTAL_REPORT_HPP
