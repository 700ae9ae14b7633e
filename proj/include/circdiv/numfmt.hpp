#ifndef CIRCDIV_NUMFMT_HPP
#define CIRCDIV_NUMFMT_HPP

#include <string>

namespace circdiv {

/// Round half away from zero to `decimals` fraction digits.
double round_half_away(double value, int decimals);

/// Exactly `decimals` fraction digits, half away from zero, '.' separator,
/// never "-0". Independent of the process locale.
std::string format_fixed(double value, int decimals);

/// 17 significant digits, shortest %g form; round-trips every double.
std::string format_g17(double value);

}  // namespace circdiv

#endif  // CIRCDIV_NUMFMT_HPP
