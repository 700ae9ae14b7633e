#include "circdiv/numfmt.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "circdiv/errors.hpp"

namespace circdiv {

namespace {

constexpr std::array<std::uint64_t, 16> kPow10 = {
    1ULL,
    10ULL,
    100ULL,
    1000ULL,
    10000ULL,
    100000ULL,
    1000000ULL,
    10000000ULL,
    100000000ULL,
    1000000000ULL,
    10000000000ULL,
    100000000000ULL,
    1000000000000ULL,
    10000000000000ULL,
    100000000000000ULL,
    1000000000000000ULL,
};

void check_args(double value, int decimals) {
  if (decimals < 0 || decimals > 15) throw DomainError("decimals must be in [0, 15]");
  if (!std::isfinite(value)) throw DomainError("cannot format a non-finite number");
}

}  // namespace

double round_half_away(double value, int decimals) {
  check_args(value, decimals);
  const double scale = static_cast<double>(kPow10[decimals]);
  return std::copysign(std::round(std::abs(value) * scale) / scale, value);
}

std::string format_fixed(double value, int decimals) {
  check_args(value, decimals);
  const double scaled = std::round(std::abs(value) * static_cast<double>(kPow10[decimals]));
  if (scaled >= 9007199254740992.0) {
    // beyond 2^53 every double is an integer; printf is exact there
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
  }
  const auto units = static_cast<std::uint64_t>(scaled);
  const std::uint64_t whole = units / kPow10[decimals];
  const std::uint64_t frac = units % kPow10[decimals];
  std::string out = (value < 0 && units != 0) ? "-" : "";
  out += std::to_string(whole);
  if (decimals > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace circdiv
