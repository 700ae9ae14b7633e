#ifndef CIRCDIV_CONSTRUCTIBILITY_HPP
#define CIRCDIV_CONSTRUCTIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circdiv {

/// Largest n accepted by check(); factorization is by trial division.
inline constexpr std::uint64_t kMaxConstructibilityN = std::uint64_t{1} << 32;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// An odd prime p with p - 1 a power of two, i.e. 2^(2^m) + 1.
bool is_fermat_prime(std::uint64_t p);

struct Obstruction {
  enum class Kind { repeated_prime, non_fermat_prime };
  Kind kind;
  std::uint64_t prime;
  int exponent;
};

struct ConstructibilityVerdict {
  std::uint64_t n = 0;
  bool constructible = false;
  int power_of_two = 0;
  std::vector<std::uint64_t> odd_primes;  // distinct, ascending
  std::optional<Obstruction> obstruction;

  /// "60: constructible (60 = 2^2 * 3 * 5)" or "9: NOT constructible (3 appears twice)".
  std::string describe() const;
};

/// Regular n-gon constructibility. Throws DomainError for n < 3 and Overflow
/// above kMaxConstructibilityN.
ConstructibilityVerdict check(std::uint64_t n);

std::vector<std::uint64_t> constructible_up_to(std::uint64_t limit);

}  // namespace circdiv

#endif  // CIRCDIV_CONSTRUCTIBILITY_HPP
