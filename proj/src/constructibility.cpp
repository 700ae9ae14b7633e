#include "circdiv/constructibility.hpp"

#include <bit>
#include <string>

#include "circdiv/errors.hpp"

namespace circdiv {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a complete witness set below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_fermat_prime(u64 p) {
  // p - 1 a power of two forces p - 1 = 2^(2^m) for any odd prime p.
  return p > 2 && std::has_single_bit(p - 1) && is_prime(p);
}

ConstructibilityVerdict check(u64 n) {
  if (n < 3) throw DomainError("n must be at least 3, got " + std::to_string(n));
  if (n > kMaxConstructibilityN) {
    throw Overflow("n = " + std::to_string(n) + " exceeds the supported limit 2^32");
  }
  ConstructibilityVerdict v;
  v.n = n;
  v.power_of_two = std::countr_zero(n);
  u64 rest = n >> v.power_of_two;
  auto take = [&v](u64 p, int exponent) {
    v.odd_primes.push_back(p);
    if (v.obstruction) return;
    if (!is_fermat_prime(p)) {
      v.obstruction = Obstruction{Obstruction::Kind::non_fermat_prime, p, exponent};
    } else if (exponent > 1) {
      v.obstruction = Obstruction{Obstruction::Kind::repeated_prime, p, exponent};
    }
  };
  for (u64 p = 3; p * p <= rest; p += 2) {
    int exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    if (exponent) take(p, exponent);
  }
  if (rest > 1) take(rest, 1);
  v.constructible = !v.obstruction;
  return v;
}

std::vector<u64> constructible_up_to(u64 limit) {
  if (limit < 3) throw DomainError("limit must be at least 3");
  if (limit > kMaxConstructibilityN) throw Overflow("limit exceeds the supported limit 2^32");
  std::vector<u64> out;
  for (u64 n = 3; n <= limit; ++n) {
    if (check(n).constructible) out.push_back(n);
  }
  return out;
}

std::string ConstructibilityVerdict::describe() const {
  std::string out = std::to_string(n) + ": ";
  if (!constructible) {
    out += "NOT constructible (";
    const auto& ob = *obstruction;
    const std::string p = std::to_string(ob.prime);
    if (ob.kind == Obstruction::Kind::non_fermat_prime) {
      out += p + " is not a Fermat prime";
    } else if (ob.exponent == 2) {
      out += p + " appears twice";
    } else {
      out += p + " appears " + std::to_string(ob.exponent) + " times";
    }
    return out + ")";
  }
  out += "constructible (" + std::to_string(n) + " = ";
  std::string factors;
  if (power_of_two == 1) {
    factors = "2";
  } else if (power_of_two > 1) {
    factors = "2^" + std::to_string(power_of_two);
  }
  for (u64 p : odd_primes) {
    if (!factors.empty()) factors += " * ";
    factors += std::to_string(p);
  }
  return out + factors + ")";
}

}  // namespace circdiv
