#pragma once

#include <cstdint>

namespace circ2 {

/// gcd(n, s), written (n,s). Throws std::domain_error if both are zero.
std::int64_t gcd(std::int64_t n, std::int64_t s);

std::int64_t lcm(std::int64_t n, std::int64_t s);

/// n\s := n / (n,s), read "n without s". Requires 0 < s < n.
std::int64_t n_without_s(std::int64_t n, std::int64_t s);

/// Least non-negative residue of x modulo n; requires n > 0.
std::int64_t mod(std::int64_t x, std::int64_t n);

/// Division rounding towards negative infinity; mod(x,n) + n*floor_div(x,n) == x.
std::int64_t floor_div(std::int64_t x, std::int64_t n);

/// A validated pair 0 < s < n.
struct IntPair {
  std::int64_t n;
  std::int64_t s;

  IntPair(std::int64_t n_, std::int64_t s_);

  std::int64_t gcd() const { return circ2::gcd(n, s); }
  std::int64_t without() const { return n / gcd(); }
};

}  // namespace circ2
