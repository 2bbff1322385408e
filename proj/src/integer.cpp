#include "circ2/integer.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace circ2 {

std::int64_t gcd(std::int64_t n, std::int64_t s) {
  if (n == 0 && s == 0) throw std::domain_error("undefined gcd");
  return std::gcd(n, s);
}

std::int64_t lcm(std::int64_t n, std::int64_t s) {
  return std::lcm(n, s);
}

std::int64_t n_without_s(std::int64_t n, std::int64_t s) {
  if (s <= 0 || s >= n) {
    throw std::domain_error("n_without_s requires 0 < s < n (got n=" + std::to_string(n) +
                            ", s=" + std::to_string(s) + ")");
  }
  return n / std::gcd(n, s);
}

std::int64_t mod(std::int64_t x, std::int64_t n) {
  if (n <= 0) throw std::domain_error("mod requires a positive modulus");
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t n) {
  return (x - mod(x, n)) / n;
}

IntPair::IntPair(std::int64_t n_, std::int64_t s_) : n(n_), s(s_) {
  if (s <= 0 || s >= n) {
    throw std::domain_error("expected 0 < s < n (got n=" + std::to_string(n) +
                            ", s=" + std::to_string(s) + ")");
  }
}

}  // namespace circ2
