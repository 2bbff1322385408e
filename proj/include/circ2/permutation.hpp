#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circ2/dense_matrix.hpp"

namespace circ2 {

/// Number of k-cycles for each cycle length k. Sum of k * m_k equals n.
using CycleType = std::map<std::int64_t, std::int64_t>;

/*
 * A bijection on [n] = {0, ..., n-1}, stored as its image array:
 * images()[j] == alpha(j).
 */
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on [images.size()].
  explicit Permutation(std::vector<std::int64_t> images);

  static Permutation identity(std::int64_t n);

  /// Parses cycle notation such as "(3 2 1 0)(7 6 5 4)" on [n]; "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::int64_t n);

  std::int64_t size() const { return static_cast<std::int64_t>(images_.size()); }
  std::int64_t operator()(std::int64_t j) const { return images_.at(static_cast<std::size_t>(j)); }
  const std::vector<std::int64_t>& images() const { return images_; }

  /// Cycles including fixed points; each cycle starts at its largest element,
  /// cycles ordered by that element.
  std::vector<std::vector<std::int64_t>> cycles() const;

  /// "(3 2 1 0)(7 6 5 4)"; fixed points omitted, identity is "()".
  std::string to_cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int64_t> images_;
};

/// tau_n^k : i -> (i - k) mod n.
Permutation tau(std::int64_t n, std::int64_t k = 1);

/// (alpha o beta)(i) = alpha(beta(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& alpha, const Permutation& beta);

Permutation inverse(const Permutation& alpha);

CycleType cycle_type(const Permutation& alpha);

/// P_alpha with (P_alpha)_{alpha(j), j} = 1.
DenseMatrix matrix_of(const Permutation& alpha);

}  // namespace circ2
