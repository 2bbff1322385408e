#include "circ2/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "circ2/integer.hpp"

namespace circ2 {

Permutation::Permutation(std::vector<std::int64_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::int64_t v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image array is not a bijection on [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::int64_t n) {
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::int64_t n) {
  std::vector<std::int64_t> images(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> current;
  bool open = false;

  auto close_cycle = [&] {
    for (std::size_t k = 0; k < current.size(); ++k) {
      std::int64_t from = current[k];
      if (from < 0 || from >= n || images[static_cast<std::size_t>(from)] != -1) {
        throw std::invalid_argument("invalid cycle notation");
      }
      images[static_cast<std::size_t>(from)] = current[(k + 1) % current.size()];
    }
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')' in cycle notation");
      close_cycle();
      open = false;
      ++i;
    } else if (c == ' ' || c == ',') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) && open) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      current.push_back(std::stoll(std::string(text.substr(i, j - i))));
      i = j;
    } else {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");

  for (std::int64_t j = 0; j < n; ++j) {
    if (images[static_cast<std::size_t>(j)] == -1) images[static_cast<std::size_t>(j)] = j;
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<std::int64_t>> Permutation::cycles() const {
  std::vector<std::vector<std::int64_t>> result;
  std::vector<bool> visited(images_.size(), false);
  // Visiting from the top down makes every cycle start at its largest element.
  for (std::int64_t start = size() - 1; start >= 0; --start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<std::int64_t> cycle;
    for (std::int64_t j = start; !visited[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      visited[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  std::reverse(result.begin(), result.end());
  return result;
}

std::string Permutation::to_cycle_notation() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k];
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation tau(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::domain_error("tau requires n >= 1");
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = mod(i - k, n);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& alpha, const Permutation& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::int64_t> images(static_cast<std::size_t>(alpha.size()));
  for (std::int64_t i = 0; i < alpha.size(); ++i) {
    images[static_cast<std::size_t>(i)] = alpha(beta(i));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& alpha) {
  std::vector<std::int64_t> images(static_cast<std::size_t>(alpha.size()));
  for (std::int64_t i = 0; i < alpha.size(); ++i) {
    images[static_cast<std::size_t>(alpha(i))] = i;
  }
  return Permutation(std::move(images));
}

CycleType cycle_type(const Permutation& alpha) {
  CycleType type;
  for (const auto& cycle : alpha.cycles()) ++type[static_cast<std::int64_t>(cycle.size())];
  return type;
}

DenseMatrix matrix_of(const Permutation& alpha) {
  DenseMatrix m(alpha.size(), alpha.size());
  for (std::int64_t j = 0; j < alpha.size(); ++j) m(alpha(j), j) = 1;
  return m;
}

}  // namespace circ2
