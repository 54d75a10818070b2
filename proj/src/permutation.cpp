#include "braidrep/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

constexpr int kMaxDegree = 20;

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw UsageError("permutation degree out of range: " + std::to_string(degree));
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int k = 2; k <= n; ++k) {
    result *= static_cast<std::uint64_t>(k);
  }
  return result;
}

Permutation::Permutation(int degree) {
  check_degree(degree);
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    images_[i] = static_cast<std::uint8_t>(i + 1);
  }
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int degree = static_cast<int>(images.size());
  check_degree(degree);
  std::vector<bool> seen(images.size() + 1, false);
  Permutation p;
  p.images_.reserve(images.size());
  for (int image : images) {
    if (image < 1 || image > degree || seen[image]) {
      throw UsageError("image vector is not a bijection");
    }
    seen[image] = true;
    p.images_.push_back(static_cast<std::uint8_t>(image));
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(
    int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    images[i] = i + 1;
  }
  std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
  for (const auto& cycle : cycles) {
    const std::vector<int> points(cycle);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int from = points[k];
      const int to = points[(k + 1) % points.size()];
      if (from < 1 || from > degree || used[from]) {
        throw UsageError("cycles are not disjoint or out of range");
      }
      used[from] = true;
      images[from - 1] = to;
    }
  }
  return from_images(images);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw UsageError("permutation degree mismatch");
  }
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[i] = images_[rhs.images_[i] - 1];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_even() const {
  // parity = (degree - number of cycles) mod 2
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1u) {
      seen[j] = true;
    }
  }
  return (images_.size() - cycles) % 2 == 0;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i + 1) {
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1u) {
      seen[j] = true;
      if (!first && images_.size() > 9) {
        out << ' ';
      }
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

std::uint64_t lex_rank(const Permutation& p) {
  const auto& images = p.images();
  const int degree = p.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i < degree; ++i) {
    // number of unused values smaller than images[i]
    int smaller = 0;
    for (int j = i + 1; j < degree; ++j) {
      if (images[j] < images[i]) {
        ++smaller;
      }
    }
    rank += static_cast<std::uint64_t>(smaller) * factorial(degree - 1 - i);
  }
  return rank + 1;
}

Permutation lex_unrank(int degree, std::uint64_t rank) {
  check_degree(degree);
  if (rank < 1 || rank > factorial(degree)) {
    throw UsageError("lex rank " + std::to_string(rank) + " out of range for degree " +
                     std::to_string(degree));
  }
  std::vector<int> pool(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    pool[i] = i + 1;
  }
  std::uint64_t rest = rank - 1;
  std::vector<int> images;
  images.reserve(pool.size());
  for (int i = degree; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rest / block);
    rest %= block;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation::from_images(images);
}

}  // namespace braidrep
